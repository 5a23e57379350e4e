#include "ctxgraph/census.hpp"
#include "ctxgraph/error.hpp"
#include "ctxgraph/events.hpp"
#include "ctxgraph/invariants.hpp"
#include "ctxgraph/orthorep.hpp"

#include <doctest.h>

#include <cmath>

using namespace ctxgraph;

namespace {

std::vector<InequalityInstance> instances() {
  std::vector<InequalityInstance> out = {build_chsh_events()};
  for (int n = 5; n <= 13; n += 2) {
    out.push_back(build_s_cycle(n));
    out.push_back(build_s_anticycle(n));
  }
  return out;
}

} // namespace

TEST_CASE("event text form") {
  const Event e = parse_event("1,0|3,5");
  CHECK(e.outcomes == std::vector<int>{1, 0});
  CHECK(e.measurements == std::vector<int>{3, 5});
  CHECK(to_string(e) == "1,0|3,5");
  CHECK(parse_event(to_string(e)) == e);
  CHECK(parse_event("0,1|5,3") == e);
  CHECK_THROWS_AS(parse_event("1|2,3"), InvalidInput);
  CHECK_THROWS_AS(parse_event("1,1|2,2"), InvalidInput);
  CHECK_THROWS_AS(parse_event("garbage"), InvalidInput);
}

TEST_CASE("exclusivity rule") {
  CHECK(exclusive(Event{{0, 2}, {1, 1}}, Event{{0, 2}, {-1, -1}}));
  CHECK_FALSE(exclusive(Event{{0, 2}, {1, 0}}, Event{{1, 3}, {1, 0}}));
  for (const auto &inst : instances())
    for (const Event &e : inst.events) {
      CHECK_FALSE(exclusive(e, e));
      for (const Event &f : inst.events) CHECK(exclusive(e, f) == exclusive(f, e));
    }
}

TEST_CASE("exclusivity graphs") {
  const Event single{{1}, {0}};
  const Graph one = exclusivity_graph(std::vector<Event>{single});
  CHECK(one.order() == 1);
  CHECK(one.edge_count() == 0);
  CHECK_THROWS_AS(exclusivity_graph(std::vector<Event>{single, single}), InvalidInput);
  CHECK(is_isomorphic(build_chsh_events().exclusivity, circulant(8, {1, 4})));
  CHECK(is_isomorphic(build_s_cycle(7).exclusivity, cycle(7)));
  for (int n = 5; n <= 13; n += 2) {
    CHECK(is_isomorphic(build_s_cycle(n).exclusivity, cycle(n)));
    CHECK(is_isomorphic(build_s_anticycle(n).exclusivity, complement(cycle(n))));
  }
}

TEST_CASE("CHSH instance") {
  const InequalityInstance chsh = build_chsh_events();
  CHECK(chsh.events.size() == 8);
  CHECK(chsh.exclusivity.edge_count() == 12);
  CHECK(chsh.nchv_bound == 3);
  CHECK(std::abs(chsh.quantum_bound.value - 3.41421) <= 1e-4);
}

TEST_CASE("cycle instances") {
  const InequalityInstance s5 = build_s_cycle(5);
  CHECK(s5.nchv_bound == 2);
  CHECK(s5.quantum_bound.value == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  const InequalityInstance s9 = build_s_cycle(9);
  CHECK(s9.nchv_bound == 4);
  CHECK(std::abs(s9.quantum_bound.value - 4.3601) <= 1e-4);
  const InequalityInstance s7 = build_s_cycle(7);
  CHECK(exclusive(s7.events[0], s7.events[3]));
  CHECK_THROWS_AS(build_s_cycle(6), InvalidParameter);
}

TEST_CASE("anticycle instances") {
  const InequalityInstance a7 = build_s_anticycle(7);
  CHECK(a7.nchv_bound == 2);
  CHECK(std::abs(a7.quantum_bound.value - 2.1099) <= 1e-4);
  for (const Event &e : a7.events) {
    // Outcome 1 on the leading measurement, 0 on the (n - 3) / 2 others.
    CHECK(e.measurements.size() == 3);
    CHECK(e.outcomes == std::vector<int>{1, 0, 0});
  }
  for (int i = 0; i < 7; ++i) CHECK_FALSE(exclusive(a7.events[i], a7.events[(i + 1) % 7]));
  const Graph g9 = build_s_anticycle(9).exclusivity;
  for (int v = 0; v < 9; ++v) CHECK(g9.degree(v) == 6);
}

TEST_CASE("compatibility graph matches the exclusivity graph") {
  for (int n = 5; n <= 11; n += 2) {
    CAPTURE(n);
    const InequalityInstance c = build_s_cycle(n);
    CHECK(is_isomorphic(compatibility_graph(c.events), c.exclusivity));
    const InequalityInstance a = build_s_anticycle(n);
    CHECK(is_isomorphic(compatibility_graph(a.events), a.exclusivity));
  }
}

TEST_CASE("quantum value exceeds the NCHV bound and nchv equals alpha") {
  for (const auto &inst : instances()) {
    CAPTURE(inst.name());
    CHECK(inst.quantum_bound.value > inst.nchv_bound);
    CHECK(independence_number(inst.exclusivity) == inst.nchv_bound);
  }
  CHECK(quantum_value(build_s_cycle(5), build_or_cycle(5)) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-10));
  CHECK(std::abs(quantum_value(build_s_anticycle(7), build_or_anticycle(7)) - 2.1099) <= 1e-4);
  for (int n = 5; n <= 11; n += 2) {
    CHECK(quantum_value(build_s_cycle(n), build_or_cycle(n)) > build_s_cycle(n).nchv_bound);
    CHECK(quantum_value(build_s_anticycle(n), build_or_anticycle(n)) > 2);
  }
  OrthonormalRepresentation flat = build_or_cycle(5);
  for (auto &v : flat.vectors) v[0] = 0;
  CHECK(quantum_value(build_s_cycle(5), flat) == 0.0);
  CHECK_THROWS_AS(quantum_value(build_s_cycle(7), build_or_anticycle(7)), InvalidInput);
}
