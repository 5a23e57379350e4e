#include "support/oracles.hpp"

#include "ctxgraph/census.hpp"
#include "ctxgraph/error.hpp"
#include "ctxgraph/invariants.hpp"

#include <doctest.h>

using namespace ctxgraph;

TEST_CASE("independence number") {
  for (int n : {5, 7, 9, 11}) CHECK(independence_number(cycle(n)) == (n - 1) / 2);
  CHECK(independence_number(anticycle(9)) == 2);
  CHECK(independence_number(circulant(8, {1, 4})) == 3);
  const auto set = max_independent_set(cycle(9));
  CHECK(set.size() == 4);
  CHECK(cycle(9).is_independent(set));
}

TEST_CASE("clique number") {
  CHECK(clique_number(complete(7)) == 7);
  CHECK(clique_number(cycle(7)) == 2);
  CHECK(clique_number(disjunctive_product(anticycle(7), anticycle(7))) == 10);
  const CliqueResult r = max_clique(disjunctive_product(anticycle(7), anticycle(7)));
  CHECK(r.optimal);
  CHECK(disjunctive_product(anticycle(7), anticycle(7)).is_clique(r.clique));
  CHECK_THROWS_AS(clique_number(cycle(600)), ResourceCap);
}

TEST_CASE("clique search honours its budget") {
  CliqueSearchOptions options;
  options.budget_seconds = 1e-9;
  const Graph big = disjunctive_power(cycle(7), 3);
  const CliqueResult r = max_clique(big, options);
  CHECK_FALSE(r.optimal);
  CHECK(big.is_clique(r.clique));
  CHECK_THROWS_AS(clique_number(big, options), ResourceCap);
}

TEST_CASE("clique size does not depend on the thread count") {
  const Graph g = disjunctive_product(anticycle(7), anticycle(7));
  CliqueSearchOptions four;
  four.threads = 4;
  CHECK(max_clique(g).clique.size() == max_clique(g, four).clique.size());
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(cycle(5)) == 3);
  CHECK(chromatic_number(cycle(6)) == 2);
  for (int n = 1; n <= 8; ++n) CHECK(chromatic_number(complete(n)) == n);
  CHECK(chromatic_number(anticycle(7)) == 4);
  CHECK_THROWS_AS(chromatic_number(cycle(40)), ResourceCap);
}

TEST_CASE("maximal cliques") {
  const CliqueFamily c5 = maximal_cliques(cycle(5));
  CHECK(c5.cliques.size() == 5);
  for (const auto &c : c5.cliques) CHECK(c.size() == 2);
  const CliqueFamily k4 = maximal_cliques(complete(4));
  REQUIRE(k4.cliques.size() == 1);
  CHECK(k4.cliques[0] == std::vector<int>{0, 1, 2, 3});
  const CliqueFamily c7bar = maximal_cliques(anticycle(7));
  CHECK(c7bar.cliques.size() == 7);
  for (const auto &c : c7bar.cliques) {
    CHECK(c.size() == 3);
    CHECK(anticycle(7).is_clique(c));
  }
  CHECK(std::find(c7bar.cliques.begin(), c7bar.cliques.end(), std::vector<int>{0, 2, 4}) !=
        c7bar.cliques.end());
}

TEST_CASE("fractional packing") {
  CHECK(fractional_packing(cycle(5)) == Rational(5, 2));
  CHECK(fractional_packing(anticycle(7)) == Rational(7, 3));
  CHECK(fractional_packing(cycle(7)) == Rational(7, 2));
  CHECK(fractional_packing(complete(6)) == Rational(1));
  CHECK(fractional_packing_lp(cycle(5)) == Rational(5, 2));
}

TEST_CASE("LP packing equals n / omega on vertex-transitive graphs") {
  const std::vector<Graph> graphs = {cycle(5),  cycle(6),   cycle(9),           anticycle(7),
                                     anticycle(9), complete(5), circulant(8, {1, 4}), johnson(5, 2),
                                     circulant(12, {1, 5}), circulant(11, {2, 3})};
  for (const Graph &g : graphs) {
    CAPTURE(g.label());
    REQUIRE(g.vertex_transitive() == Transitivity::yes);
    CHECK(fractional_packing_lp(g) ==
          Rational(static_cast<long long>(g.order()), clique_number(g)));
  }
}

TEST_CASE("invariants agree with brute force up to twelve vertices") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 12;
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.05 * (trial % 12));
    CAPTURE(trial);
    CHECK(clique_number(g) == oracle::omega(g));
    CHECK(independence_number(g) == oracle::alpha(g));
    CHECK(independence_number(g) == clique_number(complement(g)));
    if (n <= 10) CHECK(chromatic_number(g) == oracle::chi(g));
    CHECK(fractional_packing(g) >= Rational(independence_number(g)));
  }
}

TEST_CASE("perfect graphs have omega = chi on every induced subgraph") {
  std::mt19937_64 rng(42);
  int perfect_seen = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_graph(rng, 4 + trial % 6, 0.5);
    if (!is_perfect(g)) continue;
    ++perfect_seen;
    for (std::uint32_t mask = 1; mask < (1U << g.order()); ++mask) {
      const Graph h = oracle::induced(g, mask);
      CHECK(clique_number(h) == chromatic_number(h));
    }
  }
  CHECK(perfect_seen > 20);
}
