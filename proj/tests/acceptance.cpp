// One line per acceptance criterion. The long clique search for three copies
// of the heptagon complement runs only when CTXGRAPH_EXTENDED_TESTS is set.

#include "support/samples.hpp"

#include "ctxgraph/census.hpp"
#include "ctxgraph/eprinciple.hpp"
#include "ctxgraph/events.hpp"
#include "ctxgraph/invariants.hpp"
#include "ctxgraph/orthorep.hpp"
#include "ctxgraph/report.hpp"
#include "ctxgraph/theta.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace ctxgraph;

namespace {

int failures = 0;

// `check` appends a reason to `why` for each failed condition.
struct Checker {
  std::ostringstream why;
  bool ok = true;

  void operator()(bool condition, const std::string &what) {
    if (condition) return;
    ok = false;
    why << (why.tellp() > 0 ? "; " : "") << what;
  }
};

void criterion(int id, const std::string &title, double limit_seconds,
               const std::function<void(Checker &)> &body) {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception &e) {
    check(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check(seconds < limit_seconds, "over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit");
  std::ostringstream line;
  line << "criterion " << id << ": " << (check.ok ? "PASS" : "FAIL") << "  " << title << "  ("
       << std::fixed;
  line.precision(2);
  line << seconds << " s)";
  if (!check.ok) line << "  " << check.why.str();
  std::cout << line.str() << std::endl;
  failures += !check.ok;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool extended_enabled() {
  const char *flag = std::getenv("CTXGRAPH_EXTENDED_TESTS");
  return flag && *flag && std::string(flag) != "0";
}

} // namespace

int main() {
  const bool extended = extended_enabled();

  criterion(1, "cycle table: alpha, closed form vs SDP", 30, [](Checker &check) {
    for (int n : {5, 7, 9, 11}) {
      check(independence_number(cycle(n)) == (n - 1) / 2, "alpha(C" + std::to_string(n) + ")");
      check(near(theta_cycle(n).value, theta_sdp(cycle(n)).value, 1e-4), "theta(C" + std::to_string(n) + ")");
    }
    check(near(theta_cycle(5).value, std::sqrt(5.0), 1e-9), "theta(C5) = sqrt 5");
  });

  criterion(2, "anticycle table: alpha, 2.1099, product identity", 10, [](Checker &check) {
    for (int n = 5; n <= 15; n += 2)
      check(independence_number(anticycle(n)) == 2, "alpha(Cbar" + std::to_string(n) + ")");
    check(near(theta_anticycle(7).value, 2.1099, 5e-4), "theta(Cbar7)");
    for (int n = 5; n <= 101; n += 2)
      check(near(theta_cycle(n).value * theta_anticycle(n).value, n, 1e-12 * n),
            "product identity at n = " + std::to_string(n));
  });

  criterion(3, "orthonormal representations faithful and optimal", 5, [](Checker &check) {
    for (int n = 5; n <= 15; n += 2)
      for (bool anti : {false, true}) {
        const auto rep = anti ? build_or_anticycle(n) : build_or_cycle(n);
        const auto f = verify_faithful(rep);
        const std::string name = (anti ? "anticycle " : "cycle ") + std::to_string(n);
        check(f.pass && f.max_orthogonal_residual <= 1e-9 && f.min_non_orthogonal >= 1e-6 &&
                  f.max_norm_error <= 1e-12,
              name + " faithful");
        const double closed = anti ? theta_anticycle(n).value : theta_cycle(n).value;
        check(near(handle_value(rep), closed, 1e-9), name + " handle value");
      }
  });

  criterion(4, "Table 1 census", 60, [](Checker &check) {
    const auto rows = table1_census();
    const std::uint64_t c5[] = {1, 8, 12, 96};
    check(rows.size() == 4, "four rows");
    for (std::size_t i = 0; i < rows.size() && i < 4; ++i) {
      check(rows[i].count_of("C5") == c5[i], rows[i].name + " C5");
      for (const char *t : {"C7", "Cbar7", "C9", "Cbar9"})
        check(rows[i].count_of(t) == 0, rows[i].name + " " + t);
    }
  });

  std::optional<double> e3;
  criterion(5, "E-principle values", 120, [](Checker &check) {
    check(e_bound(cycle(5), 1).p == Rational(5, 2), "p(C5)");
    const EValue c5 = e_bound(cycle(5), 2);
    check(c5.p == Rational(5), "p(C5^2)");
    check(near(c5.value, std::sqrt(5.0), 1e-9), "E2(C5)");
    check(e_bound(cycle(7), 1).p == Rational(7, 2), "p(C7)");
    check(near(e_bound(cycle(7), 2).value, 3.5, 1e-12), "E2(C7)");
    check(e_bound(anticycle(7), 1).p == Rational(7, 3), "p(Cbar7)");
    const EValue a7 = e_bound(anticycle(7), 2);
    check(a7.omega == 10, "omega(Cbar7^2)");
    check(near(a7.value, 7 / std::sqrt(10.0), 1e-9), "E2(Cbar7)");
  });
  if (extended) {
    criterion(5, "extended tier: omega(Cbar7^3) = 33", 3600, [&](Checker &check) {
      const EValue v = e_bound(anticycle(7), 3, EOptions::extended());
      check(v.omega == 33, "omega = " + std::to_string(v.omega));
      check(near(v.value, 7 / std::cbrt(33.0), 1e-9), "E3(Cbar7)");
      e3 = v.value;
    });
  } else {
    std::cout << "criterion 5: SKIP  extended tier (set CTXGRAPH_EXTENDED_TESTS=1)" << std::endl;
  }

  criterion(6, "heptagon complement bound chain", 120, [&](Checker &check) {
    const EChain chain = chain_report(anticycle(7), 2);
    check(chain.nchv == 2, "NCHV");
    check(near(chain.quantum, 2.1099, 5e-4), "Q");
    check(chain.e.size() == 2, "E1 and E2 present");
    if (chain.e.size() < 2) return;
    check(near(chain.e[1].value, 2.2136, 5e-4), "E2");
    check(near(chain.e[0].value, 2.3333, 5e-4), "E1");
    double below = chain.quantum;
    if (e3) {
      check(near(*e3, 2.1824, 5e-4), "E3");
      check(chain.quantum < *e3, "Q < E3");
      below = *e3;
    }
    check(chain.nchv < chain.quantum && below < chain.e[1].value && chain.e[1].value < chain.e[0].value,
          "ordering");
  });

  criterion(7, "dimension bounds and witnesses of antiholes", 5, [](Checker &check) {
    const int expected[] = {3, 4, 6, 7, 8, 10};
    for (int n = 5; n <= 15; n += 2) {
      check(dimension_lower_bound(anticycle(n)).bound == expected[(n - 5) / 2],
            "bound at n = " + std::to_string(n));
      const DimensionWitness w = dimension_witness(n);
      check(w.verified && w.bound == expected[(n - 5) / 2], "witness at n = " + std::to_string(n));
    }
  });

  criterion(8, "perfect graph properties on random samples", 300, [](Checker &check) {
    for (const Graph &g : oracle::weak_perfect_sample())
      check(is_perfect(g) == is_perfect(complement(g)), "weak perfect graph theorem");
    for (const Graph &g : oracle::berge_sample())
      check((!find_odd_hole(g) && !has_odd_antihole(g)) == oracle::perfect_by_definition(g),
            "structural vs Berge definition");
    for (const Graph &g : oracle::minimal_imperfect_sample())
      check(is_minimally_imperfect(g) == oracle::odd_hole_or_antihole(g), "minimal imperfection");
  });

  criterion(9, "contextual graphs carry witnesses, perfect graphs are noncontextual", 600, [](Checker &check) {
    std::vector<Graph> corpus = {cycle(5), cycle(6), cycle(7), cycle(9), cycle(11), anticycle(7),
                                 anticycle(9), anticycle(11), complete(5), circulant(8, {1, 4}),
                                 johnson(5, 2), complement(shrikhande()), complete_minus_matching(6)};
    for (const auto &list : {oracle::weak_perfect_sample(), oracle::berge_sample(), oracle::minimal_imperfect_sample()})
      corpus.insert(corpus.end(), list.begin(), list.end());
    int qcg = 0;
    for (const Graph &g : corpus) {
      const AnalysisReport r = analyze(g);
      if (r.verdict == Verdict::qcg) {
        ++qcg;
        check(r.hole || r.antihole, "QCG without witness: " + g.label());
      }
      if (r.perfect == true)
        check(r.verdict == Verdict::qncg && std::abs(r.theta->value - *r.alpha) <= 1e-4,
              "perfect but not QNCG: " + g.label());
    }
    check(qcg > 50, "corpus exercises contextual graphs");
  });

  criterion(10, "CHSH: NCHV bound 3 and SDP 2 + sqrt 2 against a variational oracle", 60, [](Checker &check) {
    const Graph g = circulant(8, {1, 4});
    check(independence_number(g) == 3, "alpha");
    const double sdp = theta_sdp(g).value;
    check(near(sdp, 3.41421, 1e-4), "SDP");
    std::vector<oracle::BipartiteEvent> events;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int a : {1, -1}) events.push_back({x, y, a, (x & y) ? -a : a});
    check(near(sdp, oracle::seesaw_max(events), 1e-4), "variational oracle");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
