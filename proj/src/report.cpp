#include "ctxgraph/report.hpp"

#include "ctxgraph/error.hpp"
#include "ctxgraph/invariants.hpp"
#include "ctxgraph/orthorep.hpp"

#include <chrono>

namespace ctxgraph {

namespace {

HoleWitness one_based(HoleWitness w) {
  for (int &v : w.vertices) ++v;
  return w;
}

class Stopwatch {
public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

} // namespace

bool AnalysisReport::consistent() const {
  if (verdict == Verdict::qcg && !hole && !antihole) return false;
  if (perfect == true && verdict == Verdict::qcg) return false;
  return true;
}

AnalysisReport analyze(const Graph &g, const AnalysisOptions &options) {
  AnalysisReport r;
  r.graph = g.label();
  r.vertices = g.order();
  r.edges = g.edge_count();
  if (g.order() > options.max_vertices) {
    const std::string msg = "graph has " + std::to_string(g.order()) +
                            " vertices, over --max-vertices " + std::to_string(options.max_vertices);
    if (!options.partial) throw ResourceCap(msg);
    r.incomplete = msg;
    return r;
  }

  CliqueSearchOptions clique;
  clique.vertex_cap = options.max_vertices;
  clique.budget_seconds = options.clique_budget_seconds;
  clique.threads = options.threads;

  Stopwatch clock;
  try {
    r.alpha = independence_number(g, clique);
    r.timings_ms.emplace_back("alpha", clock.lap());
    r.omega = clique_number(g, clique);
    r.timings_ms.emplace_back("omega", clock.lap());
    if (g.order() <= chromatic_vertex_cap) {
      r.chi = chromatic_number(g);
      r.timings_ms.emplace_back("chi", clock.lap());
    }

    if (auto h = find_odd_hole(g)) r.hole = one_based(std::move(*h));
    if (auto a = find_odd_antihole(g)) r.antihole = one_based(std::move(*a));
    r.perfect = !r.hole && !r.antihole;
    if (g.order() <= minimal_imperfection_cap) {
      r.minimal_imperfect = is_minimally_imperfect(g);
    } else {
      // Beyond the direct test, the minimally imperfect graphs are exactly
      // the odd holes and antiholes, so the graph must be its own witness.
      r.minimal_imperfect = (r.hole && r.hole->length() == g.order()) ||
                            (r.antihole && r.antihole->length() == g.order());
    }
    r.timings_ms.emplace_back("perfection", clock.lap());

    r.theta = theta(g);
    r.timings_ms.emplace_back("theta", clock.lap());
    const ContextualityClass cls = classify_with(*r.alpha, *r.theta);
    r.verdict = cls.verdict;
    r.margin = cls.margin;

    const DimensionBound dim = dimension_lower_bound(g);
    r.dimension = DimensionSummary{dim.bound, dim.winner};
    r.timings_ms.emplace_back("dimension", clock.lap());
  } catch (const ResourceCap &e) {
    if (!options.partial) throw;
    r.incomplete = e.what();
  }
  return r;
}

} // namespace ctxgraph
