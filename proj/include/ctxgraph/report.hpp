#pragma once

#include "ctxgraph/census.hpp"
#include "ctxgraph/graph.hpp"
#include "ctxgraph/invariants.hpp"
#include "ctxgraph/theta.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ctxgraph {

struct AnalysisOptions {
  std::size_t max_vertices = clique_vertex_cap;
  double clique_budget_seconds = 0.0; ///< 0 means unlimited
  unsigned threads = 1;
  /// Return what was computed before a cap was hit instead of throwing.
  bool partial = false;
};

struct DimensionSummary {
  int bound = 0;
  std::string source; ///< "clique", "odd-hole" or "odd-antihole"
};

struct AnalysisReport {
  std::string graph;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::optional<int> alpha;
  std::optional<int> omega;
  std::optional<int> chi; ///< only up to the chromatic cap
  std::optional<ThetaValue> theta;
  std::optional<bool> perfect;
  std::optional<bool> minimal_imperfect;
  /// Smallest odd hole and antihole, vertices 1-based.
  std::optional<HoleWitness> hole;
  std::optional<HoleWitness> antihole;
  std::optional<Verdict> verdict;
  std::optional<double> margin;
  std::optional<DimensionSummary> dimension;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::string incomplete; ///< why the report stops early; empty when complete

  /// QCG implies a hole or antihole witness, and a perfect graph is never QCG.
  bool consistent() const;
};

/// Runs every analysis in turn. A ResourceCap aborts unless options.partial
/// is set, in which case the remaining fields stay empty and `incomplete`
/// holds the message.
AnalysisReport analyze(const Graph &g, const AnalysisOptions &options = {});

} // namespace ctxgraph
