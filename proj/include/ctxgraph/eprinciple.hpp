#pragma once

#include "ctxgraph/graph.hpp"
#include "ctxgraph/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ctxgraph {

/// Default tier: powers up to 343 vertices with a ten-minute clique budget.
inline constexpr std::size_t e_default_vertex_cap = 343;
inline constexpr double e_default_budget_seconds = 600.0;
inline constexpr double e_extended_budget_seconds = 3600.0;

struct EOptions {
  std::size_t vertex_cap = e_default_vertex_cap;
  double budget_seconds = e_default_budget_seconds; ///< 0 means unlimited
  unsigned threads = 1;                             ///< used by the m = 1 searches

  static EOptions extended() { return {e_default_vertex_cap, e_extended_budget_seconds, 1}; }
};

struct EValue {
  int m = 1;
  Rational p{0};     ///< Rosenfeld number of G^{*m}
  double value = 0;  ///< p^{1/m}
  int omega = 0;     ///< clique number of G^{*m}; 0 when p came from the LP
  double elapsed_ms = 0;
};

/// p(G^{*m}) = n^m / omega(G^{*m}) for vertex-transitive G, and its m-th
/// root. Graphs not flagged transitive get the clique LP at m = 1 and are
/// refused for larger m. Raises ResourceCap when the power is over the cap or
/// the clique search runs out of budget; the message names the largest m
/// that fits the cap.
EValue e_bound(const Graph &g, int m, const EOptions &options = {});

struct ESkip {
  int m = 0;
  std::string reason;

  bool operator==(const ESkip &) const = default;
};

struct EChain {
  std::string graph;
  int nchv = 0;
  double quantum = 0;
  std::vector<EValue> e;
  std::vector<ESkip> skipped;
};

/// nchv = alpha(G), quantum = theta(G), then e_bound for m = 1..max_m.
/// Values that fail on a cap or budget are listed in `skipped`.
EChain chain_report(const Graph &g, int max_m, const EOptions &options = {});

} // namespace ctxgraph
