#pragma once

#include "ctxgraph/graph.hpp"
#include "ctxgraph/lp.hpp"
#include "ctxgraph/rational.hpp"

#include <cstdint>
#include <vector>

namespace ctxgraph {

inline constexpr std::size_t clique_vertex_cap = 500;
inline constexpr std::size_t chromatic_vertex_cap = 32;
inline constexpr std::size_t maximal_clique_count_cap = 1'000'000;

struct CliqueSearchOptions {
  std::size_t vertex_cap = clique_vertex_cap;
  double budget_seconds = 0.0; ///< 0 means unlimited
  unsigned threads = 1;
};

struct CliqueResult {
  std::vector<int> clique; ///< sorted
  bool optimal = true;     ///< false when the budget ran out first
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

/// Maximum clique by colour-bounded branch and bound. Vertices are searched
/// in non-increasing degree order (ties by index). With several threads the
/// root branches are shared out and the incumbent size is common, so the
/// size is schedule independent; the witness may differ between equal-size
/// cliques.
CliqueResult max_clique(const Graph &g, const CliqueSearchOptions &options = {});

/// Raise ResourceCap if the graph is over the cap or the budget is exhausted.
int clique_number(const Graph &g, const CliqueSearchOptions &options = {});
int independence_number(const Graph &g, const CliqueSearchOptions &options = {});
std::vector<int> max_independent_set(const Graph &g, const CliqueSearchOptions &options = {});

/// DSATUR branch and bound; n <= chromatic_vertex_cap.
int chromatic_number(const Graph &g);

struct CliqueFamily {
  std::vector<std::vector<int>> cliques; ///< each sorted; family sorted lexicographically
  bool all_maximal = false;
};

/// Bron–Kerbosch with Tomita pivoting.
CliqueFamily maximal_cliques(const Graph &g, std::size_t max_count = maximal_clique_count_cap);

/// max sum w_i subject to sum_{i in C} w_i <= 1 for C in the family, 0 <= w_i <= 1.
LinearProgram packing_lp(const Graph &g, const CliqueFamily &family);

/// LP over all maximal cliques.
Rational fractional_packing_lp(const Graph &g);

/// n / omega when g is flagged vertex transitive, otherwise the LP.
Rational fractional_packing(const Graph &g, const CliqueSearchOptions &options = {});

} // namespace ctxgraph
