#pragma once

#include "ctxgraph/graph.hpp"

#include <cstdint>
#include <vector>

namespace ctxgraph {

inline constexpr std::size_t power_clique_vertex_cap = 4096;
inline constexpr std::size_t automorphism_group_cap = 100000;

struct PowerCliqueOptions {
  double budget_seconds = 0.0; ///< 0 means unlimited
};

struct PowerCliqueResult {
  int omega = 0;           ///< best size found; exact when `optimal`
  std::vector<int> clique; ///< vertices of G^{*m}, sorted
  bool optimal = true;
  int upper_bound = 0;        ///< layer-packing bound before any search
  int symmetric_lower = 0;    ///< best clique invariant under rotating the coordinates
  std::size_t representatives = 0; ///< first-layer cliques examined up to symmetry
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

/// All automorphisms of g by backtracking; empty if there are more than `cap`.
std::vector<std::vector<int>> automorphisms(const Graph &g, std::size_t cap = automorphism_group_cap);

/// Clique number of the m-th disjunctive power of a vertex-transitive graph.
///
/// The search looks at G^{*m} as |V(G)| layers of G^{*(m-1)} in each of the
/// m coordinates. A clique meets every layer in a clique of G^{*(m-1)}, and
/// two layers whose indices are non-adjacent in G together hold at most
/// omega(G^{*(m-1)}) vertices. These packing constraints give per-layer
/// size windows. Automorphisms act on each coordinate independently, so the
/// smallest layer of the first coordinate can be moved to index 0 and its
/// clique reduced to an orbit representative under Aut(G)^{m-1} x S_{m-1}.
///
/// When every prefix of the first-coordinate layers leaves at most two
/// chosen layers with unchosen non-adjacent partners (the complement of G is
/// a cycle, for instance), the remaining layers are chosen whole, one clique
/// of G^{*(m-1)} at a time, and failed states are cached on those open
/// layers. Otherwise each representative seeds a vertex-level branch and
/// bound that branches on layers still short of their window and prunes with
/// exact per-layer and per-pair clique numbers.
///
/// The initial incumbent is the best clique that is invariant under cyclic
/// rotation of the coordinates, found by weighted search over rotation orbits.
PowerCliqueResult power_clique(const Graph &g, int m, const PowerCliqueOptions &options = {});

} // namespace ctxgraph
