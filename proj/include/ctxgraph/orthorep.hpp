#pragma once

#include "ctxgraph/census.hpp"
#include "ctxgraph/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ctxgraph {

struct OrthonormalRepresentation {
  std::vector<std::vector<double>> vectors; ///< one per vertex, all of length dimension()
  std::vector<double> handle;
  Graph target;
  /// Vertex i of the representation plays target vertex relabel[i]; empty
  /// means the identity.
  std::vector<int> relabel;

  std::size_t dimension() const noexcept { return handle.size(); }
  std::size_t size() const noexcept { return vectors.size(); }
};

struct FaithfulnessThresholds {
  double orthogonal = 1e-9;     ///< |<v_i, v_j>| at most this counts as orthogonal
  double non_orthogonal = 1e-6; ///< every other pair must reach this
  double norm = 1e-12;
  double distinct = 1e-6; ///< minimum ||v_i - v_j||
};

/// Vectors of C_n (3-dimensional, handle e_0). Vertex k carries the paper's
/// vector for j = k + 1, so v_k is orthogonal exactly to v_{k +- (n-1)/2}.
OrthonormalRepresentation build_or_cycle(int n);

/// Vectors of the anticycle on n vertices, dimension n - 2, handle e_0;
/// v_j is orthogonal to v_k iff j and k are not consecutive mod n.
/// n = 5 delegates to build_or_cycle, since the pentagon is self-complementary.
OrthonormalRepresentation build_or_anticycle(int n);

struct FaithfulnessReport {
  bool pass = false;
  bool pattern_matches = false; ///< orthogonality graph equals the target up to the relabelling
  double max_orthogonal_residual = 0.0;
  double min_non_orthogonal = 0.0; ///< infinity when every pair is orthogonal
  double max_norm_error = 0.0;
  double min_distance = 0.0;
  std::string failure; ///< first failed check, empty on pass
};

/// Orthogonality graph: i ~ j iff |<v_i, v_j>| <= thresholds.orthogonal.
Graph orthogonality_graph(const OrthonormalRepresentation &rep,
                          const FaithfulnessThresholds &thresholds = {});

/// Faithful (iff) check. The orthogonality graph is compared with the target
/// by isomorphism for up to 13 vertices, otherwise through `relabel`.
FaithfulnessReport verify_faithful(const OrthonormalRepresentation &rep,
                                   const FaithfulnessThresholds &thresholds = {});

/// sum_j <v_j, handle>^2
double handle_value(const OrthonormalRepresentation &rep);

struct DimensionTerm {
  std::string source; ///< "clique", "odd-hole" or "odd-antihole"
  int value = 0;
  bool plumbing = false; ///< standard linear algebra rather than the antihole result
  std::vector<int> witness;
};

struct DimensionBound {
  int bound = 0;
  std::string winner;
  std::vector<DimensionTerm> terms;
};

/// Maximum of omega(G), 3 when G has an odd hole, and floor(2k/3) for the
/// largest odd antihole on k >= 5 vertices.
DimensionBound dimension_lower_bound(const Graph &g);

enum class WitnessCase { c1, c2, c3 };

const char *to_string(WitnessCase c) noexcept;

struct DimensionWitness {
  int n = 0;
  WitnessCase which = WitnessCase::c1;
  std::vector<int> vertex_set; ///< 1-based, in the figure numbering
  int bound = 0;               ///< floor(2n/3)
  bool verified = false;       ///< induced subgraph is K_k minus a (near-)perfect matching
};

/// n = 3m: {3i+1, 3i+2 : i < m}; n = 3m+1: the same; n = 3m+2: that plus 3m+1.
DimensionWitness dimension_witness(int n);

} // namespace ctxgraph
