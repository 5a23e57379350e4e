#pragma once

#include "ctxgraph/vertex_set.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ctxgraph {

enum class Transitivity { unknown, yes, no };

const char *to_string(Transitivity t) noexcept;

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Adjacency is kept as one VertexSet row per vertex, always symmetric and
/// irreflexive. Values are cheap to share; every "mutation" returns a new
/// graph.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Self loops and out-of-range endpoints
  /// are rejected; repeated edges are rejected when `reject_duplicates`.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::string label = {},
                          Transitivity vt = Transitivity::unknown,
                          bool reject_duplicates = false);

  /// Builds a graph from a symmetric adjacency predicate.
  template <typename Pred>
  static Graph from_predicate(std::size_t n, Pred &&adjacent, std::string label = {},
                              Transitivity vt = Transitivity::unknown) {
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (adjacent(static_cast<int>(i), static_cast<int>(j))) {
          rows[i].set(j);
          rows[j].set(i);
        }
    return Graph(std::move(rows), std::move(label), vt);
  }

  std::size_t order() const noexcept { return rows_.size(); }
  bool adjacent(int u, int v) const noexcept {
    return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
  }
  const VertexSet &neighbors(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  std::size_t degree(int v) const noexcept { return neighbors(v).count(); }
  std::size_t edge_count() const noexcept;
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const; ///< sorted ascending

  const std::string &label() const noexcept { return label_; }
  Transitivity vertex_transitive() const noexcept { return vertex_transitive_; }

  Graph with_label(std::string label) const;
  Graph with_transitivity(Transitivity vt) const;

  /// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
  Graph induced(std::span<const int> vertices) const;
  Graph remove_vertex(int v) const;

  bool is_clique(std::span<const int> vertices) const;
  bool is_independent(std::span<const int> vertices) const;

  /// Same vertex count and identical adjacency; labels are ignored.
  bool same_adjacency(const Graph &other) const { return rows_ == other.rows_; }

private:
  Graph(std::vector<VertexSet> rows, std::string label, Transitivity vt)
      : rows_(std::move(rows)), label_(std::move(label)), vertex_transitive_(vt) {}

  friend Graph complement(const Graph &g);
  friend Graph disjunctive_product(const Graph &g, const Graph &h, std::size_t vertex_cap);

  std::vector<VertexSet> rows_;
  std::string label_;
  Transitivity vertex_transitive_ = Transitivity::unknown;
};

inline constexpr std::size_t default_product_cap = 20000;
inline constexpr std::size_t default_isomorphism_cap = 16;

// Catalog constructors; they flag vertex transitivity where it is known.
Graph cycle(int n);
Graph anticycle(int n);
Graph complete(int n);
Graph edgeless(int n);
Graph circulant(int n, const std::set<int> &connections);
Graph johnson(int n, int k);
Graph shrikhande();
/// K_d with the disjoint edges (0,1), (2,3), ... removed.
Graph complete_minus_matching(int d);

Graph complement(const Graph &g);

/// Co-normal product. Vertex (g, h) has index g * |V(H)| + h.
Graph disjunctive_product(const Graph &g, const Graph &h,
                          std::size_t vertex_cap = default_product_cap);
/// G * G * ... * G (m factors).
Graph disjunctive_power(const Graph &g, int m, std::size_t vertex_cap = default_product_cap);

/// An adjacency-preserving bijection f with f[v] in H for v in G, if any.
/// `pin` forces f[pin.first] = pin.second.
std::optional<std::vector<int>> find_isomorphism(const Graph &g, const Graph &h,
                                                 std::optional<std::pair<int, int>> pin = {},
                                                 std::size_t cap = default_isomorphism_cap);
bool is_isomorphic(const Graph &g, const Graph &h, std::size_t cap = default_isomorphism_cap);
bool is_automorphism(const Graph &g, std::span<const int> perm);

/// Decides transitivity by automorphism search (n <= cap), else unknown.
Transitivity detect_vertex_transitivity(const Graph &g, std::size_t cap = default_isomorphism_cap);

/// True iff the rotation i -> i+1 (mod n) is an automorphism.
bool is_circulant_labelled(const Graph &g);

/// Connected and 2-regular.
bool is_cycle_graph(const Graph &g);

} // namespace ctxgraph
