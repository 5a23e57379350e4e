#pragma once

#include "ctxgraph/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ctxgraph {

inline constexpr std::size_t census_target_cap = 12;
inline constexpr std::size_t minimal_imperfection_cap = 16;

/// Number of vertex subsets of `g` inducing a copy of `target`.
///
/// Subsets are enumerated in lexicographic order; partial subsets are pruned
/// on induced edge count and maximum degree, and complete ones are filtered by
/// degree multiset before the isomorphism test. `threads > 1` splits the work
/// by leading vertex; the total does not depend on scheduling.
std::uint64_t count_induced(const Graph &g, const Graph &target, unsigned threads = 1);

enum class HoleKind { hole, antihole };

const char *to_string(HoleKind kind) noexcept;

struct HoleWitness {
  HoleKind kind = HoleKind::hole;
  /// Cycle order, starting at the smallest vertex and stepping to its smaller
  /// cycle neighbour. For an antihole the cycle lives in the complement.
  std::vector<int> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  bool operator==(const HoleWitness &) const = default;
};

/// Shortest induced odd cycle of length >= min_len; among equal lengths, the
/// lexicographically smallest vertex set.
std::optional<HoleWitness> find_odd_hole(const Graph &g, int min_len = 5);

/// Induced cycle of exactly `length` vertices (lexicographically smallest
/// vertex set), in cycle order.
std::optional<std::vector<int>> find_induced_cycle(const Graph &g, int length);

/// Smallest odd hole of the complement, reported as an antihole of `g`.
std::optional<HoleWitness> find_odd_antihole(const Graph &g, int min_len = 5);
bool has_odd_antihole(const Graph &g);

/// Largest odd antihole (length >= 5) induced in `g`, if any.
std::optional<HoleWitness> find_largest_odd_antihole(const Graph &g);

/// Perfect iff neither g nor its complement has an induced odd cycle of
/// length >= 5.
bool is_perfect(const Graph &g);

/// Imperfect, and perfect after deleting any single vertex.
bool is_minimally_imperfect(const Graph &g);

struct CensusTarget {
  std::string name; ///< "C5", "Cbar7", ...
  Graph graph;
};

/// "C<n>" is the n-cycle, "Cbar<n>" its complement.
CensusTarget parse_census_target(const std::string &name);
std::vector<CensusTarget> parse_census_targets(const std::string &comma_list);
std::vector<CensusTarget> default_census_targets(); ///< C5, C7, Cbar7, C9, Cbar9

struct CensusCount {
  std::string target;
  std::uint64_t count = 0;
  double elapsed_ms = 0.0;
};

struct CensusReport {
  std::string name; ///< row name, e.g. "CHSH"; may be empty
  std::string graph;
  std::vector<CensusCount> counts;

  std::uint64_t count_of(const std::string &target) const;
};

CensusReport run_census(const Graph &g, const std::vector<CensusTarget> &targets,
                        unsigned threads = 1, std::string name = {});

struct Table1Row {
  std::string name;
  Graph graph;
};

/// KCBS (C_5), CHSH (Ci_8(1,4)), KCBS-twin (J(5,2)), Mermin (complement of
/// the Shrikhande graph).
std::vector<Table1Row> table1_rows();
std::vector<CensusReport> table1_census(unsigned threads = 1);

} // namespace ctxgraph
