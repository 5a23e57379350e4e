#pragma once

#include "ctxgraph/graph.hpp"
#include "ctxgraph/orthorep.hpp"
#include "ctxgraph/theta.hpp"

#include <span>
#include <string>
#include <vector>

namespace ctxgraph {

/// "outcomes a_k were obtained for measurements m_k".
struct Event {
  std::vector<int> measurements;
  std::vector<int> outcomes;

  /// Sorted (measurement, outcome) pairs; equality is structural.
  std::vector<std::pair<int, int>> canonical() const;
  friend bool operator==(const Event &a, const Event &b) { return a.canonical() == b.canonical(); }

  /// Throws InvalidInput on length mismatch or a repeated measurement.
  void validate() const;
};

/// "a1,a2,...|m1,m2,..."
std::string to_string(const Event &e);
Event parse_event(const std::string &text);

/// Some shared measurement carries different outcomes.
bool exclusive(const Event &e, const Event &f);

/// One vertex per event, in order; duplicate events raise InvalidInput.
Graph exclusivity_graph(std::span<const Event> events, std::string label = {});

/// Measurements as vertices (sorted identifiers), adjacent when they appear
/// together in some event.
Graph compatibility_graph(std::span<const Event> events, std::vector<int> *ids = nullptr);

enum class InequalityFamily { chsh, s_cycle, s_anticycle };

const char *to_string(InequalityFamily f) noexcept;

struct InequalityInstance {
  InequalityFamily family = InequalityFamily::chsh;
  int n = 0; ///< 8 for CHSH
  std::vector<Event> events;
  Graph exclusivity;
  int nchv_bound = 0;
  ThetaValue quantum_bound;

  std::string name() const; ///< "chsh", "s_cycle(7)", ...
};

/// CHSH identifiers: A0 = 0, A1 = 1, B0 = 2, B1 = 3; P(a,b|x,y) measures {x, 2 + y}.
inline constexpr int chsh_a0 = 0;
inline constexpr int chsh_a1 = 1;
inline constexpr int chsh_b0 = 2;
inline constexpr int chsh_b1 = 3;

InequalityInstance build_chsh_events();

/// Event i (1-based) is P(1,0 | i, i + floor(n/2)), identifiers mod n in 1..n.
InequalityInstance build_s_cycle(int n);

/// Event i is P(1,0,...,0 | i, i+2, i+4, ..., i+n-3), identifiers mod n in
/// 1..n. n = 5 reuses the pentagon events.
InequalityInstance build_s_anticycle(int n);

/// Sum of squared overlaps of the representation's vectors with its handle.
/// The representation's target must be isomorphic to the exclusivity graph.
double quantum_value(const InequalityInstance &inst, const OrthonormalRepresentation &rep);

} // namespace ctxgraph
