#include "ctxgraph/events.hpp"

#include "ctxgraph/error.hpp"

#include <algorithm>
#include <sstream>

namespace ctxgraph {

std::vector<std::pair<int, int>> Event::canonical() const {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < measurements.size() && i < outcomes.size(); ++i)
    pairs.emplace_back(measurements[i], outcomes[i]);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

void Event::validate() const {
  if (measurements.size() != outcomes.size())
    throw InvalidInput("event has " + std::to_string(outcomes.size()) + " outcomes for " +
                       std::to_string(measurements.size()) + " measurements");
  if (measurements.empty()) throw InvalidInput("event without measurements");
  std::vector<int> sorted = measurements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("event repeats a measurement");
}

namespace {

std::string join(const std::vector<int> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<int> split_ints(const std::string &text, const std::string &whole) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception &) {
      throw InvalidInput("bad event '" + whole + "'");
    }
    if (used != item.size()) throw InvalidInput("bad event '" + whole + "'");
    out.push_back(value);
  }
  return out;
}

void require_odd(int n, int min, const char *what) {
  if (n < min || n % 2 == 0)
    throw InvalidParameter(std::string(what) + " needs odd n >= " + std::to_string(min) +
                           ", got " + std::to_string(n));
}

int residue(int i, int n) { return ((i - 1) % n + n) % n + 1; }

bool same_up_to_isomorphism(const Graph &a, const Graph &b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.same_adjacency(b)) return true;
  if (is_cycle_graph(a) && is_cycle_graph(b)) return true;
  if (is_cycle_graph(complement(a)) && is_cycle_graph(complement(b))) return true;
  return is_isomorphic(a, b);
}

} // namespace

std::string to_string(const Event &e) { return join(e.outcomes) + "|" + join(e.measurements); }

Event parse_event(const std::string &text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) throw InvalidInput("event '" + text + "' lacks '|'");
  Event e;
  e.outcomes = split_ints(text.substr(0, bar), text);
  e.measurements = split_ints(text.substr(bar + 1), text);
  e.validate();
  return e;
}

bool exclusive(const Event &e, const Event &f) {
  for (std::size_t i = 0; i < e.measurements.size(); ++i)
    for (std::size_t j = 0; j < f.measurements.size(); ++j)
      if (e.measurements[i] == f.measurements[j] && e.outcomes[i] != f.outcomes[j]) return true;
  return false;
}

Graph exclusivity_graph(std::span<const Event> events, std::string label) {
  for (const auto &e : events) e.validate();
  for (std::size_t i = 0; i < events.size(); ++i)
    for (std::size_t j = i + 1; j < events.size(); ++j)
      if (events[i] == events[j])
        throw InvalidInput("duplicate event " + to_string(events[i]));
  return Graph::from_predicate(
      events.size(),
      [&](int i, int j) {
        return exclusive(events[static_cast<std::size_t>(i)], events[static_cast<std::size_t>(j)]);
      },
      std::move(label));
}

Graph compatibility_graph(std::span<const Event> events, std::vector<int> *ids) {
  std::vector<int> all;
  for (const auto &e : events) all.insert(all.end(), e.measurements.begin(), e.measurements.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  auto index = [&](int m) {
    return static_cast<int>(std::lower_bound(all.begin(), all.end(), m) - all.begin());
  };
  std::vector<Edge> edges;
  for (const auto &e : events)
    for (std::size_t i = 0; i < e.measurements.size(); ++i)
      for (std::size_t j = i + 1; j < e.measurements.size(); ++j) {
        int a = index(e.measurements[i]);
        int b = index(e.measurements[j]);
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
      }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (ids) *ids = all;
  return Graph::from_edges(all.size(), edges);
}

const char *to_string(InequalityFamily f) noexcept {
  switch (f) {
  case InequalityFamily::chsh:
    return "chsh";
  case InequalityFamily::s_cycle:
    return "s_cycle";
  case InequalityFamily::s_anticycle:
    return "s_anticycle";
  }
  return "chsh";
}

std::string InequalityInstance::name() const {
  if (family == InequalityFamily::chsh) return "chsh";
  return std::string(to_string(family)) + "(" + std::to_string(n) + ")";
}

InequalityInstance build_chsh_events() {
  InequalityInstance inst;
  inst.family = InequalityFamily::chsh;
  struct Row {
    int a, b, x, y;
  };
  constexpr Row rows[] = {{1, 1, 0, 0},  {-1, -1, 0, 0}, {1, 1, 0, 1},  {-1, -1, 0, 1},
                          {1, 1, 1, 0},  {-1, -1, 1, 0}, {1, -1, 1, 1}, {-1, 1, 1, 1}};
  for (const Row &r : rows)
    inst.events.push_back({{chsh_a0 + r.x, chsh_b0 + r.y}, {r.a, r.b}});
  inst.n = static_cast<int>(inst.events.size());
  inst.exclusivity = exclusivity_graph(inst.events, "chsh");
  inst.nchv_bound = 3;
  inst.quantum_bound = theta_sdp(inst.exclusivity);
  return inst;
}

InequalityInstance build_s_cycle(int n) {
  require_odd(n, 5, "build_s_cycle");
  InequalityInstance inst;
  inst.family = InequalityFamily::s_cycle;
  inst.n = n;
  for (int i = 1; i <= n; ++i) inst.events.push_back({{i, residue(i + n / 2, n)}, {1, 0}});
  inst.exclusivity = exclusivity_graph(inst.events, inst.name());
  inst.nchv_bound = (n - 1) / 2;
  inst.quantum_bound = theta_cycle(n);
  return inst;
}

InequalityInstance build_s_anticycle(int n) {
  require_odd(n, 5, "build_s_anticycle");
  if (n == 5) {
    InequalityInstance inst = build_s_cycle(5);
    inst.family = InequalityFamily::s_anticycle;
    inst.exclusivity = inst.exclusivity.with_label(inst.name());
    inst.quantum_bound = theta_anticycle(5);
    return inst;
  }
  InequalityInstance inst;
  inst.family = InequalityFamily::s_anticycle;
  inst.n = n;
  for (int i = 1; i <= n; ++i) {
    Event e{{i}, {1}};
    for (int k = 2; k <= n - 3; k += 2) {
      e.measurements.push_back(residue(i + k, n));
      e.outcomes.push_back(0);
    }
    inst.events.push_back(std::move(e));
  }
  inst.exclusivity = exclusivity_graph(inst.events, inst.name());
  inst.nchv_bound = 2;
  inst.quantum_bound = theta_anticycle(n);
  return inst;
}

double quantum_value(const InequalityInstance &inst, const OrthonormalRepresentation &rep) {
  if (!same_up_to_isomorphism(rep.target, inst.exclusivity))
    throw InvalidInput("representation target does not match the exclusivity graph of " +
                       inst.name());
  return handle_value(rep);
}

} // namespace ctxgraph
