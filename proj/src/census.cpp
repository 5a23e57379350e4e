#include "ctxgraph/census.hpp"

#include "ctxgraph/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace ctxgraph {

const char *to_string(HoleKind kind) noexcept {
  return kind == HoleKind::hole ? "hole" : "antihole";
}

namespace {

class InducedCounter {
public:
  InducedCounter(const Graph &g, const Graph &target)
      : g_(g), target_(target), k_(target.order()), target_edges_(target.edge_count()),
        target_degrees_(target.degree_sequence()) {
    max_degree_ = target_degrees_.empty() ? 0 : target_degrees_.back();
  }

  std::uint64_t count_from(int lead) {
    count_ = 0;
    chosen_.clear();
    in_set_ = VertexSet(g_.order());
    degrees_.assign(g_.order(), 0);
    if (push(lead)) {
      descend(lead + 1);
      pop();
    }
    return count_;
  }

private:
  // Adds v; returns false (and leaves state untouched) when the partial set
  // can no longer grow into a copy of the target.
  bool push(int v) {
    const std::size_t links = g_.neighbors(v).intersection_count(in_set_);
    const std::size_t edges = edges_ + links;
    if (edges > target_edges_ || links > max_degree_) return false;
    bool degree_ok = true;
    g_.neighbors(v).for_each([&](int u) {
      if (in_set_.test(static_cast<std::size_t>(u)) &&
          degrees_[static_cast<std::size_t>(u)] + 1 > max_degree_)
        degree_ok = false;
    });
    if (!degree_ok) return false;
    const std::size_t size = chosen_.size() + 1;
    const std::size_t rest = k_ - size;
    if (edges + rest * size + rest * (rest == 0 ? 0 : rest - 1) / 2 < target_edges_) return false;

    chosen_.push_back(v);
    in_set_.set(static_cast<std::size_t>(v));
    degrees_[static_cast<std::size_t>(v)] = links;
    g_.neighbors(v).for_each([&](int u) {
      if (in_set_.test(static_cast<std::size_t>(u)) && u != v) ++degrees_[static_cast<std::size_t>(u)];
    });
    edges_ = edges;
    return true;
  }

  void pop() {
    const int v = chosen_.back();
    chosen_.pop_back();
    in_set_.reset(static_cast<std::size_t>(v));
    g_.neighbors(v).for_each([&](int u) {
      if (in_set_.test(static_cast<std::size_t>(u))) --degrees_[static_cast<std::size_t>(u)];
    });
    edges_ -= degrees_[static_cast<std::size_t>(v)];
    degrees_[static_cast<std::size_t>(v)] = 0;
  }

  void descend(int start) {
    if (chosen_.size() == k_) {
      check_complete();
      return;
    }
    const int n = static_cast<int>(g_.order());
    const int last_start = n - static_cast<int>(k_ - chosen_.size());
    for (int v = start; v <= last_start; ++v)
      if (push(v)) {
        descend(v + 1);
        pop();
      }
  }

  void check_complete() {
    std::vector<std::size_t> degs;
    degs.reserve(k_);
    for (int v : chosen_) degs.push_back(degrees_[static_cast<std::size_t>(v)]);
    std::sort(degs.begin(), degs.end());
    if (degs != target_degrees_) return;
    if (find_isomorphism(g_.induced(chosen_), target_, std::nullopt, census_target_cap)) ++count_;
  }

  const Graph &g_;
  const Graph &target_;
  std::size_t k_;
  std::size_t target_edges_;
  std::vector<std::size_t> target_degrees_;
  std::size_t max_degree_ = 0;

  std::vector<int> chosen_;
  VertexSet in_set_;
  std::vector<std::size_t> degrees_;
  std::size_t edges_ = 0;
  std::uint64_t count_ = 0;
};

std::vector<int> cycle_order(const Graph &g, const std::vector<int> &vertices) {
  // vertices is sorted; walk from the smallest towards its smaller neighbour.
  std::vector<int> order{vertices.front()};
  std::vector<bool> used(vertices.size(), false);
  used[0] = true;
  while (order.size() < vertices.size()) {
    const int cur = order.back();
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (!used[i] && g.adjacent(cur, vertices[i])) {
        used[i] = true;
        order.push_back(vertices[i]);
        break;
      }
  }
  return order;
}

class InducedCycleSearch {
public:
  InducedCycleSearch(const Graph &g, int length)
      : g_(g), length_(static_cast<std::size_t>(length)), in_set_(g.order()),
        degrees_(g.order(), 0) {}

  std::optional<std::vector<int>> run() {
    if (length_ < 3 || length_ > g_.order()) return std::nullopt;
    if (descend(0)) {
      std::vector<int> sorted = chosen_;
      return cycle_order(g_, sorted);
    }
    return std::nullopt;
  }

private:
  // True iff a and b lie on the same path of the current linear forest.
  bool connected(int a, int b) const {
    int prev = -1, cur = a;
    while (true) {
      if (cur == b) return true;
      int next = -1;
      g_.neighbors(cur).for_each([&](int u) {
        if (next < 0 && u != prev && in_set_.test(static_cast<std::size_t>(u))) next = u;
      });
      if (next < 0) return false;
      prev = cur;
      cur = next;
    }
  }

  bool descend(int start) {
    const std::size_t size = chosen_.size();
    if (size == length_) return true;
    const int n = static_cast<int>(g_.order());
    const bool closing = size + 1 == length_;
    for (int v = start; v <= n - static_cast<int>(length_ - size); ++v) {
      std::vector<int> links;
      g_.neighbors(v).for_each([&](int u) {
        if (in_set_.test(static_cast<std::size_t>(u))) links.push_back(u);
      });
      if (links.size() > 2) continue;
      bool ok = true;
      for (int u : links)
        if (degrees_[static_cast<std::size_t>(u)] >= 2) ok = false;
      if (!ok) continue;
      if (closing) {
        // Must close a single Hamiltonian path into the cycle.
        if (links.size() != 2 || edges_ + 2 != length_) continue;
      } else if (links.size() == 2 && connected(links[0], links[1])) {
        continue;
      }
      add(v, links);
      if (viable(v) && descend(v + 1)) return true;
      remove(v, links);
    }
    return false;
  }

  // Every vertex still short of degree 2 needs a neighbour after `last`.
  bool viable(int last) const {
    if (chosen_.size() == length_) return true;
    for (int u : chosen_) {
      if (degrees_[static_cast<std::size_t>(u)] >= 2) continue;
      if (g_.neighbors(u).next(static_cast<std::size_t>(last) + 1) >= g_.order()) return false;
    }
    return true;
  }

  void add(int v, const std::vector<int> &links) {
    chosen_.push_back(v);
    in_set_.set(static_cast<std::size_t>(v));
    degrees_[static_cast<std::size_t>(v)] = links.size();
    for (int u : links) ++degrees_[static_cast<std::size_t>(u)];
    edges_ += links.size();
  }

  void remove(int v, const std::vector<int> &links) {
    chosen_.pop_back();
    in_set_.reset(static_cast<std::size_t>(v));
    degrees_[static_cast<std::size_t>(v)] = 0;
    for (int u : links) --degrees_[static_cast<std::size_t>(u)];
    edges_ -= links.size();
  }

  const Graph &g_;
  std::size_t length_;
  VertexSet in_set_;
  std::vector<std::size_t> degrees_;
  std::vector<int> chosen_;
  std::size_t edges_ = 0;
};

} // namespace

std::uint64_t count_induced(const Graph &g, const Graph &target, unsigned threads) {
  if (target.order() > census_target_cap)
    throw ResourceCap("census targets are limited to " + std::to_string(census_target_cap) +
                      " vertices");
  if (target.order() > g.order()) return 0;
  if (target.order() == 0) return 1;

  const int leads = static_cast<int>(g.order() - target.order()) + 1;
  threads = std::max(1U, std::min(threads, static_cast<unsigned>(leads)));
  std::vector<std::uint64_t> per_lead(static_cast<std::size_t>(leads), 0);
  std::atomic<int> next{0};
  auto worker = [&] {
    InducedCounter counter(g, target);
    for (int lead = next++; lead < leads; lead = next++)
      per_lead[static_cast<std::size_t>(lead)] = counter.count_from(lead);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }
  std::uint64_t total = 0;
  for (auto c : per_lead) total += c;
  return total;
}

std::optional<std::vector<int>> find_induced_cycle(const Graph &g, int length) {
  return InducedCycleSearch(g, length).run();
}

std::optional<HoleWitness> find_odd_hole(const Graph &g, int min_len) {
  int len = std::max(min_len, 5);
  if (len % 2 == 0) ++len;
  for (; len <= static_cast<int>(g.order()); len += 2)
    if (auto c = find_induced_cycle(g, len)) return HoleWitness{HoleKind::hole, std::move(*c)};
  return std::nullopt;
}

std::optional<HoleWitness> find_odd_antihole(const Graph &g, int min_len) {
  auto w = find_odd_hole(complement(g), min_len);
  if (w) w->kind = HoleKind::antihole;
  return w;
}

bool has_odd_antihole(const Graph &g) { return find_odd_antihole(g).has_value(); }

std::optional<HoleWitness> find_largest_odd_antihole(const Graph &g) {
  const Graph co = complement(g);
  int len = static_cast<int>(g.order());
  if (len % 2 == 0) --len;
  for (; len >= 5; len -= 2)
    if (auto c = find_induced_cycle(co, len)) return HoleWitness{HoleKind::antihole, std::move(*c)};
  return std::nullopt;
}

bool is_perfect(const Graph &g) { return !find_odd_hole(g) && !has_odd_antihole(g); }

bool is_minimally_imperfect(const Graph &g) {
  if (g.order() > minimal_imperfection_cap)
    throw ResourceCap("minimal imperfection test limited to " +
                      std::to_string(minimal_imperfection_cap) + " vertices");
  if (is_perfect(g)) return false;
  for (int v = 0; v < static_cast<int>(g.order()); ++v)
    if (!is_perfect(g.remove_vertex(v))) return false;
  return true;
}

CensusTarget parse_census_target(const std::string &name) {
  auto number = [&](std::size_t from) {
    const std::string digits = name.substr(from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw InvalidInput("bad census target '" + name + "'");
    return std::stoi(digits);
  };
  if (name.rfind("Cbar", 0) == 0) return {name, anticycle(number(4))};
  if (name.rfind("C", 0) == 0) return {name, cycle(number(1))};
  throw InvalidInput("bad census target '" + name + "' (expected C<n> or Cbar<n>)");
}

std::vector<CensusTarget> parse_census_targets(const std::string &comma_list) {
  std::vector<CensusTarget> out;
  std::stringstream in(comma_list);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(parse_census_target(item));
  if (out.empty()) throw InvalidInput("no census targets given");
  return out;
}

std::vector<CensusTarget> default_census_targets() {
  return parse_census_targets("C5,C7,Cbar7,C9,Cbar9");
}

std::uint64_t CensusReport::count_of(const std::string &target) const {
  for (const auto &c : counts)
    if (c.target == target) return c.count;
  throw InvalidInput("census report has no target '" + target + "'");
}

CensusReport run_census(const Graph &g, const std::vector<CensusTarget> &targets,
                        unsigned threads, std::string name) {
  CensusReport report{std::move(name), g.label(), {}};
  for (const auto &t : targets) {
    const auto start = std::chrono::steady_clock::now();
    const auto c = count_induced(g, t.graph, threads);
    const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
    report.counts.push_back({t.name, c, took.count()});
  }
  return report;
}

std::vector<Table1Row> table1_rows() {
  return {
      {"KCBS", cycle(5)},
      {"CHSH", circulant(8, {1, 4})},
      {"KCBS-twin", johnson(5, 2)},
      {"Mermin", complement(shrikhande())},
  };
}

std::vector<CensusReport> table1_census(unsigned threads) {
  std::vector<CensusReport> out;
  const auto targets = default_census_targets();
  for (auto &row : table1_rows()) out.push_back(run_census(row.graph, targets, threads, row.name));
  return out;
}

} // namespace ctxgraph
