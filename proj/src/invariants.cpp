#include "ctxgraph/invariants.hpp"

#include "clique_engine.hpp"
#include "ctxgraph/error.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

namespace ctxgraph {

namespace {

void check_cap(const Graph &g, std::size_t cap, const char *what) {
  if (g.order() > cap)
    throw ResourceCap(std::string(what) + ": " + std::to_string(g.order()) +
                      " vertices exceeds the cap of " + std::to_string(cap));
}

// Relabels by non-increasing degree so that greedy colouring sees hubs first.
std::vector<int> degree_order(const Graph &g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

} // namespace

CliqueResult max_clique(const Graph &g, const CliqueSearchOptions &options) {
  check_cap(g, options.vertex_cap, "max clique");
  const auto start = std::chrono::steady_clock::now();
  CliqueResult result;
  const std::size_t n = g.order();
  if (n == 0) return result;

  const std::vector<int> order = degree_order(g);
  std::vector<int> position(n);
  for (std::size_t i = 0; i < n; ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (std::size_t i = 0; i < n; ++i)
    g.neighbors(order[i]).for_each(
        [&](int u) { rows[i].set(static_cast<std::size_t>(position[static_cast<std::size_t>(u)])); });

  detail::Incumbent incumbent;
  detail::Deadline deadline(options.budget_seconds);
  {
    const std::vector<int> first{0};
    incumbent.offer(first);
  }

  // Root branches, highest colour first, each with its candidate set fixed.
  detail::CliqueEngine root(rows, incumbent, deadline);
  std::vector<int> root_order;
  std::vector<int> root_colours;
  const VertexSet all = VertexSet::full(n);
  root.colour(all, root_order, root_colours);
  struct Branch {
    int vertex;
    int colour;
    VertexSet candidates;
  };
  std::vector<Branch> branches;
  VertexSet remaining = all;
  for (std::size_t i = root_order.size(); i-- > 0;) {
    const int v = root_order[i];
    branches.push_back({v, root_colours[i], remaining & rows[static_cast<std::size_t>(v)]});
    remaining.reset(static_cast<std::size_t>(v));
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> nodes{0};
  auto worker = [&] {
    detail::CliqueEngine engine(rows, incumbent, deadline);
    std::vector<int> current;
    for (std::size_t b = next++; b < branches.size(); b = next++) {
      const Branch &branch = branches[b];
      if (static_cast<std::size_t>(branch.colour) <= incumbent.size()) continue;
      current.assign(1, branch.vertex);
      if (branch.candidates.none()) {
        incumbent.offer(current);
      } else if (!engine.expand(current, branch.candidates)) {
        break;
      }
    }
    nodes += engine.nodes();
  };
  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }

  for (int v : incumbent.clique()) result.clique.push_back(order[static_cast<std::size_t>(v)]);
  std::sort(result.clique.begin(), result.clique.end());
  result.optimal = !deadline.cancelled();
  result.nodes = nodes.load();
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

int clique_number(const Graph &g, const CliqueSearchOptions &options) {
  const CliqueResult r = max_clique(g, options);
  if (!r.optimal)
    throw ResourceCap("clique search budget exhausted on " + g.label() + " (best so far " +
                      std::to_string(r.clique.size()) + ")");
  return static_cast<int>(r.clique.size());
}

int independence_number(const Graph &g, const CliqueSearchOptions &options) {
  check_cap(g, options.vertex_cap, "independence number");
  return clique_number(complement(g), options);
}

std::vector<int> max_independent_set(const Graph &g, const CliqueSearchOptions &options) {
  check_cap(g, options.vertex_cap, "independence number");
  CliqueResult r = max_clique(complement(g), options);
  if (!r.optimal) throw ResourceCap("independent set search budget exhausted on " + g.label());
  return r.clique;
}

namespace {

class Dsatur {
public:
  explicit Dsatur(const Graph &g) : g_(g), n_(g.order()), colour_(n_, -1) {}

  int solve(int lower) {
    lower_ = lower;
    best_ = static_cast<int>(n_) + 1;
    search(0, 0);
    return best_;
  }

private:
  int pick() const {
    int best = -1;
    std::size_t best_sat = 0;
    std::size_t best_deg = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      std::uint64_t used = 0;
      std::size_t uncoloured_degree = 0;
      g_.neighbors(static_cast<int>(v)).for_each([&](int u) {
        const int c = colour_[static_cast<std::size_t>(u)];
        if (c >= 0)
          used |= std::uint64_t{1} << c;
        else
          ++uncoloured_degree;
      });
      const auto sat = static_cast<std::size_t>(std::popcount(used));
      if (best < 0 || sat > best_sat || (sat == best_sat && uncoloured_degree > best_deg)) {
        best = static_cast<int>(v);
        best_sat = sat;
        best_deg = uncoloured_degree;
      }
    }
    return best;
  }

  void search(std::size_t coloured, int used) {
    if (best_ <= lower_ || used >= best_) return;
    if (coloured == n_) {
      best_ = used;
      return;
    }
    const int v = pick();
    std::uint64_t forbidden = 0;
    g_.neighbors(v).for_each([&](int u) {
      const int c = colour_[static_cast<std::size_t>(u)];
      if (c >= 0) forbidden |= std::uint64_t{1} << c;
    });
    for (int c = 0; c <= used && c + 1 < best_; ++c) {
      if ((forbidden >> c) & 1U) continue;
      colour_[static_cast<std::size_t>(v)] = c;
      search(coloured + 1, std::max(used, c + 1));
      colour_[static_cast<std::size_t>(v)] = -1;
      if (best_ <= lower_) return;
    }
  }

  const Graph &g_;
  std::size_t n_;
  std::vector<int> colour_;
  int best_ = 0;
  int lower_ = 0;
};

} // namespace

int chromatic_number(const Graph &g) {
  check_cap(g, chromatic_vertex_cap, "chromatic number");
  if (g.order() == 0) return 0;
  return Dsatur(g).solve(clique_number(g));
}

namespace {

class BronKerbosch {
public:
  BronKerbosch(const Graph &g, std::size_t cap) : g_(g), cap_(cap) {}

  std::vector<std::vector<int>> run() {
    std::vector<int> r;
    recurse(r, VertexSet::full(g_.order()), VertexSet(g_.order()));
    return std::move(out_);
  }

private:
  void recurse(std::vector<int> &r, VertexSet p, VertexSet x) {
    if (p.none()) {
      if (x.none()) {
        if (out_.size() == cap_)
          throw ResourceCap("maximal clique enumeration exceeded " + std::to_string(cap_) +
                            " cliques");
        out_.push_back(r);
        std::sort(out_.back().begin(), out_.back().end());
      }
      return;
    }
    // Pivot maximising |P ∩ N(u)| over P ∪ X.
    int pivot = -1;
    std::size_t pivot_hits = 0;
    (p | x).for_each([&](int u) {
      const std::size_t hits = p.intersection_count(g_.neighbors(u));
      if (pivot < 0 || hits > pivot_hits) {
        pivot = u;
        pivot_hits = hits;
      }
    });
    const VertexSet branch = p - g_.neighbors(pivot);
    branch.for_each([&](int v) {
      r.push_back(v);
      recurse(r, p & g_.neighbors(v), x & g_.neighbors(v));
      r.pop_back();
      p.reset(static_cast<std::size_t>(v));
      x.set(static_cast<std::size_t>(v));
    });
  }

  const Graph &g_;
  std::size_t cap_;
  std::vector<std::vector<int>> out_;
};

} // namespace

CliqueFamily maximal_cliques(const Graph &g, std::size_t max_count) {
  check_cap(g, clique_vertex_cap, "maximal cliques");
  CliqueFamily family;
  family.all_maximal = true;
  if (g.order() == 0) return family;
  family.cliques = BronKerbosch(g, max_count).run();
  std::sort(family.cliques.begin(), family.cliques.end());
  return family;
}

LinearProgram packing_lp(const Graph &g, const CliqueFamily &family) {
  LinearProgram lp;
  lp.c.assign(g.order(), Rational(1));
  for (const auto &clique : family.cliques) {
    if (!g.is_clique(clique)) throw InvalidInput("packing LP: family member is not a clique");
    std::vector<Rational> row(g.order());
    for (int v : clique) row[static_cast<std::size_t>(v)] = 1;
    lp.a.push_back(std::move(row));
    lp.b.emplace_back(1);
  }
  return lp;
}

Rational fractional_packing_lp(const Graph &g) {
  if (g.order() == 0) return Rational(0);
  return simplex_max(packing_lp(g, maximal_cliques(g))).value;
}

Rational fractional_packing(const Graph &g, const CliqueSearchOptions &options) {
  if (g.order() == 0) return Rational(0);
  if (g.vertex_transitive() == Transitivity::yes)
    return Rational(static_cast<long long>(g.order())) / Rational(clique_number(g, options));
  return fractional_packing_lp(g);
}

} // namespace ctxgraph
