#include "ctxgraph/graph.hpp"

#include "ctxgraph/error.hpp"

#include <algorithm>
#include <numeric>

namespace ctxgraph {

const char *to_string(Transitivity t) noexcept {
  switch (t) {
  case Transitivity::yes:
    return "yes";
  case Transitivity::no:
    return "no";
  case Transitivity::unknown:
    return "unknown";
  }
  return "unknown";
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::string label,
                        Transitivity vt, bool reject_duplicates) {
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for " + std::to_string(n) + " vertices");
    if (u == v) throw InvalidInput("self loop at vertex " + std::to_string(u));
    const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
    if (rows[su].test(sv) && reject_duplicates)
      throw InvalidInput("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    rows[su].set(sv);
    rows[sv].set(su);
  }
  return Graph(std::move(rows), std::move(label), vt);
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto &r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < rows_.size(); ++u)
    rows_[u].for_each([&](int v) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<int>(u), v);
    });
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d;
  d.reserve(rows_.size());
  for (const auto &r : rows_) d.push_back(r.count());
  std::sort(d.begin(), d.end());
  return d;
}

Graph Graph::with_label(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

Graph Graph::with_transitivity(Transitivity vt) const {
  Graph g = *this;
  g.vertex_transitive_ = vt;
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  const std::size_t k = vertices.size();
  std::vector<VertexSet> rows(k, VertexSet(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (adjacent(vertices[i], vertices[j])) {
        rows[i].set(j);
        rows[j].set(i);
      }
  return Graph(std::move(rows), {}, Transitivity::unknown);
}

Graph Graph::remove_vertex(int v) const {
  std::vector<int> keep;
  for (int u = 0; u < static_cast<int>(order()); ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

bool Graph::is_clique(std::span<const int> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool Graph::is_independent(std::span<const int> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || adjacent(vertices[i], vertices[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Catalog

Graph cycle(int n) {
  if (n < 3) throw InvalidParameter("cycle needs n >= 3, got " + std::to_string(n));
  return Graph::from_predicate(
      static_cast<std::size_t>(n),
      [n](int i, int j) { return (j - i) == 1 || (j - i) == n - 1; },
      "cycle:" + std::to_string(n), Transitivity::yes);
}

Graph anticycle(int n) {
  if (n < 3) throw InvalidParameter("anticycle needs n >= 3, got " + std::to_string(n));
  return complement(cycle(n)).with_label("anticycle:" + std::to_string(n));
}

Graph complete(int n) {
  if (n < 0) throw InvalidParameter("complete needs n >= 0");
  return Graph::from_predicate(
      static_cast<std::size_t>(n), [](int, int) { return true; }, "complete:" + std::to_string(n),
      Transitivity::yes);
}

Graph edgeless(int n) {
  if (n < 0) throw InvalidParameter("edgeless needs n >= 0");
  return Graph::from_predicate(
      static_cast<std::size_t>(n), [](int, int) { return false; },
      "edgeless:" + std::to_string(n), Transitivity::yes);
}

Graph circulant(int n, const std::set<int> &connections) {
  if (n < 3) throw InvalidParameter("circulant needs n >= 3, got " + std::to_string(n));
  if (connections.empty()) throw InvalidParameter("circulant needs at least one connection");
  std::string label = "circulant:" + std::to_string(n) + ":";
  bool first = true;
  for (int c : connections) {
    if (c < 1 || c > n / 2)
      throw InvalidParameter("circulant connection " + std::to_string(c) + " outside 1.." +
                             std::to_string(n / 2));
    label += (first ? "" : ",") + std::to_string(c);
    first = false;
  }
  return Graph::from_predicate(
      static_cast<std::size_t>(n),
      [&](int i, int j) {
        const int d = j - i;
        return connections.contains(d) || connections.contains(n - d);
      },
      std::move(label), Transitivity::yes);
}

Graph johnson(int n, int k) {
  if (k < 1 || k > n) throw InvalidParameter("johnson needs 1 <= k <= n");
  std::vector<unsigned> subsets;
  for (unsigned mask = 0; mask < (1U << n); ++mask)
    if (std::popcount(mask) == k) subsets.push_back(mask);
  // Lexicographic order of the sorted element lists.
  auto key = [n](unsigned m) {
    std::vector<int> e;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1U) e.push_back(i);
    return e;
  };
  std::sort(subsets.begin(), subsets.end(),
            [&](unsigned a, unsigned b) { return key(a) < key(b); });
  return Graph::from_predicate(
      subsets.size(),
      [&](int i, int j) {
        return std::popcount(subsets[static_cast<std::size_t>(i)] &
                             subsets[static_cast<std::size_t>(j)]) == k - 1;
      },
      "johnson:" + std::to_string(n) + ":" + std::to_string(k), Transitivity::yes);
}

Graph shrikhande() {
  auto diff_ok = [](int da, int db) {
    da = (da % 4 + 4) % 4;
    db = (db % 4 + 4) % 4;
    return (da == 1 && db == 0) || (da == 3 && db == 0) || (da == 0 && db == 1) ||
           (da == 0 && db == 3) || (da == 1 && db == 1) || (da == 3 && db == 3);
  };
  return Graph::from_predicate(
      16, [&](int u, int v) { return diff_ok(u / 4 - v / 4, u % 4 - v % 4); }, "shrikhande",
      Transitivity::yes);
}

Graph complete_minus_matching(int d) {
  if (d < 1) throw InvalidParameter("complete_minus_matching needs d >= 1");
  return Graph::from_predicate(
      static_cast<std::size_t>(d), [](int i, int j) { return !(i / 2 == j / 2); },
      "complete_minus_matching:" + std::to_string(d), Transitivity::unknown);
}

Graph complement(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  const VertexSet all = VertexSet::full(n);
  for (std::size_t v = 0; v < n; ++v) {
    VertexSet r = all - g.rows_[v];
    r.reset(v);
    rows.push_back(std::move(r));
  }
  std::string label;
  if (g.label().rfind("anticycle:", 0) == 0)
    label = "cycle:" + g.label().substr(10);
  else if (g.label().rfind("complement(", 0) == 0 && g.label().back() == ')')
    label = g.label().substr(11, g.label().size() - 12);
  else if (!g.label().empty())
    label = "complement(" + g.label() + ")";
  return Graph(std::move(rows), std::move(label), g.vertex_transitive());
}

namespace {

Transitivity conjunction(Transitivity a, Transitivity b) {
  if (a == Transitivity::no || b == Transitivity::no) return Transitivity::no;
  if (a == Transitivity::yes && b == Transitivity::yes) return Transitivity::yes;
  return Transitivity::unknown;
}

} // namespace

Graph disjunctive_product(const Graph &g, const Graph &h, std::size_t vertex_cap) {
  const std::size_t ng = g.order(), nh = h.order();
  if (nh != 0 && ng > vertex_cap / nh)
    throw ResourceCap("disjunctive product would have " + std::to_string(ng) + "x" +
                      std::to_string(nh) + " vertices, cap is " + std::to_string(vertex_cap));
  const std::size_t n = ng * nh;
  // Row of (a, x): every vertex of a block b adjacent to a in G, plus (b, y)
  // for every b and y adjacent to x in H.
  std::vector<VertexSet> block_rows(ng, VertexSet(n));
  for (std::size_t a = 0; a < ng; ++a)
    g.neighbors(static_cast<int>(a)).for_each([&](int b) {
      for (std::size_t y = 0; y < nh; ++y) block_rows[a].set(static_cast<std::size_t>(b) * nh + y);
    });
  std::vector<VertexSet> fibre_rows(nh, VertexSet(n));
  for (std::size_t x = 0; x < nh; ++x)
    h.neighbors(static_cast<int>(x)).for_each([&](int y) {
      for (std::size_t b = 0; b < ng; ++b) fibre_rows[x].set(b * nh + static_cast<std::size_t>(y));
    });

  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t x = 0; x < nh; ++x) rows.push_back(block_rows[a] | fibre_rows[x]);
  return Graph(std::move(rows), "product(" + g.label() + "," + h.label() + ")",
               conjunction(g.vertex_transitive(), h.vertex_transitive()));
}

Graph disjunctive_power(const Graph &g, int m, std::size_t vertex_cap) {
  if (m < 1) throw InvalidParameter("power needs m >= 1");
  Graph acc = g;
  for (int i = 1; i < m; ++i) acc = disjunctive_product(g, acc, vertex_cap);
  return acc.with_label("power(" + g.label() + "," + std::to_string(m) + ")");
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

using Signature = std::vector<std::size_t>;

std::vector<Signature> signatures(const Graph &g) {
  const int n = static_cast<int>(g.order());
  std::vector<Signature> sig(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    Signature s;
    g.neighbors(v).for_each([&](int u) { s.push_back(g.degree(u)); });
    std::sort(s.begin(), s.end());
    s.insert(s.begin(), g.degree(v));
    sig[static_cast<std::size_t>(v)] = std::move(s);
  }
  return sig;
}

class IsoSearch {
public:
  IsoSearch(const Graph &g, const Graph &h) : g_(g), h_(h), n_(static_cast<int>(g.order())) {}

  std::optional<std::vector<int>> run(std::optional<std::pair<int, int>> pin) {
    const auto sg = signatures(g_), sh = signatures(h_);
    candidates_.assign(static_cast<std::size_t>(n_), {});
    for (int v = 0; v < n_; ++v)
      for (int w = 0; w < n_; ++w)
        if (sg[static_cast<std::size_t>(v)] == sh[static_cast<std::size_t>(w)])
          candidates_[static_cast<std::size_t>(v)].push_back(w);
    if (pin) {
      auto &c = candidates_[static_cast<std::size_t>(pin->first)];
      if (std::find(c.begin(), c.end(), pin->second) == c.end()) return std::nullopt;
      c = {pin->second};
    }
    for (const auto &c : candidates_)
      if (c.empty()) return std::nullopt;

    build_order();
    map_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
    if (!extend(0)) return std::nullopt;
    return map_;
  }

private:
  // Most constrained first: pinned/rarest signature, then most already
  // ordered neighbours.
  void build_order() {
    std::vector<bool> placed(static_cast<std::size_t>(n_), false);
    std::vector<int> links(static_cast<std::size_t>(n_), 0);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        if (best < 0) {
          best = v;
          continue;
        }
        const auto lv = links[static_cast<std::size_t>(v)], lb = links[static_cast<std::size_t>(best)];
        const auto cv = candidates_[static_cast<std::size_t>(v)].size();
        const auto cb = candidates_[static_cast<std::size_t>(best)].size();
        if (lv > lb || (lv == lb && cv < cb)) best = v;
      }
      placed[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
      g_.neighbors(best).for_each([&](int u) { ++links[static_cast<std::size_t>(u)]; });
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int w : candidates_[static_cast<std::size_t>(v)]) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const int u = order_[i];
        ok = g_.adjacent(u, v) == h_.adjacent(map_[static_cast<std::size_t>(u)], w);
      }
      if (!ok) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = true;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(w)] = false;
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const Graph &g_;
  const Graph &h_;
  int n_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph &g, const Graph &h,
                                                 std::optional<std::pair<int, int>> pin,
                                                 std::size_t cap) {
  if (g.order() > cap || h.order() > cap)
    throw ResourceCap("isomorphism test limited to " + std::to_string(cap) + " vertices");
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
  if (g.order() == 0) return std::vector<int>{};
  return IsoSearch(g, h).run(pin);
}

bool is_isomorphic(const Graph &g, const Graph &h, std::size_t cap) {
  return find_isomorphism(g, h, std::nullopt, cap).has_value();
}

bool is_automorphism(const Graph &g, std::span<const int> perm) {
  const int n = static_cast<int>(g.order());
  if (perm.size() != g.order()) return false;
  std::vector<bool> seen(g.order(), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) return false;
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) !=
          g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
        return false;
  return true;
}

Transitivity detect_vertex_transitivity(const Graph &g, std::size_t cap) {
  if (g.order() > cap) return Transitivity::unknown;
  for (int v = 1; v < static_cast<int>(g.order()); ++v)
    if (!find_isomorphism(g, g, std::make_pair(0, v), cap)) return Transitivity::no;
  return Transitivity::yes;
}

bool is_circulant_labelled(const Graph &g) {
  const int n = static_cast<int>(g.order());
  if (n == 0) return true;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent((u + 1) % n, (v + 1) % n)) return false;
  return true;
}

bool is_cycle_graph(const Graph &g) {
  const int n = static_cast<int>(g.order());
  if (n < 3) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  // Walk from 0; 2-regular and connected iff the walk closes after n steps.
  int prev = -1, cur = 0, steps = 0;
  do {
    int next = -1;
    g.neighbors(cur).for_each([&](int u) {
      if (next < 0 && u != prev) next = u;
    });
    prev = cur;
    cur = next;
    ++steps;
  } while (cur != 0 && steps <= n);
  return steps == n;
}

} // namespace ctxgraph
