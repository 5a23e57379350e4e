#include "oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>

namespace oracle {

Graph random_graph(std::mt19937_64 &rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<ctxgraph::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(static_cast<std::size_t>(n), edges, "random");
}

Graph shuffled(std::mt19937_64 &rng, const Graph &g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<ctxgraph::Edge> edges;
  for (const auto &[u, v] : g.edges()) edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
  return Graph::from_edges(g.order(), edges, g.label());
}

bool is_clique_mask(const Graph &g, std::uint32_t mask) {
  const int n = static_cast<int>(g.order());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((mask >> i & 1U) && (mask >> j & 1U) && !g.adjacent(i, j)) return false;
  return true;
}

bool is_independent_mask(const Graph &g, std::uint32_t mask) {
  const int n = static_cast<int>(g.order());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((mask >> i & 1U) && (mask >> j & 1U) && g.adjacent(i, j)) return false;
  return true;
}

namespace {

// alpha(S) = max(alpha(S - v), 1 + alpha(S - N[v])) on vertex masks.
int alpha_within(const std::vector<std::uint64_t> &adj, std::uint64_t s) {
  if (s == 0) return 0;
  const int v = std::countr_zero(s);
  const std::uint64_t rest = s & (s - 1);
  return std::max(alpha_within(adj, rest), 1 + alpha_within(adj, rest & ~adj[static_cast<std::size_t>(v)]));
}

int alpha_of(const Graph &g, bool complemented) {
  const int n = static_cast<int>(g.order());
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.adjacent(i, j) != complemented) adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  return alpha_within(adj, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

} // namespace

int omega(const Graph &g) { return alpha_of(g, true); }

int alpha(const Graph &g) { return alpha_of(g, false); }

int chi(const Graph &g) {
  const int n = static_cast<int>(g.order());
  if (n == 0) return 0;
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::function<bool(int, int)> paint = [&](int v, int k) {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (g.adjacent(u, v) && colour[static_cast<std::size_t>(u)] == c) ok = false;
      if (!ok) continue;
      colour[static_cast<std::size_t>(v)] = c;
      if (paint(v + 1, k)) return true;
    }
    return false;
  };
  for (int k = 1;; ++k)
    if (paint(0, k)) return k;
}

Graph induced(const Graph &g, std::uint32_t mask) {
  std::vector<int> keep;
  for (int v = 0; v < static_cast<int>(g.order()); ++v)
    if (mask >> v & 1U) keep.push_back(v);
  return Graph::from_predicate(keep.size(), [&](int i, int j) {
    return g.adjacent(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
  });
}

bool is_cycle(const Graph &g) {
  const int n = static_cast<int>(g.order());
  if (n < 3) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  int prev = -1;
  int cur = 0;
  for (int steps = 0; steps < n; ++steps) {
    int next = -1;
    for (int u = 0; u < n; ++u)
      if (u != prev && g.adjacent(cur, u)) {
        next = u;
        break;
      }
    prev = cur;
    cur = next;
    if (cur == 0) return steps == n - 1;
  }
  return false;
}

namespace {

template <typename Pred> std::uint64_t count_subsets(const Graph &g, int k, Pred &&pred) {
  const int n = static_cast<int>(g.order());
  std::uint64_t total = 0;
  std::vector<int> pick;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(pick.size()) == k) {
      if (pred(g.induced(pick))) ++total;
      return;
    }
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      choose(v + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return total;
}

Graph complement_of(const Graph &g) {
  return Graph::from_predicate(g.order(), [&](int i, int j) { return !g.adjacent(i, j); });
}

} // namespace

std::uint64_t induced_cycles(const Graph &g, int k) {
  return count_subsets(g, k, [](const Graph &h) { return is_cycle(h); });
}

std::uint64_t induced_anticycles(const Graph &g, int k) {
  return count_subsets(g, k, [](const Graph &h) { return is_cycle(complement_of(h)); });
}

bool perfect_by_definition(const Graph &g) {
  for (std::uint32_t mask = 1; mask < (1U << g.order()); ++mask) {
    const Graph h = induced(g, mask);
    if (omega(h) != chi(h)) return false;
  }
  return true;
}

bool odd_hole_or_antihole(const Graph &g) {
  const std::size_t n = g.order();
  return n >= 5 && n % 2 == 1 && (is_cycle(g) || is_cycle(complement_of(g)));
}

double seesaw_max(const std::vector<BipartiteEvent> &events) {
  using M2 = Eigen::Matrix2d;
  using M4 = Eigen::Matrix4d;
  const M2 z = (M2() << 1, 0, 0, -1).finished();
  const M2 x = (M2() << 0, 1, 1, 0).finished();
  auto projector = [&](double angle, int sign) -> M2 {
    return (M2::Identity() + sign * (std::cos(angle) * z + std::sin(angle) * x)) / 2;
  };
  auto value = [&](const std::array<double, 4> &t) {
    M4 w = M4::Zero();
    for (const auto &e : events) {
      const M2 pa = projector(t[static_cast<std::size_t>(e.x)], e.a);
      const M2 pb = projector(t[static_cast<std::size_t>(2 + e.y)], e.b);
      M4 kron;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) kron.block<2, 2>(2 * i, 2 * j) = pa(i, j) * pb;
      w += kron;
    }
    return Eigen::SelfAdjointEigenSolver<M4>(w).eigenvalues().maxCoeff();
  };
  const double pi = std::acos(-1.0);
  double best = 0.0;
  // A few starts, then coordinate sweeps with a shrinking step.
  for (int start = 0; start < 4; ++start) {
    std::array<double, 4> t = {0.0, pi / 2 * start / 3, pi / 4 * start, pi / 7};
    double current = value(t);
    for (double step = pi / 8; step > 1e-10; step /= 2) {
      bool improved = true;
      while (improved) {
        improved = false;
        for (std::size_t i = 0; i < 4; ++i)
          for (double dir : {step, -step}) {
            auto trial = t;
            trial[i] += dir;
            const double v = value(trial);
            if (v > current + 1e-15) {
              current = v;
              t = trial;
              improved = true;
            }
          }
      }
    }
    best = std::max(best, current);
  }
  return best;
}

} // namespace oracle

namespace oracle {

using ctxgraph::Rational;

namespace {

// Solves the square system by Gauss-Jordan elimination; false if singular.
bool solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs, std::vector<Rational> &x) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return false;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] = m[r][k] - f * m[col][k];
      rhs[r] = rhs[r] - f * rhs[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return true;
}

} // namespace

Rational lp_by_vertices(const ctxgraph::LinearProgram &lp) {
  const std::size_t n = lp.variables();
  // All constraints as rows of G w <= h.
  std::vector<std::vector<Rational>> g = lp.a;
  std::vector<Rational> h = lp.b;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> up(n, Rational(0)), down(n, Rational(0));
    up[i] = 1;
    down[i] = -1;
    g.push_back(up);
    h.push_back(1);
    g.push_back(down);
    h.push_back(0);
  }
  std::optional<Rational> best;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (pick.size() == n) {
      std::vector<std::vector<Rational>> m;
      std::vector<Rational> rhs;
      for (std::size_t r : pick) {
        m.push_back(g[r]);
        rhs.push_back(h[r]);
      }
      std::vector<Rational> w;
      if (!solve(m, rhs, w)) return;
      for (std::size_t r = 0; r < g.size(); ++r) {
        Rational lhs(0);
        for (std::size_t i = 0; i < n; ++i) lhs = lhs + g[r][i] * w[i];
        if (lhs > h[r]) return;
      }
      Rational value(0);
      for (std::size_t i = 0; i < n; ++i) value = value + lp.c[i] * w[i];
      if (!best || value > *best) best = value;
      return;
    }
    for (std::size_t r = from; r < g.size(); ++r) {
      pick.push_back(r);
      choose(r + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return best.value_or(Rational(0));
}

} // namespace oracle
