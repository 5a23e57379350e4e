#include "ctxgraph/product_clique.hpp"

#include "clique_engine.hpp"
#include "ctxgraph/error.hpp"
#include "ctxgraph/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>

namespace ctxgraph {

std::vector<std::vector<int>> automorphisms(const Graph &g, std::size_t cap) {
  const int n = static_cast<int>(g.order());
  std::vector<std::vector<int>> out;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  bool overflow = false;
  std::function<void(int)> extend = [&](int v) {
    if (overflow) return;
    if (v == n) {
      if (out.size() == cap) {
        overflow = true;
        return;
      }
      out.push_back(image);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[static_cast<std::size_t>(t)] || g.degree(t) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = g.adjacent(u, v) == g.adjacent(image[static_cast<std::size_t>(u)], t);
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = t;
      used[static_cast<std::size_t>(t)] = true;
      extend(v + 1);
      used[static_cast<std::size_t>(t)] = false;
      image[static_cast<std::size_t>(v)] = -1;
    }
  };
  extend(0);
  if (overflow) out.clear();
  return out;
}

namespace {

template <std::size_t NW> struct Bits {
  std::array<std::uint64_t, NW> w{};

  bool test(int v) const { return (w[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; }
  void set(int v) { w[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool none() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  Bits operator&(const Bits &o) const {
    Bits r;
    for (std::size_t i = 0; i < NW; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits operator|(const Bits &o) const {
    Bits r;
    for (std::size_t i = 0; i < NW; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Bits &operator-=(const Bits &o) {
    for (std::size_t i = 0; i < NW; ++i) w[i] &= ~o.w[i];
    return *this;
  }
  template <typename F> void for_each(F &&f) const {
    for (std::size_t i = 0; i < NW; ++i)
      for (std::uint64_t x = w[i]; x; x &= x - 1)
        f(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(x))));
  }
};

struct Aborted {};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t> &k) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : k) h = (h ^ x) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

constexpr std::size_t failed_cap = 4'000'000;

template <std::size_t NW> class PowerSearch {
public:
  using B = Bits<NW>;

  PowerSearch(const Graph &g, int m, int w, detail::Deadline &deadline)
      : g_(g), n_(static_cast<int>(g.order())), m_(m), w_(w), deadline_(deadline) {
    size_ = 1;
    for (int d = 0; d < m_; ++d) size_ *= n_;
    h_size_ = size_ / n_;
    coord_.assign(static_cast<std::size_t>(size_ * m_), 0);
    for (int v = 0; v < size_; ++v) {
      int x = v;
      for (int d = m_ - 1; d >= 0; --d) {
        coord_[static_cast<std::size_t>(v * m_ + d)] = x % n_;
        x /= n_;
      }
    }
    rows_.assign(static_cast<std::size_t>(size_), B{});
    for (int u = 0; u < size_; ++u)
      for (int v = 0; v < size_; ++v) {
        if (u == v) continue;
        for (int d = 0; d < m_; ++d)
          if (g_.adjacent(coord(u, d), coord(v, d))) {
            rows_[static_cast<std::size_t>(u)].set(v);
            break;
          }
      }
    layers_.assign(static_cast<std::size_t>(m_ * n_), B{});
    for (int v = 0; v < size_; ++v)
      for (int d = 0; d < m_; ++d) layer(d, coord(v, d)).set(v);
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (!g_.adjacent(a, b)) pairs_.emplace_back(a, b);
    lonely_.assign(static_cast<std::size_t>(n_), true);
    for (const auto &[a, b] : pairs_) lonely_[static_cast<std::size_t>(a)] = lonely_[static_cast<std::size_t>(b)] = false;
    for (int x = 0; x < h_size_; ++x) h_full_.set(x);
    for (int x = 0; x < h_size_; ++x) hrow_.push_back(rows_[static_cast<std::size_t>(x)] & h_full_);
    before_.assign(static_cast<std::size_t>(n_), {});
    for (const auto &[a, b] : pairs_) before_[static_cast<std::size_t>(b)].push_back(a);
    frontier_.assign(static_cast<std::size_t>(n_), {});
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < a; ++b) {
        bool open = false;
        for (const auto &[x, y] : pairs_) open = open || (x == b && y >= a);
        if (open) frontier_[static_cast<std::size_t>(a)].push_back(b);
      }
    // Caching pays off when few chosen layers stay open, as when the
    // complement of G is a cycle; otherwise branch on single vertices.
    layered_ = true;
    for (const auto &f : frontier_) layered_ = layered_ && f.size() <= 2;
    for (int a = 0; a < n_; ++a) {
      partners_.emplace_back();
      for (std::size_t p = 0; p < pairs_.size(); ++p)
        if (pairs_[p].second == a) partners_.back().push_back(static_cast<int>(p));
    }
  }

  int coord(int v, int d) const { return coord_[static_cast<std::size_t>(v * m_ + d)]; }

  /// Largest total over the layers subject to s_a <= w and pair sums <= w,
  /// optionally with layer `skip` forced to zero.
  int packing_bound(int skip = -1) const {
    std::vector<int> lo(static_cast<std::size_t>(n_), 0);
    std::vector<int> hi(static_cast<std::size_t>(n_), w_);
    if (skip >= 0) hi[static_cast<std::size_t>(skip)] = 0;
    std::vector<int> pair_cap(pairs_.size(), w_);
    return best_packing(lo, hi, pair_cap);
  }

  std::uint64_t nodes() const { return nodes_; }
  std::size_t representatives() const { return reps_; }

  /// Clique of size >= target, if any.
  std::optional<std::vector<int>> decide(int target) {
    target_ = target;
    const int lo_all = std::max(0, target - packing_bound(0));
    const int mu_max = target / n_;
    for (int mu = mu_max; mu >= lo_all; --mu) {
      for (const auto &rep : representatives(mu)) {
        ++reps_;
        std::vector<int> current(rep.begin(), rep.end());
        B p = full();
        for (int v : current) p = p & rows_[static_cast<std::size_t>(v)];
        p -= layer(0, 0);
        mu_ = mu;
        if (!layered_) {
          if (search(current, p)) return found_;
          continue;
        }
        chosen_.assign(static_cast<std::size_t>(n_), {});
        common_.assign(static_cast<std::size_t>(n_), B{});
        chosen_[0] = rep;
        common_[0] = h_full_;
        for (int x : rep) common_[0] = common_[0] & hrow_[static_cast<std::size_t>(x)];
        failed_.clear();
        if (layer_dfs(1, mu)) return found_;
      }
    }
    return std::nullopt;
  }

  std::vector<int> rotation_invariant_clique() const {
    // Orbits of (x_0, ..., x_{m-1}) -> (x_1, ..., x_{m-1}, x_0) that are cliques.
    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(static_cast<std::size_t>(size_), false);
    for (int v = 0; v < size_; ++v) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      std::vector<int> orbit;
      int u = v;
      do {
        orbit.push_back(u);
        seen[static_cast<std::size_t>(u)] = true;
        u = rotate(u);
      } while (u != v);
      bool clique = true;
      for (std::size_t i = 0; i < orbit.size() && clique; ++i)
        for (std::size_t j = i + 1; j < orbit.size() && clique; ++j)
          clique = rows_[static_cast<std::size_t>(orbit[i])].test(orbit[j]);
      if (clique) orbits.push_back(std::move(orbit));
    }
    const std::size_t k = orbits.size();
    std::vector<std::vector<bool>> joined(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        bool all = true;
        for (int a : orbits[i])
          for (int b : orbits[j])
            if (!rows_[static_cast<std::size_t>(a)].test(b)) all = false;
        joined[i][j] = joined[j][i] = all;
      }
    std::vector<int> best_set;
    int best_weight = 0;
    std::vector<int> current;
    std::function<void(std::vector<int>, int)> grow = [&](std::vector<int> cand, int weight) {
      if (deadline_.expired()) throw Aborted{};
      if (weight > best_weight) {
        best_weight = weight;
        best_set = current;
      }
      // Colour classes bounded by their heaviest member.
      std::vector<int> order;
      std::vector<int> bound;
      std::vector<int> rest = cand;
      int acc = 0;
      while (!rest.empty()) {
        std::vector<int> cls;
        std::vector<int> next;
        for (int x : rest) {
          bool ok = true;
          for (int y : cls)
            if (joined[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) ok = false;
          (ok ? cls : next).push_back(x);
        }
        int heavy = 0;
        for (int x : cls) heavy = std::max(heavy, static_cast<int>(orbits[static_cast<std::size_t>(x)].size()));
        acc += heavy;
        for (int x : cls) {
          order.push_back(x);
          bound.push_back(acc);
        }
        rest = std::move(next);
      }
      for (std::size_t i = order.size(); i-- > 0;) {
        if (weight + bound[i] <= best_weight) return;
        const int x = order[i];
        std::vector<int> next;
        for (std::size_t j = 0; j < i; ++j)
          if (joined[static_cast<std::size_t>(x)][static_cast<std::size_t>(order[j])])
            next.push_back(order[j]);
        current.push_back(x);
        grow(std::move(next), weight + static_cast<int>(orbits[static_cast<std::size_t>(x)].size()));
        current.pop_back();
      }
    };
    std::vector<int> all(k);
    std::iota(all.begin(), all.end(), 0);
    grow(all, 0);
    std::vector<int> out;
    for (int x : best_set) out.insert(out.end(), orbits[static_cast<std::size_t>(x)].begin(), orbits[static_cast<std::size_t>(x)].end());
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  B &layer(int d, int a) { return layers_[static_cast<std::size_t>(d * n_ + a)]; }
  const B &layer(int d, int a) const { return layers_[static_cast<std::size_t>(d * n_ + a)]; }

  B full() const {
    B b;
    for (int v = 0; v < size_; ++v) b.set(v);
    return b;
  }

  int rotate(int v) const {
    int out = 0;
    for (int d = 0; d < m_; ++d) out = out * n_ + coord(v, (d + 1) % m_);
    return out;
  }

  // Max sum with lo <= s <= hi and s_a + s_b <= pair_cap on the pairs.
  int best_packing(const std::vector<int> &lo, const std::vector<int> &hi,
                   const std::vector<int> &pair_cap) const {
    int best = -1;
    std::vector<int> s(static_cast<std::size_t>(n_), 0);
    std::vector<int> suffix(static_cast<std::size_t>(n_ + 1), 0);
    for (int a = n_ - 1; a >= 0; --a)
      suffix[static_cast<std::size_t>(a)] = suffix[static_cast<std::size_t>(a + 1)] + hi[static_cast<std::size_t>(a)];
    std::function<void(int, int)> dfs = [&](int a, int sum) {
      if (sum + suffix[static_cast<std::size_t>(a)] <= best) return;
      if (a == n_) {
        best = sum;
        return;
      }
      int top = hi[static_cast<std::size_t>(a)];
      for (int p : partners_[static_cast<std::size_t>(a)])
        top = std::min(top, pair_cap[static_cast<std::size_t>(p)] - s[static_cast<std::size_t>(pairs_[static_cast<std::size_t>(p)].first)]);
      for (int x = top; x >= lo[static_cast<std::size_t>(a)]; --x) {
        s[static_cast<std::size_t>(a)] = x;
        dfs(a + 1, sum + x);
      }
    };
    dfs(0, 0);
    return best;
  }

  // Exact clique number inside p (colour-bounded branch and bound).
  int omega_within(const B &p) {
    best_inner_ = 0;
    if (!p.none()) inner(0, p, 0);
    return best_inner_;
  }

  void inner(int size, B p, int depth) {
    if (static_cast<std::size_t>(depth) >= scratch_.size()) scratch_.emplace_back();
    auto &[order, colour] = scratch_[static_cast<std::size_t>(depth)];
    order.clear();
    colour.clear();
    B uncoloured = p;
    int k = 0;
    while (!uncoloured.none()) {
      ++k;
      B q = uncoloured;
      for (std::size_t i = 0; i < NW; ++i)
        while (q.w[i]) {
          const int v = static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(q.w[i])));
          uncoloured.reset(v);
          q.reset(v);
          q -= rows_[static_cast<std::size_t>(v)];
          order.push_back(v);
          colour.push_back(k);
        }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      auto &[ord, col] = scratch_[static_cast<std::size_t>(depth)];
      if (size + col[i] <= best_inner_) return;
      const int v = ord[i];
      const B next = p & rows_[static_cast<std::size_t>(v)];
      if (next.none())
        best_inner_ = std::max(best_inner_, size + 1);
      else
        inner(size + 1, next, depth + 1);
      p.reset(v);
    }
  }

  // Orbit representatives of mu-cliques of the first-coordinate layer under
  // Aut(G)^{m-1} with coordinate permutations.
  std::vector<std::vector<int>> representatives(int mu) {
    if (mu == 0) return {{}};
    const std::vector<std::vector<int>> maps = layer_maps();
    std::set<std::vector<int>> reps;
    std::vector<int> clique;
    std::function<void(B)> grow = [&](B cand) {
      if (static_cast<int>(clique.size()) == mu) {
        std::vector<int> best = clique;
        for (const auto &f : maps) {
          std::vector<int> img;
          for (int x : clique) img.push_back(f[static_cast<std::size_t>(x)]);
          std::sort(img.begin(), img.end());
          if (img < best) best = std::move(img);
        }
        reps.insert(std::move(best));
        return;
      }
      cand.for_each([&](int x) {
        if (!clique.empty() && x < clique.back()) return;
        clique.push_back(x);
        grow(cand & rows_[static_cast<std::size_t>(x)]);
        clique.pop_back();
      });
    };
    grow(layer(0, 0));
    return {reps.begin(), reps.end()};
  }

  // Permutations of the layer-0 vertices (indices < h_size_) induced by the
  // symmetry group; the identity alone when the group is too large.
  std::vector<std::vector<int>> layer_maps() const {
    std::vector<int> identity(static_cast<std::size_t>(h_size_));
    std::iota(identity.begin(), identity.end(), 0);
    const int k = m_ - 1;
    if (k == 0) return {identity};
    const auto aut = automorphisms(g_);
    double group = 1.0;
    for (int i = 0; i < k; ++i) group *= static_cast<double>(aut.size());
    for (int i = 2; i <= k; ++i) group *= i;
    if (aut.empty() || group > static_cast<double>(automorphism_group_cap)) return {identity};

    std::vector<std::vector<int>> maps;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
      while (true) {
        std::vector<int> f(static_cast<std::size_t>(h_size_));
        for (int x = 0; x < h_size_; ++x) {
          // x is the product vertex in layer 0; its coordinates 1..m-1 are the H digits.
          int y = 0;
          for (int i = 0; i < k; ++i) {
            const int src = perm[static_cast<std::size_t>(i)];
            y = y * n_ + aut[pick[static_cast<std::size_t>(i)]][static_cast<std::size_t>(coord(x, src + 1))];
          }
          f[static_cast<std::size_t>(x)] = y;
        }
        maps.push_back(std::move(f));
        int i = 0;
        while (i < k && ++pick[static_cast<std::size_t>(i)] == aut.size()) pick[static_cast<std::size_t>(i++)] = 0;
        if (i == k) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
  }

  // Layer (0, 0) is a smallest layer over every coordinate.
  int window_lo() const { return mu_; }

  // Every layer holds at least mu_, so one with a non-adjacent partner
  // holds at most w_ - mu_.
  int window_hi(int d, int a) const {
    if (d == 0 && a == 0) return mu_;
    return lonely_[static_cast<std::size_t>(a)] ? w_ : w_ - mu_;
  }

  bool search(std::vector<int> &current, B p) {
    ++nodes_;
    if ((nodes_ & 63U) == 0 && deadline_.expired()) throw Aborted{};
    if (static_cast<int>(current.size()) >= target_) {
      found_ = current;
      std::sort(found_.begin(), found_.end());
      return true;
    }
    if (static_cast<int>(current.size()) + p.count() < target_) return false;

    std::vector<int> counts(static_cast<std::size_t>(m_ * n_), 0);
    for (int v : current)
      for (int d = 0; d < m_; ++d) ++counts[static_cast<std::size_t>(d * n_ + coord(v, d))];
    for (int d = 0; d < m_; ++d)
      for (int a = 0; a < n_; ++a)
        if (counts[static_cast<std::size_t>(d * n_ + a)] >= window_hi(d, a)) p -= layer(d, a);

    int best_d = -1;
    int best_a = -1;
    int best_k = 1 << 30;
    std::vector<int> lo(static_cast<std::size_t>(n_));
    std::vector<int> hi(static_cast<std::size_t>(n_));
    std::vector<int> pair_cap(pairs_.size());
    std::vector<B> part(static_cast<std::size_t>(n_));
    for (int d = 0; d < m_; ++d) {
      for (int a = 0; a < n_; ++a) {
        const int c = counts[static_cast<std::size_t>(d * n_ + a)];
        part[static_cast<std::size_t>(a)] = p & layer(d, a);
        lo[static_cast<std::size_t>(a)] = std::max(window_lo(), c);
        hi[static_cast<std::size_t>(a)] =
            std::min(window_hi(d, a), c + omega_within(part[static_cast<std::size_t>(a)]));
        if (lo[static_cast<std::size_t>(a)] > hi[static_cast<std::size_t>(a)]) return false;
      }
      for (std::size_t q = 0; q < pairs_.size(); ++q) {
        const auto [a, b] = pairs_[q];
        pair_cap[q] = counts[static_cast<std::size_t>(d * n_ + a)] +
                      counts[static_cast<std::size_t>(d * n_ + b)] +
                      omega_within(part[static_cast<std::size_t>(a)] | part[static_cast<std::size_t>(b)]);
      }
      if (!packing_reaches(lo, hi, pair_cap)) return false;
      for (int a = 0; a < n_; ++a) {
        if (counts[static_cast<std::size_t>(d * n_ + a)] >= window_lo()) continue;
        const int k = part[static_cast<std::size_t>(a)].count();
        if (k < best_k) {
          best_k = k;
          best_d = d;
          best_a = a;
        }
      }
    }

    const bool deficient = best_d >= 0;
    if (!deficient) {
      for (int d = 0; d < m_; ++d)
        for (int a = 0; a < n_; ++a) {
          const int k = (p & layer(d, a)).count();
          if (k > 0 && k < best_k) {
            best_k = k;
            best_d = d;
            best_a = a;
          }
        }
      if (best_d < 0) return false;
    }
    const B branch = p & layer(best_d, best_a);
    std::vector<int> vs;
    branch.for_each([&](int v) { vs.push_back(v); });
    for (int v : vs) {
      current.push_back(v);
      if (search(current, p & rows_[static_cast<std::size_t>(v)])) return true;
      current.pop_back();
      p.reset(v);
    }
    // A deficient layer cannot be completed once all its candidates are out.
    return deficient ? false : search(current, p);
  }

  // Layer-by-layer search. Layer a is the clique A_a = {x : (a, x) in K} of
  // H = G^{*(m-1)}; non-adjacent layers a, b need A_a u A_b to be a clique
  // of H, so |A_a| + |A_b| <= w_. What is left to choose from layer a on
  // depends only on the chosen layers that still have an unchosen partner,
  // so failures are cached on those layers and the size still needed.
  bool layer_dfs(int a, int sum) {
    ++nodes_;
    if ((nodes_ & 255U) == 0 && deadline_.expired()) throw Aborted{};
    const int need = target_ - sum;
    if (a == n_) {
      if (need > 0) return false;
      found_.clear();
      for (int b = 0; b < n_; ++b)
        for (int x : chosen_[static_cast<std::size_t>(b)]) found_.push_back(b * h_size_ + x);
      std::sort(found_.begin(), found_.end());
      return true;
    }
    std::vector<std::uint64_t> key;
    key.push_back(static_cast<std::uint64_t>(a));
    for (int b : frontier_[static_cast<std::size_t>(a)]) {
      const auto &f = chosen_[static_cast<std::size_t>(b)];
      key.push_back(f.size());
      for (int x : f) key.push_back(static_cast<std::uint64_t>(x));
    }
    const auto hit = failed_.find(key);
    if (hit != failed_.end() && need >= hit->second) return false;

    B cand = h_full_;
    for (int b : before_[static_cast<std::size_t>(a)]) cand = cand & common_[static_cast<std::size_t>(b)];
    const int cap = lonely_[static_cast<std::size_t>(a)] ? w_ : w_ - mu_;
    const int hi = std::min(cap, omega_within(cand));
    bool ok = mu_ <= hi && remaining_packing(a, hi) >= need;
    if (ok) {
      std::vector<int> &mine = chosen_[static_cast<std::size_t>(a)];
      mine.clear();
      std::function<bool(const B &, const B &, int)> grow = [&](const B &c, const B &common, int from) {
        const int size = static_cast<int>(mine.size());
        if (size >= mu_) {
          common_[static_cast<std::size_t>(a)] = common;
          if (layer_dfs(a + 1, sum + size)) return true;
        }
        if (size == hi || size + c.count() < mu_) return false;
        bool found = false;
        c.for_each([&](int x) {
          if (found || x < from) return;
          mine.push_back(x);
          found = grow(c & hrow_[static_cast<std::size_t>(x)], common & hrow_[static_cast<std::size_t>(x)], x + 1);
          mine.pop_back();
        });
        return found;
      };
      if (grow(cand, h_full_, 0)) return true;
    }
    if (failed_.size() > failed_cap) failed_.clear();
    auto &slot = failed_[key];
    slot = slot == 0 ? need : std::min(slot, need);
    return false;
  }

  // Largest total for layers a.. given the chosen ones, with layer a at most
  // `hi_a` and pair sums at most w_.
  int remaining_packing(int a, int hi_a) const {
    std::vector<int> lo(static_cast<std::size_t>(n_), 0);
    std::vector<int> hi(static_cast<std::size_t>(n_), 0);
    std::vector<int> pair_cap(pairs_.size(), w_);
    for (int c = a; c < n_; ++c) {
      lo[static_cast<std::size_t>(c)] = mu_;
      hi[static_cast<std::size_t>(c)] = lonely_[static_cast<std::size_t>(c)] ? w_ : w_ - mu_;
    }
    hi[static_cast<std::size_t>(a)] = hi_a;
    for (std::size_t q = 0; q < pairs_.size(); ++q) {
      const auto [x, y] = pairs_[q];
      if (x < a && y >= a)
        hi[static_cast<std::size_t>(y)] = std::min(hi[static_cast<std::size_t>(y)],
                                                   w_ - static_cast<int>(chosen_[static_cast<std::size_t>(x)].size()));
    }
    for (int c = a; c < n_; ++c)
      if (lo[static_cast<std::size_t>(c)] > hi[static_cast<std::size_t>(c)]) return -1;
    return best_packing(lo, hi, pair_cap);
  }

  bool packing_reaches(const std::vector<int> &lo, const std::vector<int> &hi,
                       const std::vector<int> &pair_cap) const {
    for (std::size_t q = 0; q < pairs_.size(); ++q)
      if (lo[static_cast<std::size_t>(pairs_[q].first)] + lo[static_cast<std::size_t>(pairs_[q].second)] > pair_cap[q])
        return false;
    return best_packing_with_floor(lo, hi, pair_cap) >= target_;
  }

  int best_packing_with_floor(const std::vector<int> &lo, const std::vector<int> &hi,
                              const std::vector<int> &pair_cap) const {
    int best = -1;
    std::vector<int> s(static_cast<std::size_t>(n_), 0);
    std::vector<int> suffix(static_cast<std::size_t>(n_ + 1), 0);
    for (int a = n_ - 1; a >= 0; --a)
      suffix[static_cast<std::size_t>(a)] = suffix[static_cast<std::size_t>(a + 1)] + hi[static_cast<std::size_t>(a)];
    std::function<bool(int, int)> dfs = [&](int a, int sum) {
      if (sum + suffix[static_cast<std::size_t>(a)] < target_) return false;
      if (a == n_) {
        best = sum;
        return true;
      }
      int top = hi[static_cast<std::size_t>(a)];
      for (int q : partners_[static_cast<std::size_t>(a)])
        top = std::min(top, pair_cap[static_cast<std::size_t>(q)] - s[static_cast<std::size_t>(pairs_[static_cast<std::size_t>(q)].first)]);
      for (int x = top; x >= lo[static_cast<std::size_t>(a)]; --x) {
        s[static_cast<std::size_t>(a)] = x;
        if (dfs(a + 1, sum + x)) return true;
      }
      return false;
    };
    dfs(0, 0);
    return best;
  }

  const Graph &g_;
  int n_;
  int m_;
  int w_;
  detail::Deadline &deadline_;
  int size_ = 0;
  int h_size_ = 0;
  std::vector<int> coord_;
  std::vector<B> rows_;
  std::vector<B> layers_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> partners_; // pairs whose larger index is a
  std::vector<bool> lonely_;               // adjacent to every other index
  B h_full_;
  std::vector<B> hrow_;
  std::vector<std::vector<int>> before_;
  std::vector<std::vector<int>> frontier_;
  bool layered_ = false;
  std::unordered_map<std::vector<std::uint64_t>, int, KeyHash> failed_;
  std::vector<std::vector<int>> chosen_;
  std::vector<B> common_;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> scratch_;
  int best_inner_ = 0;
  int target_ = 0;
  int mu_ = 0;
  std::vector<int> found_;
  std::uint64_t nodes_ = 0;
  std::size_t reps_ = 0;
};

// Lifts cliques of G and of G^{*(m-1)} to their product clique.
std::vector<int> product_of(const std::vector<int> &a, const std::vector<int> &b, int h_size) {
  std::vector<int> out;
  for (int x : a)
    for (int y : b) out.push_back(x * h_size + y);
  std::sort(out.begin(), out.end());
  return out;
}

template <std::size_t NW>
void run_power(const Graph &g, int m, const PowerCliqueResult &below, detail::Deadline &deadline,
               PowerCliqueResult &out) {
  PowerSearch<NW> search(g, m, below.omega, deadline);
  out.upper_bound = search.packing_bound();
  int h_size = 1;
  for (int i = 1; i < m; ++i) h_size *= static_cast<int>(g.order());
  out.clique = product_of(max_clique(g).clique, below.clique, h_size);
  out.omega = static_cast<int>(out.clique.size());
  try {
    if (out.omega < out.upper_bound) {
      std::vector<int> sym = search.rotation_invariant_clique();
      out.symmetric_lower = static_cast<int>(sym.size());
      if (out.symmetric_lower > out.omega) {
        out.clique = std::move(sym);
        out.omega = out.symmetric_lower;
      }
    }
    while (out.omega < out.upper_bound) {
      const auto bigger = search.decide(out.omega + 1);
      if (!bigger) break;
      out.clique = *bigger;
      out.omega = static_cast<int>(bigger->size());
    }
  } catch (const Aborted &) {
    out.optimal = false;
  }
  out.nodes = search.nodes();
  out.representatives = search.representatives();
}

PowerCliqueResult power_clique_impl(const Graph &g, int m, detail::Deadline &deadline) {
  PowerCliqueResult out;
  if (m == 1) {
    const CliqueResult r = max_clique(g);
    out.omega = static_cast<int>(r.clique.size());
    out.clique = r.clique;
    out.upper_bound = out.omega;
    out.nodes = r.nodes;
    return out;
  }
  const PowerCliqueResult below = power_clique_impl(g, m - 1, deadline);
  if (!below.optimal) {
    out = below;
    out.optimal = false;
    return out;
  }
  std::size_t size = 1;
  for (int i = 0; i < m; ++i) size *= g.order();
  const std::size_t words = (size + 63) / 64;
  if (words <= 1)
    run_power<1>(g, m, below, deadline, out);
  else if (words <= 2)
    run_power<2>(g, m, below, deadline, out);
  else if (words <= 4)
    run_power<4>(g, m, below, deadline, out);
  else if (words <= 8)
    run_power<8>(g, m, below, deadline, out);
  else if (words <= 16)
    run_power<16>(g, m, below, deadline, out);
  else if (words <= 32)
    run_power<32>(g, m, below, deadline, out);
  else
    run_power<64>(g, m, below, deadline, out);
  out.nodes += below.nodes;
  return out;
}

} // namespace

PowerCliqueResult power_clique(const Graph &g, int m, const PowerCliqueOptions &options) {
  if (m < 1) throw InvalidParameter("power clique needs m >= 1");
  if (g.order() == 0) throw InvalidParameter("power clique needs a non-empty graph");
  if (g.vertex_transitive() != Transitivity::yes)
    throw InvalidParameter("power clique needs a graph flagged vertex transitive");
  double size = 1.0;
  for (int i = 0; i < m; ++i) size *= static_cast<double>(g.order());
  if (size > static_cast<double>(power_clique_vertex_cap))
    throw ResourceCap("power clique: " + std::to_string(static_cast<long long>(size)) +
                      " vertices exceeds the cap of " + std::to_string(power_clique_vertex_cap));
  const auto start = std::chrono::steady_clock::now();
  detail::Deadline deadline(options.budget_seconds);
  PowerCliqueResult out = power_clique_impl(g, m, deadline);
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

} // namespace ctxgraph
