#include "ctxgraph/orthorep.hpp"

#include "ctxgraph/error.hpp"
#include "ctxgraph/invariants.hpp"
#include "ctxgraph/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ctxgraph {

namespace {

void require_odd(int n, int min, const char *what) {
  if (n < min || n % 2 == 0)
    throw InvalidParameter(std::string(what) + " needs odd n >= " + std::to_string(min) +
                           ", got " + std::to_string(n));
}

double dot(const std::vector<double> &a, const std::vector<double> &b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> unit(std::size_t d) {
  std::vector<double> e(d, 0.0);
  e[0] = 1.0;
  return e;
}

} // namespace

OrthonormalRepresentation build_or_cycle(int n) {
  require_odd(n, 5, "build_or_cycle");
  const double cos_phi = std::sqrt(theta_cycle(n).value / n);
  const double sin_phi = std::sqrt(1.0 - cos_phi * cos_phi);
  OrthonormalRepresentation rep;
  rep.target = cycle(n);
  rep.handle = unit(3);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * (k + 1) / n;
    rep.vectors.push_back({cos_phi, sin_phi * std::cos(angle), sin_phi * std::sin(angle)});
    // Offset s is inverted by -2 mod n, so k and k + s land on neighbours of the cycle.
    rep.relabel.push_back(((-2 * k) % n + n) % n);
  }
  return rep;
}

OrthonormalRepresentation build_or_anticycle(int n) {
  require_odd(n, 5, "build_or_anticycle");
  if (n == 5) {
    OrthonormalRepresentation rep = build_or_cycle(5);
    rep.target = anticycle(5);
    // Native offset 2 is already the anticycle's adjacency.
    rep.relabel.clear();
    return rep;
  }
  const double c = std::cos(std::numbers::pi / n);
  const double theta = theta_anticycle(n).value;
  const int d = n - 2;
  OrthonormalRepresentation rep;
  rep.target = anticycle(n);
  rep.handle = unit(static_cast<std::size_t>(d));
  for (int j = 0; j < n; ++j) {
    std::vector<double> v(static_cast<std::size_t>(d));
    v[0] = std::sqrt(theta / n);
    for (int m = 1; m <= (n - 3) / 2; ++m) {
      const double sign = (j * (m + 1)) % 2 == 0 ? 1.0 : -1.0;
      const double alt = (m + 1) % 2 == 0 ? 1.0 : -1.0;
      const double t =
          sign * std::sqrt(2.0 * (c + alt * std::cos((m + 1) * std::numbers::pi / n)) / (n * c));
      const double r = j * (m + 1) * std::numbers::pi / n;
      v[static_cast<std::size_t>(2 * m - 1)] = t * std::cos(r);
      v[static_cast<std::size_t>(2 * m)] = t * std::sin(r);
    }
    rep.vectors.push_back(std::move(v));
  }
  return rep;
}

Graph orthogonality_graph(const OrthonormalRepresentation &rep,
                          const FaithfulnessThresholds &thresholds) {
  return Graph::from_predicate(rep.size(), [&](int i, int j) {
    return std::abs(dot(rep.vectors[static_cast<std::size_t>(i)],
                        rep.vectors[static_cast<std::size_t>(j)])) <= thresholds.orthogonal;
  });
}

FaithfulnessReport verify_faithful(const OrthonormalRepresentation &rep,
                                   const FaithfulnessThresholds &thresholds) {
  FaithfulnessReport r;
  r.min_non_orthogonal = std::numeric_limits<double>::infinity();
  r.min_distance = std::numeric_limits<double>::infinity();
  const std::size_t n = rep.size();
  auto fail = [&](std::string why) {
    if (r.failure.empty()) r.failure = std::move(why);
  };

  if (rep.target.order() != n) fail("vector count differs from the target order");
  for (const auto &v : rep.vectors)
    if (v.size() != rep.dimension()) {
      fail("vectors of unequal dimension");
      r.pass = false;
      return r;
    }
  if (rep.dimension() == 0 && n > 0) fail("empty handle");

  for (std::size_t i = 0; i < n; ++i) {
    r.max_norm_error = std::max(r.max_norm_error, std::abs(std::sqrt(dot(rep.vectors[i], rep.vectors[i])) - 1.0));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double ip = std::abs(dot(rep.vectors[i], rep.vectors[j]));
      if (ip <= thresholds.orthogonal)
        r.max_orthogonal_residual = std::max(r.max_orthogonal_residual, ip);
      else
        r.min_non_orthogonal = std::min(r.min_non_orthogonal, ip);
      double dist2 = 0.0;
      for (std::size_t k = 0; k < rep.dimension(); ++k) {
        const double diff = rep.vectors[i][k] - rep.vectors[j][k];
        dist2 += diff * diff;
      }
      r.min_distance = std::min(r.min_distance, std::sqrt(dist2));
    }
  }
  if (r.max_norm_error > thresholds.norm) fail("a vector is not of unit norm");
  if (r.min_non_orthogonal < thresholds.non_orthogonal)
    fail("a non-orthogonal pair is too close to orthogonal");
  if (r.min_distance < thresholds.distinct) fail("two vertices share a vector");
  if (std::abs(std::sqrt(dot(rep.handle, rep.handle)) - 1.0) > thresholds.norm)
    fail("handle is not of unit norm");

  if (rep.target.order() == n) {
    const Graph pattern = orthogonality_graph(rep, thresholds);
    if (n <= 13) {
      r.pattern_matches = is_isomorphic(pattern, rep.target);
    } else if (rep.relabel.empty()) {
      r.pattern_matches = pattern.same_adjacency(rep.target);
    } else {
      r.pattern_matches = rep.relabel.size() == n;
      for (std::size_t i = 0; i < n && r.pattern_matches; ++i)
        for (std::size_t j = i + 1; j < n && r.pattern_matches; ++j)
          r.pattern_matches = pattern.adjacent(static_cast<int>(i), static_cast<int>(j)) ==
                              rep.target.adjacent(rep.relabel[i], rep.relabel[j]);
    }
    if (!r.pattern_matches) fail("orthogonality pattern does not match the target");
  }
  r.pass = r.failure.empty();
  return r;
}

double handle_value(const OrthonormalRepresentation &rep) {
  double s = 0.0;
  for (const auto &v : rep.vectors) {
    const double p = dot(v, rep.handle);
    s += p * p;
  }
  return s;
}

DimensionBound dimension_lower_bound(const Graph &g) {
  DimensionBound out;
  if (g.order() == 0) return out;
  {
    const CliqueResult omega = max_clique(g);
    out.terms.push_back({"clique", static_cast<int>(omega.clique.size()), true, omega.clique});
  }
  if (const auto hole = find_odd_hole(g)) out.terms.push_back({"odd-hole", 3, false, hole->vertices});
  if (const auto anti = find_largest_odd_antihole(g)) {
    const int k = static_cast<int>(anti->length());
    out.terms.push_back({"odd-antihole", 2 * k / 3, false, anti->vertices});
  }
  for (const auto &t : out.terms)
    if (t.value > out.bound) {
      out.bound = t.value;
      out.winner = t.source;
    }
  return out;
}

const char *to_string(WitnessCase c) noexcept {
  switch (c) {
  case WitnessCase::c1:
    return "C1";
  case WitnessCase::c2:
    return "C2";
  case WitnessCase::c3:
    return "C3";
  }
  return "C1";
}

DimensionWitness dimension_witness(int n) {
  require_odd(n, 5, "dimension_witness");
  DimensionWitness w;
  w.n = n;
  w.bound = 2 * n / 3;
  const int m = n / 3;
  w.which = n % 3 == 0 ? WitnessCase::c1 : (n % 3 == 1 ? WitnessCase::c2 : WitnessCase::c3);
  for (int i = 0; i < m; ++i) {
    w.vertex_set.push_back(3 * i + 1);
    w.vertex_set.push_back(3 * i + 2);
  }
  if (w.which == WitnessCase::c3) w.vertex_set.push_back(3 * m + 1);

  std::vector<int> zero_based;
  for (int v : w.vertex_set) zero_based.push_back(v - 1);
  const Graph induced = anticycle(n).induced(zero_based);
  const int k = static_cast<int>(zero_based.size());
  w.verified = k == w.bound && is_isomorphic(induced, complete_minus_matching(k));
  return w;
}

} // namespace ctxgraph
