#pragma once

#include "ctxgraph/graph.hpp"

#include <cstddef>
#include <string>

namespace ctxgraph {

inline constexpr std::size_t theta_sdp_vertex_cap = 64;
inline constexpr int theta_sdp_iteration_cap = 200000;
inline constexpr double decision_tolerance = 1e-4;

enum class ThetaMethod { closed_form, sdp };

const char *to_string(ThetaMethod m) noexcept;

struct ThetaValue {
  double value = 0.0;
  ThetaMethod method = ThetaMethod::closed_form;
  /// Certified upper minus lower bound; 0 for closed forms.
  double gap = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;
  bool converged = true;

  static ThetaValue exact(double v) { return {v, ThetaMethod::closed_form, 0.0, v, v, 0, true}; }
};

/// n cos(pi/n) / (1 + cos(pi/n)); n odd, n >= 5.
ThetaValue theta_cycle(int n);
/// (1 + cos(pi/n)) / cos(pi/n); n odd, n >= 5.
ThetaValue theta_anticycle(int n);

/// max <J, X> over X psd, tr X = 1, X_ij = 0 on edges, by a boundary point
/// (augmented Lagrangian) iteration. Each check derives a dual-feasible upper
/// bound from lambda_max(J - Y) and a primal-feasible lower bound by zeroing
/// edge entries of X and shifting it back into the psd cone; the run stops
/// when their difference is at most `tol`. Circulant-labelled inputs have
/// their iterates averaged over cyclic shifts.
ThetaValue theta_sdp(const Graph &g, double tol = 1e-6,
                     int iteration_cap = theta_sdp_iteration_cap);

/// Closed form when g is an odd cycle or odd anticycle (n >= 5, recognised
/// structurally), the SDP otherwise.
ThetaValue theta(const Graph &g, double tol = 1e-6);

enum class Verdict { qcg, qncg, undecided };

const char *to_string(Verdict v) noexcept;

struct ContextualityClass {
  int alpha = 0;
  ThetaValue theta;
  Verdict verdict = Verdict::undecided;
  double margin = 0.0; ///< theta.value - alpha
};

/// QCG when the certified lower bound on theta exceeds alpha by more than
/// `tolerance`; QNCG when |margin| and the gap are both within it; else
/// undecided.
ContextualityClass classify(const Graph &g, double tolerance = decision_tolerance);
ContextualityClass classify_with(int alpha, const ThetaValue &theta,
                                 double tolerance = decision_tolerance);

struct SandwichReport {
  int omega = 0;
  double theta_complement = 0.0;
  int chi = 0;
  bool holds = false;
};

/// omega(G) <= theta(complement G) <= chi(G), each side up to `tolerance`.
SandwichReport sandwich_check(const Graph &g, double tolerance = decision_tolerance);

} // namespace ctxgraph
