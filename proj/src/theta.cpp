#include "ctxgraph/theta.hpp"

#include "ctxgraph/error.hpp"
#include "ctxgraph/invariants.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ctxgraph {

const char *to_string(ThetaMethod m) noexcept {
  return m == ThetaMethod::closed_form ? "closed-form" : "sdp";
}

const char *to_string(Verdict v) noexcept {
  switch (v) {
  case Verdict::qcg:
    return "QCG";
  case Verdict::qncg:
    return "QNCG";
  case Verdict::undecided:
    return "undecided";
  }
  return "undecided";
}

namespace {

void require_odd_cycle_length(int n, const char *what) {
  if (n < 5 || n % 2 == 0)
    throw InvalidParameter(std::string(what) + " needs odd n >= 5, got " + std::to_string(n));
}

using Matrix = Eigen::MatrixXd;

void average_over_shifts(Matrix &m) {
  const auto n = m.rows();
  Eigen::VectorXd diag_sum = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) diag_sum((j - i + n) % n) += m(i, j);
  diag_sum /= static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = diag_sum((j - i + n) % n);
  m = (m + m.transpose()) / 2.0; // keep exact symmetry for the offsets i and n-i
}

class BoundaryPoint {
public:
  BoundaryPoint(const Graph &g, double tol, int cap)
      : g_(g), n_(static_cast<Eigen::Index>(g.order())), edges_(g.edges()), tol_(tol), cap_(cap),
        circulant_(is_circulant_labelled(g)) {}

  ThetaValue run() {
    const Matrix c = Matrix::Ones(n_, n_);
    Matrix x = Matrix::Zero(n_, n_);
    Matrix z = Matrix::Zero(n_, n_);
    sigma_ = 0.1 / static_cast<double>(n_);
    ThetaValue out;
    out.method = ThetaMethod::sdp;
    out.converged = false;
    double best_lower = 0.0;
    double best_upper = std::numeric_limits<double>::infinity();

    Eigen::SelfAdjointEigenSolver<Matrix> eig;
    for (int iter = 1; iter <= cap_; ++iter) {
      // y from the normal equations A A^T y = A(Z + C + X/sigma) - b/sigma.
      const Matrix t = z + c + x / sigma_;
      y_edges_.resize(static_cast<Eigen::Index>(edges_.size()));
      for (std::size_t e = 0; e < edges_.size(); ++e)
        y_edges_(static_cast<Eigen::Index>(e)) = t(edges_[e].first, edges_[e].second);
      y_trace_ = (t.trace() - 1.0 / sigma_) / static_cast<double>(n_);

      const Matrix aty = adjoint();
      Matrix w = aty - c - x / sigma_;
      eig.compute(w);
      const auto &lam = eig.eigenvalues();
      const auto &vec = eig.eigenvectors();
      Matrix w_neg = Matrix::Zero(n_, n_);
      for (Eigen::Index k = 0; k < n_; ++k)
        if (lam(k) < 0.0) w_neg.noalias() += lam(k) * vec.col(k) * vec.col(k).transpose();
      z = w - w_neg;
      x = -sigma_ * w_neg;
      if (circulant_) {
        average_over_shifts(x);
        average_over_shifts(z);
      }

      double err_p = std::abs(x.trace() - 1.0);
      for (const auto &[i, j] : edges_) err_p = std::hypot(err_p, 2.0 * x(i, j));
      const double err_d = (z - aty + c).norm();
      if (err_d > 5000.0 * err_p) sigma_ *= 1.005;

      if (iter % 20 == 0 || iter == cap_) {
        best_upper = std::min(best_upper, upper_bound(aty - c));
        best_lower = std::max(best_lower, lower_bound(x));
        out.iterations = iter;
        if (best_upper - best_lower <= tol_) {
          out.converged = true;
          break;
        }
      }
    }
    out.lower = best_lower;
    out.upper = best_upper;
    out.gap = std::max(0.0, best_upper - best_lower);
    out.value = 0.5 * (best_lower + best_upper);
    return out;
  }

private:
  // A^T y: edge multipliers on both off-diagonal entries, trace multiplier on the diagonal.
  Matrix adjoint() const {
    Matrix m = y_trace_ * Matrix::Identity(n_, n_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const double v = y_edges_(static_cast<Eigen::Index>(e));
      m(edges_[e].first, edges_[e].second) += v;
      m(edges_[e].second, edges_[e].first) += v;
    }
    return m;
  }

  // Shifting the trace multiplier by -lambda_min makes A^T y - C psd.
  double upper_bound(const Matrix &slack) const {
    const double lmin = Eigen::SelfAdjointEigenSolver<Matrix>(slack, Eigen::EigenvaluesOnly)
                            .eigenvalues()(0);
    return y_trace_ - std::min(0.0, lmin);
  }

  double lower_bound(Matrix x) const {
    for (const auto &[i, j] : edges_) x(i, j) = x(j, i) = 0.0;
    const double lmin =
        Eigen::SelfAdjointEigenSolver<Matrix>(x, Eigen::EigenvaluesOnly).eigenvalues()(0);
    if (lmin < 0.0) x.diagonal().array() -= lmin;
    const double tr = x.trace();
    if (tr <= 0.0) return 1.0; // any single vertex is feasible
    return std::max(1.0, x.sum() / tr);
  }

  const Graph &g_;
  Eigen::Index n_;
  std::vector<Edge> edges_;
  double tol_;
  int cap_;
  bool circulant_;
  double sigma_ = 0.0;
  Eigen::VectorXd y_edges_;
  double y_trace_ = 0.0;
};

} // namespace

ThetaValue theta_cycle(int n) {
  require_odd_cycle_length(n, "theta_cycle");
  const double c = std::cos(std::numbers::pi / n);
  return ThetaValue::exact(n * c / (1.0 + c));
}

ThetaValue theta_anticycle(int n) {
  require_odd_cycle_length(n, "theta_anticycle");
  const double c = std::cos(std::numbers::pi / n);
  return ThetaValue::exact((1.0 + c) / c);
}

ThetaValue theta_sdp(const Graph &g, double tol, int iteration_cap) {
  if (g.order() > theta_sdp_vertex_cap)
    throw ResourceCap("theta SDP: " + std::to_string(g.order()) + " vertices exceeds the cap of " +
                      std::to_string(theta_sdp_vertex_cap));
  if (!(tol > 0.0)) throw InvalidParameter("theta SDP tolerance must be positive");
  if (g.order() == 0) return ThetaValue::exact(0.0);
  if (g.edge_count() == 0) {
    ThetaValue v = ThetaValue::exact(static_cast<double>(g.order()));
    v.method = ThetaMethod::sdp;
    return v;
  }
  return BoundaryPoint(g, tol, iteration_cap).run();
}

ThetaValue theta(const Graph &g, double tol) {
  const int n = static_cast<int>(g.order());
  if (n >= 5 && n % 2 == 1) {
    if (is_cycle_graph(g)) return theta_cycle(n);
    if (is_cycle_graph(complement(g))) return theta_anticycle(n);
  }
  return theta_sdp(g, tol);
}

ContextualityClass classify_with(int alpha, const ThetaValue &theta, double tolerance) {
  ContextualityClass out;
  out.alpha = alpha;
  out.theta = theta;
  out.margin = theta.value - alpha;
  if (theta.lower - alpha > tolerance)
    out.verdict = Verdict::qcg;
  else if (std::abs(out.margin) <= tolerance && theta.gap <= tolerance)
    out.verdict = Verdict::qncg;
  else
    out.verdict = Verdict::undecided;
  return out;
}

ContextualityClass classify(const Graph &g, double tolerance) {
  return classify_with(independence_number(g), theta(g), tolerance);
}

SandwichReport sandwich_check(const Graph &g, double tolerance) {
  if (g.order() > chromatic_vertex_cap)
    throw ResourceCap("sandwich check: graph exceeds " + std::to_string(chromatic_vertex_cap) +
                      " vertices");
  SandwichReport r;
  r.omega = clique_number(g);
  r.chi = chromatic_number(g);
  r.theta_complement = theta(complement(g)).value;
  r.holds = r.omega <= r.theta_complement + tolerance && r.theta_complement <= r.chi + tolerance;
  return r;
}

} // namespace ctxgraph
