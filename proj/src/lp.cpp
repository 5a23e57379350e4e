#include "ctxgraph/lp.hpp"

#include "ctxgraph/error.hpp"

#include <string>

namespace ctxgraph {

void LinearProgram::validate() const {
  if (b.size() != a.size()) throw InvalidInput("lp: row count and rhs length differ");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != c.size())
      throw InvalidInput("lp: row " + std::to_string(i) + " has the wrong width");
    if (b[i].sign() < 0) throw InvalidInput("lp: negative right-hand side in row " + std::to_string(i));
  }
}

namespace {

class Tableau {
public:
  explicit Tableau(const LinearProgram &lp)
      : n_(lp.variables()), m_(lp.constraints() + lp.variables()), cols_(n_ + m_),
        rows_(m_, std::vector<Rational>(cols_ + 1)), cost_(cols_ + 1), basis_(m_) {
    for (std::size_t i = 0; i < lp.constraints(); ++i) {
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = lp.a[i][j];
      rows_[i][cols_] = lp.b[i];
    }
    for (std::size_t k = 0; k < n_; ++k) {
      rows_[lp.constraints() + k][k] = 1;
      rows_[lp.constraints() + k][cols_] = 1;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      rows_[i][n_ + i] = 1;
      basis_[i] = n_ + i;
    }
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = lp.c[j];
  }

  std::size_t run() {
    std::size_t pivots = 0;
    while (true) {
      const std::size_t enter = entering();
      if (enter == cols_) return pivots;
      const std::size_t leave = leaving(enter);
      if (leave == m_) throw Unbounded("lp: objective is unbounded");
      pivot(leave, enter);
      ++pivots;
    }
  }

  LpSolution solution(std::size_t pivots) const {
    LpSolution sol;
    sol.pivots = pivots;
    sol.value = -cost_[cols_];
    sol.primal.assign(n_, Rational{});
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) sol.primal[basis_[i]] = rows_[i][cols_];
    sol.dual.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) sol.dual[i] = -cost_[n_ + i];
    return sol;
  }

private:
  // Bland: lowest-index column with positive reduced cost.
  std::size_t entering() const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (cost_[j].sign() > 0) return j;
    return cols_;
  }

  // Minimum ratio; ties go to the lowest basic variable index.
  std::size_t leaving(std::size_t enter) const {
    std::size_t best = m_;
    Rational best_ratio;
    for (std::size_t i = 0; i < m_; ++i) {
      if (rows_[i][enter].sign() <= 0) continue;
      Rational ratio = rows_[i][cols_] / rows_[i][enter];
      if (best == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = Rational(1) / rows_[r][c];
    for (auto &x : rows_[r])
      if (!x.is_zero()) x *= inv;
    auto eliminate = [&](std::vector<Rational> &row) {
      if (row[c].is_zero()) return;
      const Rational f = row[c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (!rows_[r][j].is_zero()) row[j] -= f * rows_[r][j];
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(cost_);
    basis_[r] = c;
  }

  std::size_t n_, m_, cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> cost_; // reduced costs; last entry is -objective
  std::vector<std::size_t> basis_;
};

} // namespace

LpSolution simplex_max(const LinearProgram &lp) {
  lp.validate();
  Tableau t(lp);
  const std::size_t pivots = t.run();
  return t.solution(pivots);
}

bool certify(const LinearProgram &lp, const LpSolution &sol) {
  const std::size_t n = lp.variables();
  const std::size_t m = lp.constraints();
  if (sol.primal.size() != n || sol.dual.size() != m + n) return false;

  Rational objective;
  for (std::size_t j = 0; j < n; ++j) {
    if (sol.primal[j].sign() < 0 || sol.primal[j] > Rational(1)) return false;
    objective += lp.c[j] * sol.primal[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs;
    for (std::size_t j = 0; j < n; ++j) lhs += lp.a[i][j] * sol.primal[j];
    if (lhs > lp.b[i]) return false;
  }

  Rational dual_objective;
  for (std::size_t i = 0; i < m + n; ++i) {
    if (sol.dual[i].sign() < 0) return false;
    dual_objective += sol.dual[i] * (i < m ? lp.b[i] : Rational(1));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational col = sol.dual[m + j];
    for (std::size_t i = 0; i < m; ++i) col += lp.a[i][j] * sol.dual[i];
    if (col < lp.c[j]) return false;
  }
  return objective == sol.value && dual_objective == sol.value;
}

} // namespace ctxgraph
