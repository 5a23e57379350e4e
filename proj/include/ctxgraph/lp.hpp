#pragma once

#include "ctxgraph/rational.hpp"

#include <cstddef>
#include <vector>

namespace ctxgraph {

/// maximize c.w  subject to  A w <= b,  0 <= w_i <= 1.
struct LinearProgram {
  std::vector<Rational> c;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;

  std::size_t variables() const noexcept { return c.size(); }
  std::size_t constraints() const noexcept { return a.size(); }

  /// Throws InvalidInput on ragged rows or a negative right-hand side.
  void validate() const;
};

struct LpSolution {
  Rational value;
  std::vector<Rational> primal;
  /// One multiplier per row of A followed by one per upper bound w_i <= 1.
  std::vector<Rational> dual;
  std::size_t pivots = 0;
};

/// Dense-tableau primal simplex with Bland's rule; exact throughout.
/// The slack basis is feasible because b >= 0, so no phase one is needed.
/// Raises Unbounded if a ratio test finds no blocking row.
LpSolution simplex_max(const LinearProgram &lp);

/// Checks the solution against the original data, independently of the pivot
/// loop: primal feasibility, dual feasibility (y >= 0, A'^T y >= c with the
/// bound rows appended) and equality of c.w, b'.y and the reported value.
bool certify(const LinearProgram &lp, const LpSolution &sol);

} // namespace ctxgraph
