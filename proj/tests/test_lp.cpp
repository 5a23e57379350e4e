#include "support/oracles.hpp"

#include "ctxgraph/error.hpp"
#include "ctxgraph/invariants.hpp"
#include "ctxgraph/lp.hpp"
#include "ctxgraph/rational.hpp"

#include <doctest.h>

using namespace ctxgraph;

namespace {

Rational dot(const std::vector<Rational> &x, const std::vector<Rational> &y) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s = s + x[i] * y[i];
  return s;
}

void check_exact(const LinearProgram &lp, const LpSolution &sol) {
  REQUIRE(sol.primal.size() == lp.variables());
  for (std::size_t r = 0; r < lp.constraints(); ++r) CHECK(dot(lp.a[r], sol.primal) <= lp.b[r]);
  for (const Rational &w : sol.primal) {
    CHECK(w >= Rational(0));
    CHECK(w <= Rational(1));
  }
  CHECK(dot(lp.c, sol.primal) == sol.value);
  CHECK(certify(lp, sol));
}

} // namespace

TEST_CASE("rational arithmetic") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational::parse("7/3") == Rational(7, 3));
  CHECK(Rational::parse("5").str() == "5/1");
  CHECK(Rational(4, 6).str() == "2/3");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), InvalidParameter);
  CHECK_THROWS_AS(Rational::parse("1/x"), InvalidInput);
}

TEST_CASE("simplex on small programs") {
  LinearProgram one{{1}, {{1}}, {1}};
  const LpSolution s1 = simplex_max(one);
  CHECK(s1.value == Rational(1));
  check_exact(one, s1);

  LinearProgram k3{{1, 1, 1}, {{1, 1, 1}}, {1}};
  const LpSolution s3 = simplex_max(k3);
  CHECK(s3.value == Rational(1));
  check_exact(k3, s3);

  const LinearProgram c5 = packing_lp(cycle(5), maximal_cliques(cycle(5)));
  CHECK(c5.constraints() == 5);
  const LpSolution s5 = simplex_max(c5);
  CHECK(s5.value == Rational(5, 2));
  check_exact(c5, s5);
}

TEST_CASE("simplex rejects malformed programs") {
  LinearProgram ragged{{1, 1}, {{1}}, {1}};
  CHECK_THROWS_AS(simplex_max(ragged), InvalidInput);
  LinearProgram negative{{1}, {{1}}, {-1}};
  CHECK_THROWS_AS(simplex_max(negative), InvalidInput);
}

TEST_CASE("simplex matches vertex enumeration on random programs") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-3, 4);
  std::uniform_int_distribution<int> rhs(0, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 3);
    LinearProgram lp;
    for (std::size_t i = 0; i < n; ++i) lp.c.emplace_back(coef(rng));
    for (std::size_t r = 0; r < m; ++r) {
      lp.a.emplace_back();
      for (std::size_t i = 0; i < n; ++i) lp.a.back().emplace_back(coef(rng));
      lp.b.emplace_back(rhs(rng));
    }
    const LpSolution sol = simplex_max(lp);
    CHECK(sol.value == oracle::lp_by_vertices(lp));
    check_exact(lp, sol);
  }
}

TEST_CASE("certify rejects a wrong value") {
  const LinearProgram c5 = packing_lp(cycle(5), maximal_cliques(cycle(5)));
  LpSolution sol = simplex_max(c5);
  sol.value = Rational(3);
  CHECK_FALSE(certify(c5, sol));
}
