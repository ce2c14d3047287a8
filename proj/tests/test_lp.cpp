#include "doctest.h"
#include "support.hpp"
#include "toricch/cone.hpp"
#include "toricch/lp.hpp"

using namespace toricch;
using tsup::Rng;

namespace {

// y^T A_j >= c_j for every column and y^T b = objective.
void check_dual_optimality(const RatMat& a, const RatVec& b, const RatVec& c,
                           const LpSolution& sol) {
  for (int j = 0; j < a.cols; ++j) {
    Rat ya(0);
    for (int i = 0; i < a.rows; ++i) ya += sol.y[i] * a.at(i, j);
    CHECK(ya >= c[j]);
  }
  Rat yb(0);
  for (int i = 0; i < a.rows; ++i) yb += sol.y[i] * b[i];
  CHECK(yb == sol.objective);
}

void check_primal_feasible(const RatMat& a, const RatVec& b, const LpSolution& sol) {
  for (int j = 0; j < a.cols; ++j) CHECK(sol.x[j] >= 0);
  for (int i = 0; i < a.rows; ++i) {
    Rat ax(0);
    for (int j = 0; j < a.cols; ++j) ax += a.at(i, j) * sol.x[j];
    CHECK(ax == b[i]);
  }
}

void check_infeasibility_certificate(const RatMat& a, const RatVec& b,
                                     const LpSolution& sol) {
  for (int j = 0; j < a.cols; ++j) {
    Rat ya(0);
    for (int i = 0; i < a.rows; ++i) ya += sol.y[i] * a.at(i, j);
    CHECK(ya >= 0);
  }
  Rat yb(0);
  for (int i = 0; i < a.rows; ++i) yb += sol.y[i] * b[i];
  CHECK(yb < 0);
}

RatMat rat_matrix(const std::vector<std::vector<long>>& rows) {
  RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = Rat(rows[i][j]);
  return m;
}

RatVec rat_vector(const std::vector<long>& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("optimal with exact duals") {
  RatMat a = rat_matrix({{1, 2}});
  RatVec b = rat_vector({4}), c = rat_vector({1, 1});
  LpSolution sol = simplex_solve(a, b, c);
  REQUIRE(sol.status == LpSolution::Status::Optimal);
  CHECK(sol.objective == 4);
  CHECK(sol.x == rat_vector({4, 0}));
  check_primal_feasible(a, b, sol);
  check_dual_optimality(a, b, c, sol);
}

TEST_CASE("redundant rows are tolerated") {
  RatMat a = rat_matrix({{1, 1}, {2, 2}});
  RatVec b = rat_vector({2, 4}), c = rat_vector({1, 0});
  LpSolution sol = simplex_solve(a, b, c);
  REQUIRE(sol.status == LpSolution::Status::Optimal);
  CHECK(sol.objective == 2);
  check_primal_feasible(a, b, sol);
  check_dual_optimality(a, b, c, sol);
}

TEST_CASE("infeasible with Farkas certificate") {
  RatMat a = rat_matrix({{1}, {1}});
  RatVec b = rat_vector({1, 2}), c = rat_vector({0});
  LpSolution sol = simplex_solve(a, b, c);
  REQUIRE(sol.status == LpSolution::Status::Infeasible);
  check_infeasibility_certificate(a, b, sol);
}

TEST_CASE("unbounded objective detected") {
  RatMat a = rat_matrix({{1, -1}});
  RatVec b = rat_vector({0}), c = rat_vector({1, 0});
  LpSolution sol = simplex_solve(a, b, c);
  CHECK(sol.status == LpSolution::Status::Unbounded);
}

TEST_CASE("random programs: every reported status is certified") {
  Rng rng(321);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int m = static_cast<int>(rng.range(1, 3));
    int k = static_cast<int>(rng.range(1, 4));
    RatMat a(m, k);
    RatVec b(m), c(k);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < k; ++j) a.at(i, j) = Rat(rng.range(-4, 4));
      b[i] = Rat(rng.range(-4, 4));
    }
    for (int j = 0; j < k; ++j) c[j] = Rat(rng.range(-3, 3));
    LpSolution sol = simplex_solve(a, b, c);
    switch (sol.status) {
      case LpSolution::Status::Optimal:
        ++optimal;
        check_primal_feasible(a, b, sol);
        check_dual_optimality(a, b, c, sol);
        break;
      case LpSolution::Status::Infeasible:
        ++infeasible;
        check_infeasibility_certificate(a, b, sol);
        break;
      case LpSolution::Status::Unbounded:
        ++unbounded;
        break;
    }
  }
  // The sample is varied enough to hit all three outcomes.
  CHECK(optimal > 0);
  CHECK(infeasible > 0);
  CHECK(unbounded > 0);
}

TEST_CASE("positive combination: interior target of the four-facet family") {
  IntMat cols = beta_matrix(make_ck(1));
  PositiveCombination pc = positive_combination(cols, rat_vector({0, 0, 1}));
  REQUIRE(pc.feasible);
  REQUIRE(static_cast<int>(pc.coeffs.size()) == cols.cols);
  RatVec check(cols.rows);
  for (int j = 0; j < cols.cols; ++j) {
    CHECK(pc.coeffs[j] > 0);
    for (int i = 0; i < cols.rows; ++i) check[i] += pc.coeffs[j] * Rat(cols.at(i, j));
  }
  CHECK(check == rat_vector({0, 0, 1}));
}

TEST_CASE("positive combination: infeasible interior target at k = 0") {
  IntMat cols = beta_matrix(make_ck(0));
  PositiveCombination pc = positive_combination(cols, rat_vector({0, 0, 1}));
  REQUIRE_FALSE(pc.feasible);
  CHECK(verify_farkas(cols, rat_vector({0, 0, 1}), pc.certificate.y));
}

TEST_CASE("positive combination: boundary targets are rejected") {
  // Strictly positive coefficients cannot reach a facet of the span.
  IntMat cols = IntMat::from_columns({{1, 0}, {0, 1}});
  PositiveCombination pc = positive_combination(cols, rat_vector({1, 0}));
  REQUIRE_FALSE(pc.feasible);
  CHECK(verify_farkas(cols, rat_vector({1, 0}), pc.certificate.y));
}

TEST_CASE("positive combination: target outside the rational span") {
  IntMat cols = IntMat::from_columns({{1, 0}});
  PositiveCombination pc = positive_combination(cols, rat_vector({0, 1}));
  REQUIRE_FALSE(pc.feasible);
  CHECK(verify_farkas(cols, rat_vector({0, 1}), pc.certificate.y));
}

TEST_CASE("verify_farkas rejects the zero functional") {
  IntMat cols = IntMat::from_columns({{1, 0}, {0, 1}});
  CHECK_FALSE(verify_farkas(cols, rat_vector({1, 1}), rat_vector({0, 0})));
}

TEST_CASE("random positive-combination instances are always certified") {
  Rng rng(99);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int m = static_cast<int>(rng.range(1, 3));
    int d = static_cast<int>(rng.range(1, 4));
    IntMat cols(m, d);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < d; ++j) cols.at(i, j) = Int(rng.range(-5, 5));
    RatVec target(m);
    if (trial % 3 == 0) {
      // Guaranteed-feasible family: strictly positive combination by design.
      for (int j = 0; j < d; ++j) {
        Rat w = Rat(rng.range(1, 5));
        for (int i = 0; i < m; ++i) target[i] += w * Rat(cols.at(i, j));
      }
    } else {
      for (int i = 0; i < m; ++i) target[i] = Rat(rng.range(-6, 6));
    }
    PositiveCombination pc = positive_combination(cols, target);
    if (pc.feasible) {
      ++feasible;
      RatVec check(m);
      for (int j = 0; j < d; ++j) {
        CHECK(pc.coeffs[j] > 0);
        for (int i = 0; i < m; ++i) check[i] += pc.coeffs[j] * Rat(cols.at(i, j));
      }
      CHECK(check == target);
      if (trial % 3 != 0) continue;
    } else {
      ++infeasible;
      CHECK(verify_farkas(cols, target, pc.certificate.y));
      CHECK_FALSE(trial % 3 == 0);
    }
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}

}  // TEST_SUITE
