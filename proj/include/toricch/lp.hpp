#pragma once

#include <vector>

#include "toricch/errors.hpp"
#include "toricch/linalg.hpp"
#include "toricch/types.hpp"

namespace toricch {

// Exact primal simplex for  max c^T x  s.t.  A x = b, x >= 0,  with Bland's
// rule for both the entering and leaving choices (no cycling, deterministic).
// Two phases with artificial variables; redundant rows are dropped after
// phase 1 and their duals reported as 0.
//
// Status meanings:
//  Optimal    - x is an optimal basic solution, y the exact duals
//               (y^T A_j >= c_j for all j and y^T b = c^T x).
//  Infeasible - y is an exact Farkas certificate: y^T A_j >= 0 for all
//               columns j and y^T b < 0.
//  Unbounded  - the objective is unbounded above on the feasible set.
struct LpSolution {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status;
  Rat objective;
  RatVec x;
  RatVec y;
};
LpSolution simplex_solve(const RatMat& a, const RatVec& b, const RatVec& c);

// Decide whether target = sum_j a_j * cols_j has a solution with every
// a_j > 0 (exact). Feasible: coeffs is one such witness, obtained from
// max min_j a_j capped at 1. Infeasible: certificate y satisfies
//   (1) y^T cols_j <= 0 for all j,
//   (2) y^T target >= 0,
//   (3) y^T target > y^T (sum_j cols_j),
// which together refute any strictly positive combination.
struct PositiveCombination {
  bool feasible;
  RatVec coeffs;
  FarkasCertificate certificate;
};
PositiveCombination positive_combination(const IntMat& cols, const RatVec& target);

// Exact verification of the certificate conditions (1)-(3) above.
bool verify_farkas(const IntMat& cols, const RatVec& target, const RatVec& y);

}  // namespace toricch
