#pragma once

#include <optional>
#include <vector>

#include "toricch/types.hpp"

namespace toricch {

// Dense row-major rational matrix; only what the solvers need.
struct RatMat {
  int rows = 0, cols = 0;
  RatVec a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  explicit RatMat(const IntMat& m) : rows(m.rows), cols(m.cols), a(m.a.size()) {
    for (size_t i = 0; i < m.a.size(); ++i) a[i] = Rat(m.a[i]);
  }

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Exact determinant of a square integer matrix (Bareiss fraction-free).
Int det_int(IntMat m);

// Rank over Q of an integer matrix.
int rank_int(const IntMat& m);

// One exact solution of A x = b over Q with free variables set to 0, or
// nullopt when the system is inconsistent. A may be any shape.
std::optional<RatVec> solve_rational(RatMat a, RatVec b);

// Inverse of a square rational matrix; nullopt when singular.
std::optional<RatMat> invert_rational(RatMat a);

// Basis of the rational kernel {x : A x = 0}, entries cleared to integers.
std::vector<IntVec> rational_kernel_basis(const IntMat& a);

}  // namespace toricch
