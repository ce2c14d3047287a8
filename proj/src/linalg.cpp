#include "toricch/linalg.hpp"

#include <stdexcept>

namespace toricch {

Int det_int(IntMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det_int: not square");
  const int n = m.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

namespace {

// Row echelon over Q in place; returns pivot columns. rhs (optional) is
// carried along as extra columns.
std::vector<int> echelon(RatMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) swap(m.at(p, j), m.at(r, j));
    Rat inv = m.at(r, c);
    for (int j = 0; j < m.cols; ++j) m.at(r, j) /= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank_int(const IntMat& m) {
  RatMat q(m);
  return static_cast<int>(echelon(q).size());
}

std::optional<RatVec> solve_rational(RatMat a, RatVec b) {
  if (a.rows != static_cast<int>(b.size()))
    throw std::invalid_argument("solve_rational: shape mismatch");
  RatMat aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  std::vector<int> pivots = echelon(aug);
  // A pivot in the rhs column certifies inconsistency.
  if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
  RatVec x(a.cols);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), a.cols);
  return x;
}

std::optional<RatMat> invert_rational(RatMat a) {
  if (a.rows != a.cols) throw std::invalid_argument("invert_rational: not square");
  const int n = a.rows;
  RatMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<IntVec> rational_kernel_basis(const IntMat& a) {
  RatMat m(a);
  std::vector<int> pivots = echelon(m);
  std::vector<bool> is_pivot(a.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<IntVec> basis;
  for (int c = 0; c < a.cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(a.cols);
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), c);
    Int lcm = 1;
    for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    IntVec w(a.cols);
    for (int j = 0; j < a.cols; ++j) {
      Rat s = v[j] * Rat(lcm);
      w[j] = s.get_num();
    }
    Int g = content(w);
    if (g > 1)
      for (Int& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace toricch
