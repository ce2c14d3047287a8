#include "toricch/normal_form.hpp"

#include <optional>
#include <stdexcept>

#include "toricch/errors.hpp"
#include "toricch/linalg.hpp"

namespace toricch {

namespace {

void swap_rows(IntMat& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMat& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b]
void row_sub(IntMat& m, int a, int b, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols; ++j) m.at(a, j) -= q * m.at(b, j);
}

// col[a] -= q * col[b]
void col_sub(IntMat& m, int a, int b, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntMat& m, int r) {
  for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

void negate_col(IntMat& m, int c) {
  for (int i = 0; i < m.rows; ++i) m.at(i, c) = -m.at(i, c);
}

}  // namespace

SnfResult snf(const IntMat& a) {
  if (a.rows == 0 || a.cols == 0) throw std::invalid_argument("snf: empty matrix");
  IntMat m = a;
  IntMat u = IntMat::identity(a.rows);
  IntMat v = IntMat::identity(a.cols);
  const int lim = std::min(a.rows, a.cols);

  for (int t = 0; t < lim; ++t) {
    for (;;) {
      // Minimal-|value| pivot, lowest row-major index on ties.
      int pi = -1, pj = -1;
      Int best;
      for (int i = t; i < m.rows; ++i)
        for (int j = t; j < m.cols; ++j) {
          const Int& x = m.at(i, j);
          if (x == 0) continue;
          Int ax = abs(x);
          if (pi < 0 || ax < best) {
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        t = lim;  // remaining submatrix is zero
        break;
      }
      swap_rows(m, t, pi);
      swap_rows(u, t, pi);
      swap_cols(m, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (int i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q = quot_near(m.at(i, t), m.at(t, t));
        row_sub(m, i, t, q);
        row_sub(u, i, t, q);
        if (m.at(i, t) != 0) clean = false;
      }
      if (!clean) continue;  // smaller remainder exists; repick pivot
      for (int j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q = quot_near(m.at(t, j), m.at(t, t));
        col_sub(m, j, t, q);
        col_sub(v, j, t, q);
        if (m.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain before moving on.
      bool fixed = false;
      for (int i = t + 1; i < m.rows && !fixed; ++i)
        for (int j = t + 1; j < m.cols && !fixed; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            row_sub(m, t, i, Int(-1));  // row_t += row_i
            row_sub(u, t, i, Int(-1));
            fixed = true;
          }
      if (fixed) continue;

      if (m.at(t, t) < 0) {
        negate_row(m, t);
        negate_row(u, t);
      }
      break;
    }
    if (t >= lim) break;
  }

  SnfResult r;
  r.s = std::move(m);
  r.u = std::move(u);
  r.v = std::move(v);
  r.diag.resize(lim);
  for (int i = 0; i < lim; ++i) r.diag[i] = r.s.at(i, i);
  return r;
}

HnfResult hnf(const IntMat& a) {
  if (a.rows == 0 || a.cols == 0) throw std::invalid_argument("hnf: empty matrix");
  IntMat m = a;
  IntMat u = IntMat::identity(a.cols);
  std::vector<int> pivot_rows;
  int k = 0;  // next pivot column

  for (int i = 0; i < m.rows && k < m.cols; ++i) {
    // Reduce row i over columns [k, cols) to a single nonzero entry.
    for (;;) {
      int jp = -1;
      Int best;
      for (int j = k; j < m.cols; ++j) {
        const Int& x = m.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (jp < 0 || ax < best) {
          best = ax;
          jp = j;
        }
      }
      if (jp < 0) break;  // no pivot in this row
      bool single = true;
      for (int j = k; j < m.cols; ++j) {
        if (j == jp || m.at(i, j) == 0) continue;
        Int q = quot_near(m.at(i, j), m.at(i, jp));
        col_sub(m, j, jp, q);
        col_sub(u, j, jp, q);
        if (m.at(i, j) != 0) single = false;
      }
      if (!single) continue;
      swap_cols(m, k, jp);
      swap_cols(u, k, jp);
      if (m.at(i, k) < 0) {
        negate_col(m, k);
        negate_col(u, k);
      }
      // Reduce earlier pivot columns in this row to [0, pivot).
      for (int j = 0; j < k; ++j) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, j).get_mpz_t(), m.at(i, k).get_mpz_t());
        col_sub(m, j, k, q);
        col_sub(u, j, k, q);
      }
      pivot_rows.push_back(i);
      ++k;
      break;
    }
  }

  HnfResult r;
  r.h = std::move(m);
  r.u = std::move(u);
  r.pivot_rows = std::move(pivot_rows);
  return r;
}

IntVec hermite_reduce(const HnfResult& h, IntVec x) {
  if (static_cast<int>(x.size()) != h.h.rows)
    throw std::invalid_argument("hermite_reduce: size mismatch");
  for (int t = 0; t < h.rank(); ++t) {
    int i = h.pivot_rows[t];
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x[i].get_mpz_t(), h.h.at(i, t).get_mpz_t());
    if (q == 0) continue;
    for (int r = 0; r < h.h.rows; ++r) x[r] -= q * h.h.at(r, t);
  }
  return x;
}

std::vector<IntVec> kernel_lattice_basis(const IntMat& a) {
  HnfResult hr = hnf(a);
  std::vector<IntVec> raw;
  for (int j = hr.rank(); j < a.cols; ++j) raw.push_back(hr.u.column(j));
  if (raw.empty()) return raw;
  // Canonical presentation: Hermite form of the kernel generators.
  HnfResult canon = hnf(IntMat::from_columns(raw));
  std::vector<IntVec> basis;
  for (int j = 0; j < canon.rank(); ++j) basis.push_back(canon.h.column(j));
  return basis;
}

bool is_primitive(const IntVec& v) {
  Int g = content(v);
  if (g == 0) throw std::invalid_argument("is_primitive: zero vector");
  return g == 1;
}

IntVec complete_to_unimodular(const std::vector<IntVec>& vs) {
  if (vs.empty()) throw std::invalid_argument("complete_to_unimodular: empty input");
  const int dim = static_cast<int>(vs[0].size());
  const int n = static_cast<int>(vs.size());
  if (n + 1 != dim)
    throw std::invalid_argument("complete_to_unimodular: need dim-1 vectors");
  IntMat m = IntMat::from_columns(vs);

  SnfResult sr = snf(m);
  if (sr.rank() != n) throw NotCompletable();
  for (const Int& d : sr.diag)
    if (d != 1) throw NotCompletable();

  // u m v = [I_n; 0], so m v agrees with the first n columns of u^-1 and the
  // last column of u^-1 completes them.
  std::optional<RatMat> uinv_q = invert_rational(RatMat(sr.u));
  if (!uinv_q) throw Error("complete_to_unimodular: unimodular factor not invertible");
  IntVec eta(dim);
  for (int i = 0; i < dim; ++i) {
    const Rat& q = uinv_q->at(i, dim - 1);
    if (q.get_den() != 1) throw Error("complete_to_unimodular: non-integer inverse");
    eta[i] = q.get_num();
  }

  IntMat full(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < n; ++j) full.at(i, j) = m.at(i, j);
    full.at(i, n) = eta[i];
  }
  Int d = det_int(full);
  if (d != 1 && d != -1) throw Error("complete_to_unimodular: completion not unimodular");
  if (d == -1) eta = neg(eta);

  // Canonical representative modulo the span of vs.
  eta = hermite_reduce(hnf(m), std::move(eta));
  return eta;
}

DilatedSolution solve_dilated(const IntMat& a, const IntVec& y) {
  if (a.rows != static_cast<int>(y.size()))
    throw std::invalid_argument("solve_dilated: size mismatch");
  HnfResult hr = hnf(a);
  const int r = hr.rank();

  // Coordinates of y in the Hermite basis of the column lattice, over Q.
  RatVec z(r);
  for (int t = 0; t < r; ++t) {
    int i = hr.pivot_rows[t];
    Rat acc(y[i]);
    for (int s = 0; s < t; ++s) acc -= Rat(hr.h.at(i, s)) * z[s];
    z[t] = acc / Rat(hr.h.at(i, t));
  }
  // Rows without pivots must match exactly, else y is outside the span.
  for (int i = 0; i < a.rows; ++i) {
    Rat acc(0);
    for (int t = 0; t < r; ++t) acc += Rat(hr.h.at(i, t)) * z[t];
    if (acc != Rat(y[i])) throw NoSolution("target outside the rational column span");
  }

  Int n = 1;
  for (const Rat& q : z) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), q.get_den().get_mpz_t());

  IntVec zcoords(a.cols);
  for (int t = 0; t < r; ++t) {
    Rat s = z[t] * Rat(n);
    zcoords[t] = s.get_num();
  }
  IntVec x = mul(hr.u, zcoords);

  std::vector<IntVec> kernel = kernel_lattice_basis(a);
  if (!kernel.empty()) x = hermite_reduce(hnf(IntMat::from_columns(kernel)), std::move(x));

  IntVec check = mul(a, x);
  for (int i = 0; i < a.rows; ++i)
    if (check[i] != n * y[i]) throw Error("solve_dilated: internal solve mismatch");
  return DilatedSolution{n, std::move(x)};
}

}  // namespace toricch
