#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricch {

// All arithmetic in this library is exact: integers are GMP mpz, rationals are
// GMP mpq kept canonical (denominator > 0, gcd(num, den) = 1). mpq_class
// operators preserve canonical form; only raw (num, den) construction needs
// the explicit canonicalization in make_rat.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

// floor(q), exact.
inline Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

// Round-to-nearest quotient (ties toward even floor side); used by the Smith
// reduction so remainders satisfy |r| <= |b|/2.
inline Int quot_near(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int babs = abs(b);
  if (2 * r > babs) q += 1;
  return q;
}

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer out of long range");
  return v.get_si();
}

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// gcd of all entries (0 for the zero vector).
inline Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

inline IntVec neg(const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

// Dense row-major integer matrix.
struct IntMat {
  int rows = 0, cols = 0;
  IntVec a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMat from_columns(const std::vector<IntVec>& cs) {
    if (cs.empty()) return IntMat();
    IntMat m(static_cast<int>(cs[0].size()), static_cast<int>(cs.size()));
    for (int j = 0; j < m.cols; ++j) {
      if (static_cast<int>(cs[j].size()) != m.rows)
        throw std::invalid_argument("from_columns: ragged input");
      for (int i = 0; i < m.rows; ++i) m.at(i, j) = cs[j][i];
    }
    return m;
  }

  static IntMat from_rows(const std::vector<IntVec>& rs) {
    if (rs.empty()) return IntMat();
    IntMat m(static_cast<int>(rs.size()), static_cast<int>(rs[0].size()));
    for (int i = 0; i < m.rows; ++i) {
      if (static_cast<int>(rs[i].size()) != m.cols)
        throw std::invalid_argument("from_rows: ragged input");
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = rs[i][j];
    }
    return m;
  }

  IntVec column(int j) const {
    IntVec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }

  IntVec row(int i) const {
    IntVec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
  }

  IntMat transposed() const {
    IntMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

inline IntMat mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mul: shape mismatch");
  IntMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

inline IntVec mul(const IntMat& m, const IntVec& v) {
  if (m.cols != static_cast<int>(v.size()))
    throw std::invalid_argument("mul: shape mismatch");
  IntVec r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

// "p" when integral, "p/q" otherwise; parse accepts both.
inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace toricch
