#include "toricch/lp.hpp"

#include <stdexcept>

#include "toricch/normal_form.hpp"

namespace toricch {

namespace {

struct Tableau {
  int m, k;                    // rows, structural columns
  RatMat t;                    // m x (k + m): structural block then B^-1 block
  RatVec rhs;                  // current basic values, kept >= 0
  std::vector<int> basis;      // column index basic in each row
  std::vector<bool> live_row;  // redundant rows get retired after phase 1
  std::vector<int> row_sign;   // original row orientation (b made nonnegative)

  void pivot(int r, int c) {
    Rat p = t.at(r, c);
    for (int j = 0; j < t.cols; ++j) t.at(r, j) /= p;
    rhs[r] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || t.at(i, c) == 0) continue;
      Rat f = t.at(i, c);
      for (int j = 0; j < t.cols; ++j) t.at(i, j) -= f * t.at(r, j);
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  // Bland phase: returns false when the objective is unbounded.
  bool run(const RatVec& cost, bool allow_artificial) {
    for (;;) {
      int enter = -1;
      const int limit = allow_artificial ? k + m : k;
      for (int j = 0; j < limit; ++j) {
        bool basic = false;
        for (int i = 0; i < m; ++i)
          if (live_row[i] && basis[i] == j) {
            basic = true;
            break;
          }
        if (basic) continue;
        // reduced cost c_j - z_j
        Rat z(0);
        for (int i = 0; i < m; ++i)
          if (live_row[i]) z += cost[basis[i]] * t.at(i, j);
        if (cost[j] - z > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (!live_row[i] || t.at(i, enter) <= 0) continue;
        Rat ratio = rhs[i] / t.at(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  RatVec duals(const RatVec& cost) const {
    RatVec y(m);
    for (int c = 0; c < m; ++c) {
      if (!live_row[c]) continue;  // dropped rows keep dual 0
      Rat z(0);
      for (int i = 0; i < m; ++i)
        if (live_row[i]) z += cost[basis[i]] * t.at(i, k + c);
      y[c] = Rat(row_sign[c]) * z;
    }
    return y;
  }
};

}  // namespace

LpSolution simplex_solve(const RatMat& a, const RatVec& b, const RatVec& c) {
  const int m = a.rows, k = a.cols;
  if (static_cast<int>(b.size()) != m || static_cast<int>(c.size()) != k)
    throw std::invalid_argument("simplex_solve: shape mismatch");

  Tableau tb;
  tb.m = m;
  tb.k = k;
  tb.t = RatMat(m, k + m);
  tb.rhs = b;
  tb.basis.resize(m);
  tb.live_row.assign(m, true);
  tb.row_sign.assign(m, 1);
  for (int i = 0; i < m; ++i) {
    int s = 1;
    if (b[i] < 0) {
      s = -1;
      tb.rhs[i] = -b[i];
    }
    tb.row_sign[i] = s;
    for (int j = 0; j < k; ++j) tb.t.at(i, j) = Rat(s) * a.at(i, j);
    tb.t.at(i, k + i) = 1;
    tb.basis[i] = k + i;
  }

  RatVec phase1_cost(k + m);
  for (int i = 0; i < m; ++i) phase1_cost[k + i] = -1;
  tb.run(phase1_cost, true);  // bounded by construction (objective <= 0)

  Rat infeas(0);
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] >= k) infeas += tb.rhs[i];
  LpSolution sol;
  if (infeas > 0) {
    sol.status = LpSolution::Status::Infeasible;
    sol.objective = -infeas;
    sol.y = tb.duals(phase1_cost);
    return sol;
  }

  // Drive basic artificials out (degenerate pivots); rows that resist are
  // redundant and get retired.
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] < k) continue;
    int col = -1;
    for (int j = 0; j < k; ++j)
      if (tb.t.at(i, j) != 0) {
        col = j;
        break;
      }
    if (col >= 0)
      tb.pivot(i, col);
    else
      tb.live_row[i] = false;
  }

  RatVec phase2_cost(k + m);
  for (int j = 0; j < k; ++j) phase2_cost[j] = c[j];
  if (!tb.run(phase2_cost, false)) {
    sol.status = LpSolution::Status::Unbounded;
    return sol;
  }

  sol.status = LpSolution::Status::Optimal;
  sol.x.assign(k, Rat(0));
  sol.objective = 0;
  for (int i = 0; i < m; ++i) {
    if (!tb.live_row[i] || tb.basis[i] >= k) continue;
    sol.x[tb.basis[i]] = tb.rhs[i];
    sol.objective += c[tb.basis[i]] * tb.rhs[i];
  }
  sol.y = tb.duals(phase2_cost);
  return sol;
}

bool verify_farkas(const IntMat& cols, const RatVec& target, const RatVec& y) {
  if (static_cast<int>(y.size()) != cols.rows ||
      static_cast<int>(target.size()) != cols.rows)
    return false;
  Rat yw(0);
  for (int j = 0; j < cols.cols; ++j) {
    Rat ycol(0);
    for (int i = 0; i < cols.rows; ++i) ycol += y[i] * Rat(cols.at(i, j));
    if (ycol > 0) return false;
    yw += ycol;
  }
  Rat yt(0);
  for (int i = 0; i < cols.rows; ++i) yt += y[i] * target[i];
  return yt >= 0 && yt > yw;
}

PositiveCombination positive_combination(const IntMat& cols, const RatVec& target) {
  const int m = cols.rows, d = cols.cols;
  if (static_cast<int>(target.size()) != m)
    throw std::invalid_argument("positive_combination: dimension mismatch");
  if (d == 0) throw std::invalid_argument("positive_combination: no columns");

  PositiveCombination out;

  // Outside the rational span there is a separating functional orthogonal to
  // every column; that is already the strongest certificate.
  if (!solve_rational(RatMat(cols), target)) {
    std::vector<IntVec> left = kernel_lattice_basis(cols.transposed());
    for (const IntVec& w : left) {
      Rat wt(0);
      for (int i = 0; i < m; ++i) wt += Rat(w[i]) * target[i];
      if (wt == 0) continue;
      RatVec y(m);
      for (int i = 0; i < m; ++i) y[i] = Rat(w[i]) / wt;  // y^T target = 1
      out.feasible = false;
      out.certificate.y = std::move(y);
      if (!verify_farkas(cols, target, out.certificate.y))
        throw Error("positive_combination: span certificate failed verification");
      return out;
    }
    throw Error("positive_combination: inconsistent span check");
  }

  // max t  s.t.  cols * (t*1 + s) = target, s >= 0, t <= 1 (cap keeps the
  // objective bounded; positivity of the optimum is scale-free).
  // Variables: s_0..s_{d-1}, t+, t-, u.
  const int k = d + 3;
  RatMat a(m + 1, k);
  RatVec b(m + 1), c(k);
  for (int i = 0; i < m; ++i) {
    Rat w(0);
    for (int j = 0; j < d; ++j) {
      a.at(i, j) = Rat(cols.at(i, j));
      w += Rat(cols.at(i, j));
    }
    a.at(i, d) = w;
    a.at(i, d + 1) = -w;
    b[i] = target[i];
  }
  a.at(m, d) = 1;
  a.at(m, d + 1) = -1;
  a.at(m, d + 2) = 1;
  b[m] = 1;
  c[d] = 1;
  c[d + 1] = -1;

  LpSolution lp = simplex_solve(a, b, c);
  if (lp.status != LpSolution::Status::Optimal)
    throw Error("positive_combination: capped program must be solvable");

  if (lp.objective > 0) {
    Rat t = lp.x[d] - lp.x[d + 1];
    out.feasible = true;
    out.coeffs.resize(d);
    for (int j = 0; j < d; ++j) out.coeffs[j] = lp.x[j] + t;
    RatVec check(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < d; ++j) check[i] += out.coeffs[j] * Rat(cols.at(i, j));
    for (int i = 0; i < m; ++i)
      if (check[i] != target[i])
        throw Error("positive_combination: witness failed verification");
    return out;
  }

  out.feasible = false;
  out.certificate.y.resize(m);
  for (int i = 0; i < m; ++i) out.certificate.y[i] = -lp.y[i];
  if (!verify_farkas(cols, target, out.certificate.y))
    throw Error("positive_combination: dual certificate failed verification");
  return out;
}

}  // namespace toricch
