#pragma once

#include <vector>

#include "toricch/types.hpp"

namespace toricch {

// Smith normal form u * a * v = s with u, v unimodular, s diagonal,
// nonnegative, each diagonal entry dividing the next, zeros trailing.
// Pivot choice: minimal absolute value in the working submatrix, lowest
// row-major position on ties, so the output is deterministic.
struct SnfResult {
  IntMat s, u, v;
  IntVec diag;  // the min(rows, cols) diagonal entries of s
  int rank() const {
    int r = 0;
    for (const Int& d : diag)
      if (d != 0) ++r;
    return r;
  }
};
SnfResult snf(const IntMat& a);

// Column-style Hermite form h = a * u with u unimodular: pivot rows strictly
// increase, pivots positive, entries left of a pivot in its row lie in
// [0, pivot), trailing columns zero. The nonzero columns of h are a canonical
// basis of the column lattice of a.
struct HnfResult {
  IntMat h, u;
  std::vector<int> pivot_rows;  // row of the pivot in column t, t < rank
  int rank() const { return static_cast<int>(pivot_rows.size()); }
};
HnfResult hnf(const IntMat& a);

// Reduce x modulo the column lattice described by a Hermite form: after the
// call, 0 <= x[pivot_row(t)] < pivot(t) for every pivot column t. The residue
// is the unique such representative of x + lattice.
IntVec hermite_reduce(const HnfResult& h, IntVec x);

// Z-basis of the saturated kernel lattice {x in Z^cols : a x = 0}, presented
// in column Hermite form (deterministic). Every integer solution of a x = 0
// is an integer combination of the result.
std::vector<IntVec> kernel_lattice_basis(const IntMat& a);

// gcd of the entries is 1. Throws on the zero vector.
bool is_primitive(const IntVec& v);

// Given n vectors spanning a rank-n direct summand of Z^(n+1), return the
// unique eta with det[vs | eta] = +1 whose Hermite residues modulo span(vs)
// are minimal nonnegative. Throws NotCompletable when the span is not a
// direct summand (some Smith invariant differs from 1).
IntVec complete_to_unimodular(const std::vector<IntVec>& vs);

// Smallest positive integer N with a x = N y solvable over Z, together with
// the canonical solution (Hermite-reduced modulo the kernel lattice of a).
// Throws NoSolution when y is outside the rational column span.
struct DilatedSolution {
  Int n;
  IntVec x;
};
DilatedSolution solve_dilated(const IntMat& a, const IntVec& y);

}  // namespace toricch
