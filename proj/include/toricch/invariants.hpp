#pragma once

#include <vector>

#include "toricch/cone.hpp"
#include "toricch/types.hpp"

namespace toricch {

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
  std::vector<Int> invariant_factors;  // each > 1, each dividing the next
  int free_rank = 0;

  bool trivial() const { return invariant_factors.empty() && free_rank == 0; }
  // Order of the torsion part (1 when trivial); only meaningful for free_rank 0.
  Int order() const {
    Int o = 1;
    for (const Int& f : invariant_factors) o *= f;
    return o;
  }
};

// Quotient of the ambient lattice by the sublattice the normals generate,
// computed from the Smith form of beta. Good cones always give free rank 0
// (the normals span); a nonzero free rank reports RankDeficient.
AbelianGroup fundamental_group(const GoodCone& cone);

// Kernel lattice of beta with the entry sum of each basis vector and their
// gcd c. c = 0 exactly when every sum vanishes (integer degree grading);
// c > 0 means degrees only make sense modulo 2c.
struct KernelData {
  std::vector<IntVec> basis;
  IntVec column_sums;
  Int chern_divisibility;
};
KernelData chern_data(const GoodCone& cone);

// 2c when c > 0, else 0 (plain integer grading).
long grading_modulus(const GoodCone& cone);

}  // namespace toricch
