#include "toricch/invariants.hpp"

#include "toricch/errors.hpp"
#include "toricch/normal_form.hpp"

namespace toricch {

AbelianGroup fundamental_group(const GoodCone& cone) {
  SnfResult sr = snf(cone.beta);
  AbelianGroup g;
  g.free_rank = cone.dim() - sr.rank();
  if (g.free_rank != 0)
    throw RankDeficient("normals do not span the ambient lattice over Q");
  for (const Int& d : sr.diag)
    if (d > 1) g.invariant_factors.push_back(d);
  return g;
}

KernelData chern_data(const GoodCone& cone) {
  KernelData k;
  k.basis = kernel_lattice_basis(cone.beta);
  k.column_sums.reserve(k.basis.size());
  Int g = 0;
  for (const IntVec& v : k.basis) {
    Int s = 0;
    for (const Int& x : v) s += x;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
    k.column_sums.push_back(std::move(s));
  }
  k.chern_divisibility = g;
  return k;
}

long grading_modulus(const GoodCone& cone) {
  Int c = chern_data(cone).chern_divisibility;
  return c == 0 ? 0L : 2 * to_long(c);
}

}  // namespace toricch
