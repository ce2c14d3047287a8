#include "toricch/oracle.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "toricch/cz.hpp"
#include "toricch/errors.hpp"
#include "toricch/invariants.hpp"
#include "toricch/linalg.hpp"
#include "toricch/normal_form.hpp"

namespace toricch {

namespace {

// splitmix64: tiny deterministic generator, identical on every platform
// (tests must not depend on the standard library's distribution internals).
struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

std::vector<std::vector<int>> edges_via_slice(const ConeSpec& spec) {
  const int dim = spec.ambient_dim;
  const int n = spec.n();
  const int d = spec.d();
  if (rank_int(IntMat::from_rows(spec.normals)) < dim) throw NoPositiveFunctional();

  IntVec w(dim, 0);
  for (const IntVec& nu : spec.normals)
    for (int r = 0; r < dim; ++r) w[r] += nu[r];

  std::set<std::vector<int>> found;
  std::vector<int> subset(n);
  // Iterate over all size-n facet subsets with a manual odometer.
  for (int i = 0; i < n; ++i) subset[i] = i;
  while (true) {
    RatMat a(dim, dim);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < dim; ++c) a.at(i, c) = Rat(spec.normals[subset[i]][c]);
    for (int c = 0; c < dim; ++c) a.at(n, c) = Rat(w[c]);
    RatVec rhs(dim, Rat(0));
    rhs[n] = 1;
    if (auto x = solve_rational(a, rhs)) {
      bool feasible = true;
      std::vector<int> active;
      for (int j = 0; j < d && feasible; ++j) {
        Rat v(0);
        for (int c = 0; c < dim; ++c) v += (*x)[c] * Rat(spec.normals[j][c]);
        if (v < 0)
          feasible = false;
        else if (v == 0)
          active.push_back(j);
      }
      // Singular subsets solve with free variables zeroed; only genuine
      // vertices count: the subset must lie in the active set and the active
      // constraints together with the slice row must pin the point down.
      bool covers = feasible;
      for (int i = 0; i < n && covers; ++i)
        covers = std::binary_search(active.begin(), active.end(), subset[i]);
      if (covers) {
        std::vector<IntVec> pinned;
        pinned.reserve(active.size() + 1);
        for (int j : active) pinned.push_back(spec.normals[j]);
        pinned.push_back(w);
        if (rank_int(IntMat::from_rows(pinned)) == dim) found.insert(active);
      }
    }
    int pos = n - 1;
    while (pos >= 0 && subset[pos] == d - n + pos) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int i = pos + 1; i < n; ++i) subset[i] = subset[i - 1] + 1;
  }
  return {found.begin(), found.end()};
}

bool degree_invariance_probe(const GoodCone& cone, const ReebVector& reeb,
                             const Edge& edge, int trials, std::uint64_t seed) {
  constexpr long kMaxMultiple = 20;
  EdgeFrame canonical = build_frame(cone, reeb, edge);
  Int modulus(grading_modulus(cone));
  const int dim = cone.dim();
  const int n = cone.n();

  std::vector<Int> reference;
  for (long m = 1; m <= kMaxMultiple; ++m)
    reference.push_back(orbit_degree(cz_index(canonical, m, dim), dim, modulus).value);

  std::vector<IntVec> kernel = kernel_lattice_basis(cone.beta);
  SplitMix rng(seed);
  for (int t = 0; t < trials; ++t) {
    IntVec eta = canonical.eta;
    IntVec lift = canonical.eta_lift;
    for (int i = 0; i < n; ++i) {
      Int c(rng.range(-10, 10));
      const IntVec& nu = cone.spec.normals[edge.active[i]];
      for (int r = 0; r < dim; ++r) eta[r] += c * nu[r];
      lift[edge.active[i]] += canonical.n_mult * c;
    }
    for (const IntVec& k : kernel) {
      Int c(rng.range(-3, 3));
      for (int r = 0; r < cone.d(); ++r) lift[r] += c * k[r];
    }
    EdgeFrame probe =
        build_frame_with(cone, reeb, edge, eta, canonical.n_mult, lift);
    for (long m = 1; m <= kMaxMultiple; ++m) {
      Int got = orbit_degree(cz_index(probe, m, dim), dim, modulus).value;
      if (got != reference[m - 1]) return false;
    }
  }
  return true;
}

RankTable sphere_closed_form(int n, long cutoff) {
  if (n < 1) throw SpecError("sphere dimension parameter must be >= 1");
  RankTable t;
  t.grading_modulus = 0;
  t.cutoff_degree = cutoff;
  t.completeness_bound = cutoff;
  for (long deg = 2L * n; deg <= cutoff; deg += 2) t.ranks[deg] = 1;
  return t;
}

}  // namespace toricch
