#pragma once

// Shared test helpers: deterministic RNG, random lattice transforms, extra
// cone builders, and the closed-form index/rank tables used as oracles for
// the three-dimensional four-facet family ("ck").

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "toricch/cone.hpp"
#include "toricch/cz.hpp"
#include "toricch/homology.hpp"
#include "toricch/reeb.hpp"
#include "toricch/types.hpp"

namespace tsup {

using namespace toricch;

// splitmix64: tiny, seedable, reproducible across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {  // inclusive on both ends
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// Product of random elementary shears: always determinant +1.
inline IntMat random_unimodular(int dim, Rng& rng) {
  IntMat m = IntMat::identity(dim);
  for (int step = 0; step < 8 * dim; ++step) {
    int i = static_cast<int>(rng.range(0, dim - 1));
    int j = static_cast<int>(rng.range(0, dim - 1));
    if (i == j) continue;
    Int c(rng.range(-3, 3));
    for (int col = 0; col < dim; ++col) m.at(i, col) += c * m.at(j, col);
  }
  return m;
}

// Applies a lattice automorphism to every normal and optionally shuffles
// their order; both operations preserve goodness.
inline ConeSpec transform_cone(const ConeSpec& spec, const IntMat& a,
                               Rng* shuffle = nullptr) {
  std::vector<IntVec> normals;
  normals.reserve(spec.normals.size());
  for (const IntVec& nu : spec.normals) normals.push_back(mul(a, nu));
  if (shuffle) {
    for (int i = static_cast<int>(normals.size()) - 1; i > 0; --i) {
      int j = static_cast<int>(shuffle->range(0, i));
      std::swap(normals[i], normals[j]);
    }
  }
  return ConeSpec(spec.ambient_dim, std::move(normals));
}

// Cone over the n-cube: normals (+-e_i, 1), 2n facets, 2^n edges.
inline ConeSpec cube_cone(int n) {
  std::vector<IntVec> normals;
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      IntVec nu(n + 1);
      nu[i] = s;
      nu[n] = 1;
      normals.push_back(std::move(nu));
    }
  return ConeSpec(n + 1, std::move(normals), "cube:" + std::to_string(n));
}

// Good cone whose grading is only defined modulo 4 (Chern divisibility 2):
// kernel lattice generated by (2, 2, -1, -1), fundamental group Z/2.
inline ConeSpec torsion_cone() {
  return ConeSpec(3, {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 3}}, "torsion");
}

inline IntVec random_primitive(int dim, Rng& rng) {
  for (;;) {
    IntVec v(dim);
    bool zero = true;
    for (int i = 0; i < dim; ++i) {
      v[i] = Int(rng.range(-9, 9));
      if (v[i] != 0) zero = false;
    }
    if (zero) continue;
    Int g = content(v);
    for (Int& x : v) x /= g;
    return v;
  }
}

// Random good cone presentations across ambient dimensions 2..4: any two
// independent primitive normals in the plane, and unimodular images (with
// shuffled facet order) of known-good cones above it.
inline ConeSpec random_good_cone(int dim, Rng& rng) {
  if (dim == 2) {
    for (;;) {
      IntVec a = random_primitive(2, rng), b = random_primitive(2, rng);
      if (a[0] * b[1] - a[1] * b[0] != 0) return ConeSpec(2, {a, b});
    }
  }
  ConeSpec base = [&]() -> ConeSpec {
    if (dim == 3) {
      switch (rng.range(0, 3)) {
        case 0: return make_ck(static_cast<int>(rng.range(0, 4)));
        case 1: return make_square_cone();
        case 2: return make_simplex_cone(2);
        default: return cube_cone(2);
      }
    }
    switch (rng.range(0, 1)) {
      case 0: return make_simplex_cone(3);
      default: return cube_cone(3);
    }
  }();
  IntMat a = random_unimodular(dim, rng);
  return transform_cone(base, a, &rng);
}

inline const Edge* edge_by_active(const GoodCone& cone, std::vector<int> active) {
  std::sort(active.begin(), active.end());
  for (const Edge& e : cone.edges)
    if (e.active == active) return &e;
  return nullptr;
}

inline int sgn_rat(const Rat& q) {
  return q > 0 ? 1 : (q < 0 ? -1 : 0);
}

// Reeb vector generated near the vertical target (0, ..., 0, 1).
inline ReebVector near_vertical(const GoodCone& cone, std::vector<int> signs,
                                std::uint64_t seed = 0, Int min_den = 101,
                                long screen = 64) {
  GenOptions opt;
  opt.signs = std::move(signs);
  opt.seed = seed;
  opt.min_denominator = std::move(min_den);
  opt.n_max = screen;
  IntVec target(cone.dim());
  target[cone.dim() - 1] = 1;
  return generate_generic(cone, target, opt);
}

// ---- closed-form oracles for the four-facet family, k >= 1 ----
//
// Edge ids in sorted active-set order for make_ck(k):
//   id 0 = {0,1}, id 1 = {0,2}, id 2 = {1,3}, id 3 = {2,3}.
// The classical labels gamma_1..gamma_4 from the rank tables map to
//   gamma_1 -> id 1, gamma_2 -> id 0, gamma_3 -> id 3, gamma_4 -> id 2.
constexpr int kGamma1 = 1, kGamma2 = 0, kGamma3 = 3, kGamma4 = 2;

// Index of the N-th cover of each closed edge orbit for a Reeb vector
// (a1, a2, 1) with |a1|, |a2| small enough that no floor in the index
// formula crosses an integer for any multiple under test.
inline long mu_ck_near_vertical(int gamma, long k, long N, const Rat& a1,
                                const Rat& a2) {
  const long s1 = sgn_rat(a1), s2 = sgn_rat(a2);
  const long s12 = sgn_rat(Rat(2 * k - 1) * a1 + a2);
  switch (gamma) {
    case 1: return 2 * (N / k) + s1 + (N % k != 0 ? 1 : s2);
    case 2: return 2 * N + s1 - s2;
    case 3: return 2 * (N / k) - s1 + (N % k != 0 ? 1 : s12);
    default: return 2 * N - s12 - s1;
  }
}

// Index of the N-th cover of gamma_4 for a Reeb vector generated just inside
// the first normal ray (ascending perturbation denominators): piecewise in
// the window of width 2k+1 ending at m * (2k+1).
inline long mu4_near_first_normal(long k, long N) {
  const long w = 2 * k + 1;
  const long m = (N + w - 1) / w;
  if (N == m * w) return 2 * m + 2;
  if (N >= m * w - k) return 2 * m;
  return 2 * m - 2;
}

// Graded ranks of the four-facet family: k at degree 0, 2k+1 at degree 2,
// 2k+2 at every even degree >= 4 (k = 0 included).
inline std::map<long, long> expected_ck_ranks(long k, long cutoff) {
  std::map<long, long> r;
  if (k > 0) r[0] = k;
  for (long d = 2; d <= cutoff; d += 2) r[d] = (d == 2 ? 2 * k + 1 : 2 * k + 2);
  return r;
}

// Per-edge contributions in the near-vertical regime with a1, a2 < 0, k >= 1.
inline std::map<std::pair<int, long>, long> expected_ck_contributions_near_vertical(
    long k, long cutoff) {
  std::map<std::pair<int, long>, long> c;
  for (long d = 0; d <= cutoff; d += 2) {
    c[{kGamma1, d}] = k;
    if (d >= 2) c[{kGamma2, d}] = 1;
    if (d >= 2) c[{kGamma3, d}] = k;
    if (d >= 4) c[{kGamma4, d}] = 1;
  }
  return c;
}

// Per-edge contributions in the near-first-normal regime, k >= 1: only
// gamma_3 and gamma_4 stay at finite action.
inline std::map<std::pair<int, long>, long> expected_ck_contributions_near_first(
    long k, long cutoff) {
  std::map<std::pair<int, long>, long> c;
  c[{kGamma4, 0}] = k;
  if (cutoff >= 2) c[{kGamma4, 2}] = 2 * k;
  for (long d = 4; d <= cutoff; d += 2) c[{kGamma4, d}] = 2 * k + 1;
  for (long d = 2; d <= cutoff; d += 2) c[{kGamma3, d}] = 1;
  return c;
}

}  // namespace tsup
