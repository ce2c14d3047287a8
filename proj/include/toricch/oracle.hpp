#pragma once

#include <cstdint>
#include <vector>

#include "toricch/cone.hpp"
#include "toricch/homology.hpp"
#include "toricch/reeb.hpp"

namespace toricch {

// Test oracles: slower independent recomputations used to cross-check the
// main code paths.

// Active sets of the cone's edges by a different route: the edges are in
// bijection with the vertices of the affine slice {x : <x, nu_j> >= 0 for
// all j, <x, w> = 1} where w is the sum of the normals (strictly positive on
// the cone away from 0 when the cone is pointed). Vertices are found by an
// exhaustive basic-solution scan over facet subsets. Throws
// NoPositiveFunctional when the normals do not span (non-pointed dual).
std::vector<std::vector<int>> edges_via_slice(const ConeSpec& spec);

// Recomputes orbit degrees for multiples 1..20 from `trials` randomized
// re-presentations of one edge's frame: the frame vector shifted by integer
// combinations of the edge normals (coefficients in [-10, 10]) and the lift
// shifted additionally by kernel-lattice vectors (coefficients in [-3, 3]).
// True iff every recomputed degree matches the canonical frame's: equal when
// the grading is over Z, congruent mod 2c otherwise. Deterministic in seed.
bool degree_invariance_probe(const GoodCone& cone, const ReebVector& reeb,
                             const Edge& edge, int trials, std::uint64_t seed);

// Analytic rank table of the standard contact sphere S^{2n+1}: rank 1 at
// each even degree in [2n, cutoff], nothing else. Contributions are left
// empty (no edge attribution in the closed form).
RankTable sphere_closed_form(int n, long cutoff);

}  // namespace toricch
