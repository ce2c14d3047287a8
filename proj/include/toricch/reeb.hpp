#pragma once

#include <cstdint>
#include <vector>

#include "toricch/cone.hpp"
#include "toricch/types.hpp"

namespace toricch {

struct Provenance {
  enum class Kind { UserSupplied, GeneratedNear, GeneratedNearNormal };
  Kind kind = Kind::UserSupplied;
  IntVec target;         // GeneratedNear: the unperturbed integer target
  int normal_index = -1; // GeneratedNearNormal: which normal
  std::uint64_t seed = 0;
};

// Admissible Reeb vector: nu = beta * witness with every witness entry > 0.
struct ReebVector {
  RatVec nu;
  RatVec witness;
  Provenance provenance;
};

// Exact admissibility via positive_combination; throws InadmissibleReeb with
// a verified Farkas certificate otherwise.
ReebVector check_admissible(const GoodCone& cone, const RatVec& nu);

struct DegenerateHit {
  int edge, i;
  long multiple;  // N with N * b_i / b integral
  bool operator==(const DegenerateHit&) const = default;
};
struct ZeroCoeff {
  int edge, i;
  bool operator==(const ZeroCoeff&) const = default;
};

// Finite genericity certificate: for every edge frame, no transverse rotation
// coefficient vanishes and no multiple N <= n_max makes N * b_i / b integral.
struct GenericityReport {
  long n_max = 0;
  std::vector<DegenerateHit> degenerate_hits;
  std::vector<ZeroCoeff> zero_coeffs;
  bool clean() const { return degenerate_hits.empty() && zero_coeffs.empty(); }
};

// Screens all edges; parallel over edges with a deterministic merge. The
// serial variant is the reference implementation.
GenericityReport nondegenerate_up_to(const GoodCone& cone, const ReebVector& reeb,
                                     long n_max);
GenericityReport nondegenerate_up_to_serial(const GoodCone& cone,
                                            const ReebVector& reeb, long n_max);

struct GenOptions {
  long n_max = 64;             // screen horizon for the cleanliness check
  std::uint64_t seed = 0;      // selects the prime window deterministically
  std::vector<int> signs;      // +1/-1 per perturbed coordinate; see below
  Int min_denominator = 101;   // perturbation primes start at/after this
  int max_halvings = 48;       // perturbation scales tried: 1, 1/2, 1/4, ...
};

// nu = target + scale * sum_i s_i / p_i * e_i with distinct primes p_i and
// scale halved until the result is admissible and screens clean. signs of
// length L perturb only the first L coordinates (the rest stay exact);
// an empty signs list perturbs every coordinate with +1. Throws
// GenerationFailed when no tried scale works.
ReebVector generate_generic(const GoodCone& cone, const IntVec& target,
                            const GenOptions& opt);

// nu = normal_j + scale * sum_{i != j} (1 / p_i) * normal_i: admissible by
// construction (all combination coefficients positive), scale halved until
// the screen is clean. This is the construction for "Reeb vector near the
// normal ray j" regimes.
ReebVector generate_near_normal(const GoodCone& cone, int j, const GenOptions& opt);

}  // namespace toricch
