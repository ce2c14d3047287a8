#include "toricch/reeb.hpp"

#include <exception>
#include <utility>

#include "toricch/cz.hpp"
#include "toricch/errors.hpp"
#include "toricch/lp.hpp"
#include "toricch/parallel.hpp"

namespace toricch {

ReebVector check_admissible(const GoodCone& cone, const RatVec& nu) {
  if (static_cast<int>(nu.size()) != cone.dim())
    throw SpecError("Reeb vector has dimension " + std::to_string(nu.size()) +
                    ", expected " + std::to_string(cone.dim()));
  PositiveCombination pc = positive_combination(cone.beta, nu);
  if (!pc.feasible) throw InadmissibleReeb(std::move(pc.certificate));
  ReebVector r;
  r.nu = nu;
  r.witness = std::move(pc.coeffs);
  return r;
}

namespace {

struct EdgeScreen {
  std::vector<DegenerateHit> hits;
  std::vector<ZeroCoeff> zeros;
};

// One edge's share of the genericity screen. N * b_i / b is integral exactly
// when den(b_i / b) divides N, so the degenerate multiples below n_max are
// the multiples of that denominator.
EdgeScreen screen_edge(const GoodCone& cone, const ReebVector& reeb,
                       const Edge& edge, long n_max) {
  EdgeScreen out;
  EdgeFrame frame = build_frame(cone, reeb, edge);
  for (size_t i = 0; i < frame.b_coeffs.size(); ++i) {
    if (frame.b_coeffs[i] == 0) {
      out.zeros.push_back({edge.id, static_cast<int>(i)});
      continue;
    }
    Rat ratio = frame.b_coeffs[i] / frame.b;
    Int den = rat_den(ratio);
    if (den > n_max) continue;
    long step = to_long(den);
    for (long m = step; m <= n_max; m += step)
      out.hits.push_back({edge.id, static_cast<int>(i), m});
  }
  return out;
}

GenericityReport merge_screens(std::vector<EdgeScreen> screens, long n_max) {
  GenericityReport rep;
  rep.n_max = n_max;
  for (EdgeScreen& s : screens) {
    rep.degenerate_hits.insert(rep.degenerate_hits.end(), s.hits.begin(),
                               s.hits.end());
    rep.zero_coeffs.insert(rep.zero_coeffs.end(), s.zeros.begin(), s.zeros.end());
  }
  return rep;
}

}  // namespace

GenericityReport nondegenerate_up_to_serial(const GoodCone& cone,
                                            const ReebVector& reeb, long n_max) {
  std::vector<EdgeScreen> screens;
  screens.reserve(cone.edges.size());
  for (const Edge& e : cone.edges) screens.push_back(screen_edge(cone, reeb, e, n_max));
  return merge_screens(std::move(screens), n_max);
}

GenericityReport nondegenerate_up_to(const GoodCone& cone, const ReebVector& reeb,
                                     long n_max) {
  const int count = static_cast<int>(cone.edges.size());
  if (effective_threads() <= 1 || count < 2)
    return nondegenerate_up_to_serial(cone, reeb, n_max);

  std::vector<EdgeScreen> screens(count);
  std::vector<std::exception_ptr> errors(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
#endif
  for (int e = 0; e < count; ++e) {
    try {
      screens[e] = screen_edge(cone, reeb, cone.edges[e], n_max);
    } catch (...) {
      errors[e] = std::current_exception();
    }
  }
  for (std::exception_ptr& err : errors)
    if (err) std::rethrow_exception(err);
  return merge_screens(std::move(screens), n_max);
}

namespace {

// Distinct primes at or after min_denominator. The seed shifts the window
// start by seed mod 101 primes, so different seeds give disjoint-looking but
// reproducible denominator sets.
std::vector<Int> prime_run(const Int& min_denominator, std::uint64_t seed,
                           int count) {
  Int p = min_denominator > 2 ? Int(min_denominator - 1) : Int(1);
  auto next = [&p]() { mpz_nextprime(p.get_mpz_t(), p.get_mpz_t()); };
  for (std::uint64_t s = seed % 101; s > 0; --s) next();
  std::vector<Int> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    next();
    out.push_back(p);
  }
  return out;
}

// Prime floors tried in order: the requested minimum first, then floors past
// the screen horizon. The jump matters: the ratio of two perturbation terms
// can keep a fixed prime denominator at every scale (e.g. when an edge frame
// has b equal to one perturbed coordinate), so shrinking alone never cleans
// the screen and only larger primes can.
std::vector<Int> floor_schedule(const Int& min_denominator, long n_max) {
  std::vector<Int> floors{min_denominator};
  Int f = min_denominator;
  if (f <= n_max) {
    f = Int(n_max) + 1;
    floors.push_back(f);
  }
  for (int i = 0; i < 4; ++i) {
    f *= 2;
    floors.push_back(f);
  }
  return floors;
}

}  // namespace

ReebVector generate_generic(const GoodCone& cone, const IntVec& target,
                            const GenOptions& opt) {
  const int dim = cone.dim();
  if (static_cast<int>(target.size()) != dim)
    throw SpecError("perturbation target has wrong dimension");
  std::vector<int> signs = opt.signs;
  if (signs.empty()) signs.assign(dim, 1);
  if (static_cast<int>(signs.size()) > dim)
    throw SpecError("more perturbation signs than coordinates");
  for (int s : signs)
    if (s != 1 && s != -1) throw SpecError("perturbation signs must be +1 or -1");
  if (opt.min_denominator < 2) throw SpecError("min denominator must be >= 2");

  for (const Int& floor : floor_schedule(opt.min_denominator, opt.n_max)) {
    std::vector<Int> primes =
        prime_run(floor, opt.seed, static_cast<int>(signs.size()));
    for (int h = 0; h <= opt.max_halvings; ++h) {
      Int scale_den = Int(1) << h;
      RatVec nu(dim);
      for (int i = 0; i < dim; ++i) nu[i] = Rat(target[i]);
      for (size_t i = 0; i < signs.size(); ++i)
        nu[i] += make_rat(Int(signs[i]), primes[i] * scale_den);

      ReebVector r;
      try {
        r = check_admissible(cone, nu);
      } catch (const InadmissibleReeb&) {
        continue;  // shrink the perturbation and retry
      }
      if (!nondegenerate_up_to(cone, r, opt.n_max).clean()) continue;
      r.provenance = {Provenance::Kind::GeneratedNear, target, -1, opt.seed};
      return r;
    }
  }
  throw GenerationFailed(
      "no admissible nondegenerate perturbation of the target found");
}

ReebVector generate_near_normal(const GoodCone& cone, int j, const GenOptions& opt) {
  const int d = cone.d();
  const int dim = cone.dim();
  if (j < 0 || j >= d) throw SpecError("normal index out of range");
  if (opt.min_denominator < 2) throw SpecError("min denominator must be >= 2");

  for (const Int& floor : floor_schedule(opt.min_denominator, opt.n_max)) {
    std::vector<Int> primes = prime_run(floor, opt.seed, d - 1);
    for (int h = 0; h <= opt.max_halvings; ++h) {
      Int scale_den = Int(1) << h;
      // Witness with every coefficient positive, so admissibility holds by
      // construction: coefficient 1 on normal j, tiny on the rest.
      RatVec witness(d);
      witness[j] = 1;
      int t = 0;
      for (int i = 0; i < d; ++i) {
        if (i == j) continue;
        witness[i] = make_rat(Int(1), primes[t++] * scale_den);
      }
      RatVec nu(dim, Rat(0));
      for (int i = 0; i < d; ++i)
        for (int r = 0; r < dim; ++r)
          nu[r] += witness[i] * Rat(cone.spec.normals[i][r]);

      ReebVector rv;
      rv.nu = std::move(nu);
      rv.witness = std::move(witness);
      rv.provenance = {Provenance::Kind::GeneratedNearNormal, {}, j, opt.seed};
      if (!nondegenerate_up_to(cone, rv, opt.n_max).clean()) continue;
      return rv;
    }
  }
  throw GenerationFailed("no nondegenerate Reeb vector near normal " +
                         std::to_string(j) + " found");
}

}  // namespace toricch
