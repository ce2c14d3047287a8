#include "toricch/cz.hpp"

#include <utility>

#include "toricch/errors.hpp"
#include "toricch/invariants.hpp"
#include "toricch/linalg.hpp"
#include "toricch/normal_form.hpp"

namespace toricch {

namespace {

// Coefficients of nu in the basis {nu_{l_1}, ..., nu_{l_n}, N * eta}.
struct BSolve {
  RatVec b_coeffs;
  Rat b;
};

BSolve solve_b(const GoodCone& cone, const RatVec& nu, const Edge& edge,
               const IntVec& eta, const Int& n_mult) {
  const int dim = cone.dim();
  const int n = cone.n();
  RatMat a(dim, dim);
  for (int c = 0; c < n; ++c) {
    const IntVec& col = cone.spec.normals[edge.active[c]];
    for (int r = 0; r < dim; ++r) a.at(r, c) = Rat(col[r]);
  }
  for (int r = 0; r < dim; ++r) a.at(r, n) = Rat(n_mult * eta[r]);
  auto x = solve_rational(std::move(a), nu);
  if (!x) throw Error("edge frame matrix is singular");  // basis, cannot happen
  BSolve out;
  out.b_coeffs.assign(x->begin(), x->begin() + n);
  out.b = std::move((*x)[n]);
  return out;
}

EdgeFrame finish_frame(const GoodCone& cone, const ReebVector& reeb,
                       const Edge& edge, IntVec eta, Int n_mult, IntVec eta_lift) {
  BSolve bs = solve_b(cone, reeb.nu, edge, eta, n_mult);
  if (bs.b == 0) throw DegenerateReeb(edge.id);
  if (bs.b < 0) {
    // Orient the frame so the Reeb coefficient on it is positive; the lift
    // flips with it (beta maps -eta_lift to N * -eta), the b_i stay put.
    eta = neg(eta);
    eta_lift = neg(eta_lift);
    bs.b = -bs.b;
  }
  EdgeFrame f;
  f.edge = edge;
  f.eta = std::move(eta);
  f.n_mult = std::move(n_mult);
  f.eta_lift = std::move(eta_lift);
  f.b_coeffs = std::move(bs.b_coeffs);
  f.b = std::move(bs.b);
  f.lift_colsum = 0;
  for (const Int& v : f.eta_lift) f.lift_colsum += v;
  return f;
}

}  // namespace

EdgeFrame build_frame(const GoodCone& cone, const ReebVector& reeb, const Edge& edge) {
  std::vector<IntVec> ns;
  ns.reserve(edge.active.size());
  for (int j : edge.active) ns.push_back(cone.spec.normals[j]);
  IntVec eta = complete_to_unimodular(ns);
  DilatedSolution lift = solve_dilated(cone.beta, eta);
  return finish_frame(cone, reeb, edge, std::move(eta), std::move(lift.n),
                      std::move(lift.x));
}

EdgeFrame build_frame_with(const GoodCone& cone, const ReebVector& reeb,
                           const Edge& edge, const IntVec& eta, const Int& n_mult,
                           const IntVec& eta_lift) {
  if (n_mult < 1) throw SpecError("frame multiple must be positive");
  if (static_cast<int>(eta.size()) != cone.dim() ||
      static_cast<int>(eta_lift.size()) != cone.d())
    throw SpecError("frame data has wrong dimensions");
  std::vector<IntVec> cols;
  cols.reserve(edge.active.size() + 1);
  for (int j : edge.active) cols.push_back(cone.spec.normals[j]);
  cols.push_back(eta);
  Int det = det_int(IntMat::from_columns(cols));
  if (det != 1 && det != -1)
    throw SpecError("frame vector does not complete the edge normals to a basis");
  IntVec image = mul(cone.beta, eta_lift);
  for (int r = 0; r < cone.dim(); ++r)
    if (image[r] != n_mult * eta[r])
      throw SpecError("frame lift does not hit the stated multiple of the vector");
  return finish_frame(cone, reeb, edge, eta, n_mult, eta_lift);
}

Int cz_index(const EdgeFrame& frame, long multiple, int dim) {
  if (multiple < 1) throw SpecError("orbit multiple must be positive");
  Int floors = 0;
  for (size_t i = 0; i < frame.b_coeffs.size(); ++i) {
    Rat q = Rat(static_cast<long>(multiple)) * frame.b_coeffs[i] / frame.b;
    if (rat_den(q) == 1)
      throw DegenerateOrbit(frame.edge.id, static_cast<int>(i), multiple);
    floors += floor_rat(q);
  }
  return 2 * (floors + Int(multiple) * frame.lift_colsum) + (dim - 1);
}

Degree orbit_degree(const Int& cz, int dim, const Int& modulus) {
  Degree d;
  d.modulus = modulus;
  d.value = cz + (dim - 1) - 2;
  if (modulus > 0) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), d.value.get_mpz_t(), modulus.get_mpz_t());
    d.value = std::move(r);
  }
  return d;
}

std::vector<OrbitIndex> orbit_table(const GoodCone& cone, const ReebVector& reeb,
                                    long n_max) {
  if (n_max < 0) throw SpecError("orbit table horizon must be >= 0");
  Int modulus(grading_modulus(cone));
  std::vector<OrbitIndex> out;
  out.reserve(cone.edges.size() * static_cast<size_t>(n_max));
  for (const Edge& e : cone.edges) {
    EdgeFrame f = build_frame(cone, reeb, e);
    Int simple_cz;
    for (long m = 1; m <= n_max; ++m) {
      OrbitIndex oi;
      oi.edge_id = e.id;
      oi.multiple = m;
      oi.cz = cz_index(f, m, cone.dim());
      if (m == 1) simple_cz = oi.cz;
      oi.degree = orbit_degree(oi.cz, cone.dim(), modulus);
      oi.action = Rat(m) / f.b;
      oi.good = ((oi.cz - simple_cz) % 2 == 0);
      out.push_back(std::move(oi));
    }
  }
  return out;
}

}  // namespace toricch
