#pragma once

#include <vector>

#include "toricch/cone.hpp"
#include "toricch/reeb.hpp"
#include "toricch/types.hpp"

namespace toricch {

// Unimodular frame attached to an edge: the n edge normals together with eta
// form a Z-basis of the ambient lattice, oriented so that the edge generator
// pairs positively with eta (b > 0).
//
//   [nu_{l_1} ... nu_{l_n} | N * eta] * (b_1, ..., b_n, b)^T = N * nu
//
// eta_lift solves  beta * eta_lift = N * eta  in integers (N minimal), and
// lift_colsum is the entry sum of eta_lift.
struct EdgeFrame {
  Edge edge;
  IntVec eta;
  Int n_mult;         // N: minimal positive integer with N * eta in the image
  IntVec eta_lift;    // integer solution of beta * eta_lift = N * eta
  RatVec b_coeffs;    // b_1, ..., b_n
  Rat b;              // b > 0 after orientation
  Int lift_colsum;    // sum of eta_lift entries
};

struct Degree {
  Int value;    // reduced into [0, modulus) when modulus > 0
  Int modulus;  // 0 means Z-graded
};

struct OrbitIndex {
  int edge_id = 0;
  long multiple = 0;  // N >= 1
  Int cz;             // Conley-Zehnder index of the N-fold cover
  Degree degree;      // cz + n - 2
  Rat action;         // N / b, in units of the period 2*pi
  bool good = true;   // parity of cz matches the parity of the simple orbit
};

// Builds the frame for one edge; throws DegenerateReeb when the Reeb vector
// lies in the span of the edge normals (b = 0).
EdgeFrame build_frame(const GoodCone& cone, const ReebVector& reeb, const Edge& edge);

// Same computation from caller-supplied frame data (for invariance probes).
EdgeFrame build_frame_with(const GoodCone& cone, const ReebVector& reeb,
                           const Edge& edge, const IntVec& eta, const Int& n_mult,
                           const IntVec& eta_lift);

// Conley-Zehnder index of the N-th cover of the orbit of `frame`:
//   cz = 2 * (sum_i floor(N * b_i / b) + N * lift_colsum) + n.
// Throws DegenerateOrbit when some b_i is zero or N * b_i / b is an integer.
Int cz_index(const EdgeFrame& frame, long multiple, int dim);

// Degree cz + n - 2 reduced modulo `modulus` (0 = no reduction).
Degree orbit_degree(const Int& cz, int dim, const Int& modulus);

// All orbit indices with multiple <= n_max, ordered by (edge_id, multiple).
// The grading modulus is derived from the cone's Chern data.
std::vector<OrbitIndex> orbit_table(const GoodCone& cone, const ReebVector& reeb,
                                    long n_max);

}  // namespace toricch
