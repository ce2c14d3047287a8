#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricch/types.hpp"

namespace toricch {

// Inward facet normals of a polyhedral cone in R^dim, one per facet.
// Construction rejects shape errors and repeated directions; the geometric
// goodness clauses live in validate_good.
struct ConeSpec {
  int ambient_dim = 0;
  std::vector<IntVec> normals;
  std::optional<std::string> name;

  ConeSpec(int dim, std::vector<IntVec> ns, std::optional<std::string> nm = {});

  int d() const { return static_cast<int>(normals.size()); }
  int n() const { return ambient_dim - 1; }
};

// Matrix with the normals as columns, (n+1) x d.
IntMat beta_matrix(const ConeSpec& spec);

// One-dimensional face: primitive generator u with <u, normal_j> = 0 exactly
// for j in the active set and > 0 otherwise.
struct Edge {
  int id = 0;
  std::vector<int> active;
  IntVec generator;
};

struct Face {
  std::vector<int> active;  // inclusion-maximal facet set vanishing on the face
  int codim = 0;
  std::vector<IntVec> generators;  // generators of the edges spanning it
};

// Enumerates edges by scanning size-n facet subsets: a subset whose normals
// have rank n contributes the generator of their common orthogonal line when
// its sign pattern against the remaining normals is nonnegative and its
// vanishing set is exactly the subset. Sorted by active set. The default
// entry point runs the subset scan in parallel (deterministic merge); the
// serial variant is the reference implementation.
std::vector<Edge> enumerate_edges(const ConeSpec& spec);
std::vector<Edge> enumerate_edges_serial(const ConeSpec& spec);

// All faces of codimension 1..n, bottom-up from the edges: every face of a
// pointed cone is the conical hull of the edges it contains, so the face
// active sets are exactly the intersections of edge active sets.
std::vector<Face> enumerate_faces(const ConeSpec& spec);

struct GoodCone {
  ConeSpec spec;
  IntMat beta;
  std::vector<Edge> edges;
  std::vector<std::string> validation_report;

  int dim() const { return spec.ambient_dim; }
  int n() const { return spec.n(); }
  int d() const { return spec.d(); }
};

// Full goodness validation, in order: primitivity of every normal, strong
// convexity (normals span), exposedness of every facet (exact LP), edge scan
// with oversized vanishing sets rejected, then every face of codimension k
// must have exactly k active facets whose normals extend to a lattice basis
// (all Smith invariants 1). Throws the matching error; returns the validated
// cone with its edges and a report of passed checks.
GoodCone validate_good(const ConeSpec& spec);

// Built-in cones.
ConeSpec make_ck(int k);           // the 3-dimensional four-facet family
ConeSpec make_simplex_cone(int n); // standard cone over conv(0, e_1..e_n)
ConeSpec make_square_cone();       // cone over a unit square (k=0 relative)

}  // namespace toricch
