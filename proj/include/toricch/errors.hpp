#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "toricch/types.hpp"

namespace toricch {

// Base for every failure this library reports deliberately.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input (JSON schema, cone spec construction, bad CLI values).
struct SpecError : Error {
  using Error::Error;
};

// --- cone validation failures, one per clause of the goodness definition ---

struct NotPrimitive : Error {
  int index;
  explicit NotPrimitive(int j)
      : Error("normal " + std::to_string(j) + " is not primitive"), index(j) {}
};

struct RedundantNormal : Error {
  int index;
  explicit RedundantNormal(int j)
      : Error("facet " + std::to_string(j) +
              " is not exposed (redundant inequality)"),
        index(j) {}
};

struct NotStronglyConvex : Error {
  NotStronglyConvex() : Error("cone is not strongly convex") {}
};

inline std::string active_set_string(const std::vector<int>& active) {
  std::string s = "{";
  for (size_t i = 0; i < active.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(active[i]);
  }
  return s + "}";
}

struct BadFaceCount : Error {
  std::vector<int> active;
  int codim;
  BadFaceCount(std::vector<int> a, int k)
      : Error("face with active set " + active_set_string(a) +
              " has codimension " + std::to_string(k) + " but " +
              std::to_string(a.size()) + " active facets"),
        active(std::move(a)),
        codim(k) {}
};

struct NotBasisExtendable : Error {
  std::vector<int> active;
  explicit NotBasisExtendable(std::vector<int> a)
      : Error("normals of face " + active_set_string(a) +
              " do not extend to a lattice basis"),
        active(std::move(a)) {}
};

// --- exact-arithmetic layer ---

struct NotCompletable : Error {
  NotCompletable()
      : Error("vectors do not span a direct summand; no unimodular completion") {}
};

struct NoSolution : Error {
  using Error::Error;
};

struct RankDeficient : Error {
  using Error::Error;
};

// --- Reeb / index layer ---

struct FarkasCertificate {
  RatVec y;  // y^T nu_j <= 0 for all j, y^T target >= 0, y^T target > y^T sum(nu_j)
};

struct InadmissibleReeb : Error {
  FarkasCertificate certificate;
  explicit InadmissibleReeb(FarkasCertificate c)
      : Error("Reeb vector is not a positive combination of the normals"),
        certificate(std::move(c)) {}
};

struct GenerationFailed : Error {
  using Error::Error;
};

struct DegenerateReeb : Error {
  int edge;
  explicit DegenerateReeb(int e)
      : Error("Reeb vector lies in the normal span of edge " + std::to_string(e)),
        edge(e) {}
};

struct DegenerateOrbit : Error {
  int edge, i;
  long multiple;
  DegenerateOrbit(int e, int i_, long n)
      : Error("degenerate orbit at edge " + std::to_string(e) + ", coefficient " +
              std::to_string(i_) + ", multiple " + std::to_string(n)),
        edge(e),
        i(i_),
        multiple(n) {}
};

// --- homology layer ---

struct ModulusError : Error {
  long modulus;
  explicit ModulusError(long m)
      : Error("grading modulus mismatch (got modulus " + std::to_string(m) + ")"),
        modulus(m) {}
};

struct NonPositiveGrowth : Error {
  int edge;
  explicit NonPositiveGrowth(int e)
      : Error("degree growth along edge " + std::to_string(e) +
              " never cleared the cutoff"),
        edge(e) {}
};

// --- oracle layer ---

struct NoPositiveFunctional : Error {
  NoPositiveFunctional()
      : Error("cone is not pointed; no functional is positive away from 0") {}
};

}  // namespace toricch
