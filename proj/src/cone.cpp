#include "toricch/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "toricch/errors.hpp"
#include "toricch/linalg.hpp"
#include "toricch/lp.hpp"
#include "toricch/normal_form.hpp"
#include "toricch/parallel.hpp"

namespace toricch {

ConeSpec::ConeSpec(int dim, std::vector<IntVec> ns, std::optional<std::string> nm)
    : ambient_dim(dim), normals(std::move(ns)), name(std::move(nm)) {
  if (ambient_dim < 2) throw SpecError("ambient dimension must be at least 2");
  if (static_cast<int>(normals.size()) < ambient_dim)
    throw SpecError("need at least as many normals as the ambient dimension");
  for (const IntVec& v : normals)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw SpecError("normal length does not match the ambient dimension");
  // Two normals pointing the same way describe the same half-space; reject
  // early. Opposite directions stay (the strong-convexity check owns them).
  for (size_t i = 0; i < normals.size(); ++i)
    for (size_t j = i + 1; j < normals.size(); ++j) {
      const IntVec &a = normals[i], &b = normals[j];
      Int ca = content(a), cb = content(b);
      if (ca == 0 || cb == 0) continue;  // zero normals fail primitivity later
      bool same = true;
      for (int t = 0; t < ambient_dim && same; ++t) same = (a[t] * cb == b[t] * ca);
      if (same)
        throw SpecError("normals " + std::to_string(i) + " and " + std::to_string(j) +
                        " are parallel with the same orientation");
    }
}

IntMat beta_matrix(const ConeSpec& spec) { return IntMat::from_columns(spec.normals); }

namespace {

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    unsigned long long next = r * static_cast<unsigned long long>(n - k + i);
    if (next / static_cast<unsigned long long>(n - k + i) != r)
      throw std::overflow_error("too many facet subsets");
    r = next / static_cast<unsigned long long>(i);
  }
  return r;
}

// Lexicographic rank -> size-k subset of [0, n).
std::vector<int> unrank_subset(unsigned long long rank, int n, int k) {
  std::vector<int> s(k);
  int x = 0;
  for (int i = 0; i < k; ++i) {
    for (;;) {
      unsigned long long block = binomial(n - x - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
      ++x;
    }
    s[i] = x++;
  }
  return s;
}

struct RayScan {
  std::vector<Edge> edges;                 // vanishing set == subset
  std::vector<std::vector<int>> oversized; // rays vanishing on more facets
};

// Examine one size-n facet subset; classify the orthogonal ray if there is one.
void scan_subset(const ConeSpec& spec, const std::vector<int>& subset, RayScan& out) {
  std::vector<IntVec> rows;
  rows.reserve(subset.size());
  for (int j : subset) rows.push_back(spec.normals[j]);
  std::vector<IntVec> kernel = kernel_lattice_basis(IntMat::from_rows(rows));
  if (kernel.size() != 1) return;  // rank below n: no single orthogonal line
  IntVec u = kernel[0];

  int orient = 0;
  std::vector<int> extra;
  for (int j = 0; j < spec.d(); ++j) {
    if (std::binary_search(subset.begin(), subset.end(), j)) continue;
    Int s = dot(u, spec.normals[j]);
    if (s == 0) {
      extra.push_back(j);
      continue;
    }
    int sg = s > 0 ? 1 : -1;
    if (orient == 0)
      orient = sg;
    else if (orient != sg)
      return;  // mixed signs: the line leaves the cone
  }
  if (orient == 0) return;  // orthogonal to everything: rank-deficient spec
  if (orient < 0) u = neg(u);

  if (!extra.empty()) {
    std::vector<int> active = subset;
    active.insert(active.end(), extra.begin(), extra.end());
    std::sort(active.begin(), active.end());
    out.oversized.push_back(std::move(active));
    return;
  }
  Edge e;
  e.active = subset;
  e.generator = std::move(u);
  out.edges.push_back(std::move(e));
}

RayScan ray_scan_serial(const ConeSpec& spec) {
  RayScan out;
  const unsigned long long total = binomial(spec.d(), spec.n());
  for (unsigned long long r = 0; r < total; ++r)
    scan_subset(spec, unrank_subset(r, spec.d(), spec.n()), out);
  return out;
}

RayScan ray_scan_parallel(const ConeSpec& spec) {
  const unsigned long long total = binomial(spec.d(), spec.n());
  const int nthreads = effective_threads();
  if (nthreads <= 1 || total < 64) return ray_scan_serial(spec);

  std::vector<RayScan> parts(nthreads);
#pragma omp parallel for schedule(static) num_threads(nthreads)
  for (long long r = 0; r < static_cast<long long>(total); ++r) {
#ifdef _OPENMP
    RayScan& mine = parts[omp_get_thread_num()];
#else
    RayScan& mine = parts[0];
#endif
    scan_subset(spec, unrank_subset(static_cast<unsigned long long>(r), spec.d(), spec.n()), mine);
  }
  RayScan out;
  for (RayScan& p : parts) {
    std::move(p.edges.begin(), p.edges.end(), std::back_inserter(out.edges));
    std::move(p.oversized.begin(), p.oversized.end(), std::back_inserter(out.oversized));
  }
  // Deterministic merge regardless of the thread partition.
  std::sort(out.edges.begin(), out.edges.end(),
            [](const Edge& a, const Edge& b) { return a.active < b.active; });
  std::sort(out.oversized.begin(), out.oversized.end());
  out.oversized.erase(std::unique(out.oversized.begin(), out.oversized.end()),
                      out.oversized.end());
  return out;
}

std::vector<Edge> finish_edges(RayScan scan) {
  std::sort(scan.edges.begin(), scan.edges.end(),
            [](const Edge& a, const Edge& b) { return a.active < b.active; });
  for (size_t i = 0; i < scan.edges.size(); ++i) scan.edges[i].id = static_cast<int>(i);
  return std::move(scan.edges);
}

// Exact feasibility of: <x, normal_j> = 0, <x, normal_i> > 0 for i != j.
// Solved as max t with <x, normal_i> = t + s_i, s >= 0, t capped at 1,
// x free (split into x+ - x-).
bool facet_exposed(const ConeSpec& spec, int j) {
  const int dim = spec.ambient_dim, d = spec.d();
  const int rows = d + 1;           // d incidence rows + cap row
  const int k = 2 * dim + (d - 1) + 3;  // x+, x-, s_i, t+, t-, u
  RatMat a(rows, k);
  RatVec b(rows), c(k);
  const int t_plus = 2 * dim + (d - 1);
  int srow = 0, scol = 2 * dim;
  for (int i = 0; i < d; ++i) {
    for (int t = 0; t < dim; ++t) {
      a.at(srow, t) = Rat(spec.normals[i][t]);
      a.at(srow, dim + t) = Rat(-spec.normals[i][t]);
    }
    if (i != j) {
      a.at(srow, scol++) = -1;
      a.at(srow, t_plus) = -1;
      a.at(srow, t_plus + 1) = 1;
    }
    ++srow;
  }
  a.at(srow, t_plus) = 1;
  a.at(srow, t_plus + 1) = -1;
  a.at(srow, t_plus + 2) = 1;
  b[srow] = 1;
  c[t_plus] = 1;
  c[t_plus + 1] = -1;

  LpSolution lp = simplex_solve(a, b, c);
  if (lp.status != LpSolution::Status::Optimal)
    throw Error("facet_exposed: capped program must be solvable");
  return lp.objective > 0;
}

}  // namespace

std::vector<Edge> enumerate_edges_serial(const ConeSpec& spec) {
  return finish_edges(ray_scan_serial(spec));
}

std::vector<Edge> enumerate_edges(const ConeSpec& spec) {
  return finish_edges(ray_scan_parallel(spec));
}

std::vector<Face> enumerate_faces(const ConeSpec& spec) {
  std::vector<Edge> edges = enumerate_edges(spec);
  std::set<std::vector<int>> actives;
  for (const Edge& e : edges) actives.insert(e.active);

  // Close under pairwise intersection: the face lattice of a pointed cone is
  // generated by its atoms.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<int>> snapshot(actives.begin(), actives.end());
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> meet;
        std::set_intersection(snapshot[i].begin(), snapshot[i].end(),
                              snapshot[j].begin(), snapshot[j].end(),
                              std::back_inserter(meet));
        if (actives.insert(meet).second) grew = true;
      }
  }

  std::vector<Face> faces;
  for (const std::vector<int>& a : actives) {
    Face f;
    f.active = a;
    for (const Edge& e : edges)
      if (std::includes(e.active.begin(), e.active.end(), a.begin(), a.end()))
        f.generators.push_back(e.generator);
    int dim_face = rank_int(IntMat::from_columns(f.generators));
    f.codim = spec.ambient_dim - dim_face;
    if (f.codim >= 1 && f.codim <= spec.n()) faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& x, const Face& y) {
    return std::tie(x.codim, x.active) < std::tie(y.codim, y.active);
  });
  return faces;
}

GoodCone validate_good(const ConeSpec& spec) {
  std::vector<std::string> report;

  for (int j = 0; j < spec.d(); ++j) {
    if (content(spec.normals[j]) != 1) throw NotPrimitive(j);
  }
  report.push_back("primitivity: all " + std::to_string(spec.d()) +
                   " normals primitive");

  IntMat beta = beta_matrix(spec);
  if (rank_int(beta) != spec.ambient_dim) throw NotStronglyConvex();
  report.push_back("strong convexity: normals span the ambient space");

  for (int j = 0; j < spec.d(); ++j)
    if (!facet_exposed(spec, j)) throw RedundantNormal(j);
  report.push_back("exposedness: every facet meets the cone in codimension 1");

  RayScan scan = ray_scan_parallel(spec);
  if (!scan.oversized.empty()) {
    std::vector<int> worst = *std::min_element(scan.oversized.begin(), scan.oversized.end());
    throw BadFaceCount(worst, spec.n());
  }
  std::vector<Edge> edges = finish_edges(std::move(scan));
  if (edges.empty()) throw Error("validate_good: pointed cone without edges");
  report.push_back("edges: " + std::to_string(edges.size()) +
                   " one-dimensional faces, each on exactly n facets");

  std::vector<Face> faces = enumerate_faces(spec);
  std::map<int, int> per_codim;
  for (const Face& f : faces) {
    if (static_cast<int>(f.active.size()) != f.codim)
      throw BadFaceCount(f.active, f.codim);
    std::vector<IntVec> ns;
    for (int j : f.active) ns.push_back(spec.normals[j]);
    SnfResult sr = snf(IntMat::from_columns(ns));
    for (const Int& d : sr.diag)
      if (d != 1) throw NotBasisExtendable(f.active);
    ++per_codim[f.codim];
  }
  std::string counts;
  for (auto& [codim, cnt] : per_codim)
    counts += (counts.empty() ? "" : ", ") + std::to_string(cnt) + " of codim " +
              std::to_string(codim);
  report.push_back("faces: " + counts + "; all normal sets extend to lattice bases");

  GoodCone g{spec, std::move(beta), std::move(edges), std::move(report)};
  return g;
}

ConeSpec make_ck(int k) {
  if (k < 0) throw SpecError("family parameter must be nonnegative");
  std::vector<IntVec> ns = {
      {1, 0, 1}, {0, -1, 1}, {0, k, 1}, {-1, 2 * k - 1, 1}};
  return ConeSpec(3, std::move(ns), "ck:" + std::to_string(k));
}

ConeSpec make_simplex_cone(int n) {
  if (n < 1) throw SpecError("simplex dimension must be positive");
  std::vector<IntVec> ns;
  for (int i = 0; i < n; ++i) {
    IntVec v(n + 1);
    v[i] = 1;
    ns.push_back(std::move(v));
  }
  IntVec last(n + 1, Int(-1));
  last[n] = 1;
  ns.push_back(std::move(last));
  return ConeSpec(n + 1, std::move(ns), "sphere:" + std::to_string(n));
}

ConeSpec make_square_cone() {
  std::vector<IntVec> ns = {{1, 0, 0}, {0, -1, 1}, {0, 1, 0}, {-1, 0, 1}};
  return ConeSpec(3, std::move(ns), "square");
}

}  // namespace toricch
