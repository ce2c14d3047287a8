#include "toricch/homology.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <sstream>
#include <utility>

#include "toricch/cz.hpp"
#include "toricch/errors.hpp"
#include "toricch/invariants.hpp"
#include "toricch/parallel.hpp"

namespace toricch {

namespace {

// The degree sequence along one edge is eventually increasing but not
// monotone, so completeness needs this many consecutive multiples above the
// cutoff before the edge scan may stop.
constexpr int kCertificateWindow = 64;
constexpr long kHardCap = 1L << 22;  // defensive; growth is provably positive

std::map<long, long> scan_edge(const GoodCone& cone, const ReebVector& reeb,
                               const Edge& edge, long cutoff) {
  std::map<long, long> by_degree;
  EdgeFrame frame = build_frame(cone, reeb, edge);
  const int dim = cone.dim();
  Int simple_parity = cz_index(frame, 1, dim) % 2;
  long horizon = std::max(4 * cutoff, 256L);
  int above = 0;
  for (long m = 1; above < kCertificateWindow; ++m) {
    if (m > horizon) {
      if (horizon >= kHardCap) throw NonPositiveGrowth(edge.id);
      horizon *= 2;
    }
    Int cz = cz_index(frame, m, dim);
    Int deg = cz + (dim - 1) - 2;
    if (deg > cutoff) {
      ++above;
      continue;
    }
    above = 0;
    if ((cz - simple_parity) % 2 != 0) continue;  // bad cover: not a generator
    by_degree[to_long(deg)] += 1;
  }
  return by_degree;
}

RankTable merge_scans(const GoodCone& cone, long cutoff,
                      const std::vector<std::map<long, long>>& per_edge) {
  RankTable t;
  t.grading_modulus = 0;
  t.cutoff_degree = cutoff;
  t.completeness_bound = cutoff;
  for (size_t e = 0; e < per_edge.size(); ++e) {
    for (const auto& [deg, count] : per_edge[e]) {
      t.ranks[deg] += count;
      t.contributions[{cone.edges[e].id, deg}] += count;
      if (deg < 0) t.has_negative_degrees = true;
    }
  }
  return t;
}

}  // namespace

RankTable chain_ranks_serial(const GoodCone& cone, const ReebVector& reeb,
                             long cutoff_degree) {
  long modulus = grading_modulus(cone);
  if (modulus != 0) throw ModulusError(modulus);
  std::vector<std::map<long, long>> per_edge;
  per_edge.reserve(cone.edges.size());
  for (const Edge& e : cone.edges)
    per_edge.push_back(scan_edge(cone, reeb, e, cutoff_degree));
  return merge_scans(cone, cutoff_degree, per_edge);
}

RankTable chain_ranks(const GoodCone& cone, const ReebVector& reeb,
                      long cutoff_degree) {
  long modulus = grading_modulus(cone);
  if (modulus != 0) throw ModulusError(modulus);
  const int count = static_cast<int>(cone.edges.size());
  if (effective_threads() <= 1 || count < 2)
    return chain_ranks_serial(cone, reeb, cutoff_degree);

  std::vector<std::map<long, long>> per_edge(count);
  std::vector<std::exception_ptr> errors(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
#endif
  for (int e = 0; e < count; ++e) {
    try {
      per_edge[e] = scan_edge(cone, reeb, cone.edges[e], cutoff_degree);
    } catch (...) {
      errors[e] = std::current_exception();
    }
  }
  for (std::exception_ptr& err : errors)
    if (err) std::rethrow_exception(err);
  return merge_scans(cone, cutoff_degree, per_edge);
}

TableDiff compare_tables(const RankTable& t1, const RankTable& t2) {
  if (t1.grading_modulus != t2.grading_modulus)
    throw ModulusError(t2.grading_modulus);
  TableDiff diff;
  diff.common_bound = std::min(t1.completeness_bound, t2.completeness_bound);

  auto rank_of = [&](const RankTable& t, long deg) {
    auto it = t.ranks.find(deg);
    return it == t.ranks.end() ? 0L : it->second;
  };
  std::set<long> degrees;
  for (const auto& [deg, r] : t1.ranks)
    if (deg <= diff.common_bound) degrees.insert(deg);
  for (const auto& [deg, r] : t2.ranks)
    if (deg <= diff.common_bound) degrees.insert(deg);
  for (long deg : degrees) {
    long a = rank_of(t1, deg), b = rank_of(t2, deg);
    if (a != b) diff.rank_diffs.push_back({deg, {a, b}});
  }

  auto count_of = [&](const RankTable& t, const std::pair<int, long>& key) {
    auto it = t.contributions.find(key);
    return it == t.contributions.end() ? 0L : it->second;
  };
  std::set<std::pair<int, long>> keys;
  for (const auto& [key, c] : t1.contributions)
    if (key.second <= diff.common_bound) keys.insert(key);
  for (const auto& [key, c] : t2.contributions)
    if (key.second <= diff.common_bound) keys.insert(key);
  for (const auto& key : keys) {
    long a = count_of(t1, key), b = count_of(t2, key);
    if (a != b) diff.contribution_diffs.push_back({key, {a, b}});
  }
  return diff;
}

std::string render_table(const RankTable& table) {
  long lo = 0;
  for (const auto& [deg, r] : table.ranks) lo = std::min(lo, deg);
  if (lo % 2 != 0) --lo;  // degree columns come in even steps
  std::vector<long> columns;
  for (long d = lo; d <= table.cutoff_degree; d += 2) columns.push_back(d);

  std::set<int> edge_ids;
  for (const auto& [key, c] : table.contributions) edge_ids.insert(key.first);

  std::ostringstream out;
  if (table.grading_modulus == 0)
    out << "grading: Z";
  else
    out << "grading: Z/" << table.grading_modulus;
  out << "   cutoff: " << table.cutoff_degree
      << "   complete up to: " << table.completeness_bound << "\n";
  if (table.has_negative_degrees)
    out << "note: orbits in negative degrees are present\n";

  auto cell = [&](const std::string& s) {
    std::string padded = s;
    while (padded.size() < 6) padded.insert(padded.begin(), ' ');
    return padded;
  };
  out << "degree  ";
  for (long d : columns) out << cell(std::to_string(d));
  out << "\n";
  for (int id : edge_ids) {
    std::string label = "gamma_" + std::to_string(id + 1);
    while (label.size() < 8) label.push_back(' ');
    out << label;
    for (long d : columns) {
      auto it = table.contributions.find({id, d});
      out << cell(std::to_string(it == table.contributions.end() ? 0 : it->second));
    }
    out << "\n";
  }
  out << "rank    ";
  for (long d : columns) {
    auto it = table.ranks.find(d);
    out << cell(std::to_string(it == table.ranks.end() ? 0 : it->second));
  }
  out << "\n";
  return out.str();
}

}  // namespace toricch
