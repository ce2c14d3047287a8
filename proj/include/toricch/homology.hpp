#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toricch/cone.hpp"
#include "toricch/reeb.hpp"
#include "toricch/types.hpp"

namespace toricch {

// Graded ranks of cylindrical contact homology. With an even contact form the
// differential vanishes, so ranks are chain-group dimensions: the number of
// good orbit covers in each degree.
struct RankTable {
  long grading_modulus = 0;
  long cutoff_degree = 0;
  std::map<long, long> ranks;                         // degree -> rank
  std::map<std::pair<int, long>, long> contributions; // (edge id, degree) -> count
  long completeness_bound = 0;  // degrees <= this are certified complete
  bool has_negative_degrees = false;

  bool operator==(const RankTable&) const = default;
};

// Counts, for every edge, the covers whose degree is at most cutoff_degree.
// Requires an integer grading (Chern divisibility c = 0); throws ModulusError
// otherwise, directing the caller to the residue (orbit table) output.
// Completeness certificate: each edge is scanned until a trailing window of
// consecutive multiples all exceed the cutoff (the degree sequence need not
// be monotone); the scan horizon starts at 4 * cutoff and doubles as needed,
// with NonPositiveGrowth as a defensive cap. The default entry point scans
// edges in parallel; the serial variant is the reference implementation.
RankTable chain_ranks(const GoodCone& cone, const ReebVector& reeb,
                      long cutoff_degree);
RankTable chain_ranks_serial(const GoodCone& cone, const ReebVector& reeb,
                             long cutoff_degree);

// Structured difference of two tables with the same grading modulus (throws
// ModulusError on mismatch), restricted to degrees both tables certify.
struct TableDiff {
  long common_bound = 0;
  std::vector<std::pair<long, std::pair<long, long>>> rank_diffs;  // deg -> (a, b)
  // (edge, degree) -> (a count, b count)
  std::vector<std::pair<std::pair<int, long>, std::pair<long, long>>> contribution_diffs;

  bool ranks_equal() const { return rank_diffs.empty(); }
  bool identical() const { return rank_diffs.empty() && contribution_diffs.empty(); }
};
TableDiff compare_tables(const RankTable& t1, const RankTable& t2);

// Fixed-width text rendering: one row per edge, one column per even degree,
// and a final total-rank row.
std::string render_table(const RankTable& table);

}  // namespace toricch
