#include <string>

#include "doctest.h"
#include "support.hpp"
#include "toricch/cone.hpp"
#include "toricch/errors.hpp"
#include "toricch/homology.hpp"
#include "toricch/invariants.hpp"
#include "toricch/oracle.hpp"
#include "toricch/reeb.hpp"

using namespace toricch;

namespace {

std::vector<int> default_signs(int k) {
  return k == 0 ? std::vector<int>{1, -1} : std::vector<int>{-1, -1};
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("four-facet family: ranks match the closed form") {
  for (int k = 0; k <= 3; ++k) {
    CAPTURE(k);
    GoodCone cone = validate_good(make_ck(k));
    ReebVector reeb = tsup::near_vertical(cone, default_signs(k), 0, Int(10000), 128);
    RankTable t = chain_ranks(cone, reeb, 20);
    CHECK(t.grading_modulus == 0);
    CHECK(t.cutoff_degree == 20);
    CHECK(t.completeness_bound == 20);
    CHECK_FALSE(t.has_negative_degrees);
    CHECK(t.ranks == tsup::expected_ck_ranks(k, 20));
    if (k >= 1)
      CHECK(t.contributions == tsup::expected_ck_contributions_near_vertical(k, 20));
  }
}

TEST_CASE("four-facet family: near-first-normal regime, same ranks") {
  for (int k = 1; k <= 2; ++k) {
    CAPTURE(k);
    GoodCone cone = validate_good(make_ck(k));
    GenOptions opt;
    opt.min_denominator = 10000;
    opt.n_max = 128;
    ReebVector reeb = generate_near_normal(cone, 0, opt);
    RankTable t = chain_ranks(cone, reeb, 20);
    CHECK(t.ranks == tsup::expected_ck_ranks(k, 20));
    CHECK(t.contributions == tsup::expected_ck_contributions_near_first(k, 20));
  }
}

TEST_CASE("k = 0 agrees with the square cone") {
  GoodCone ck0 = validate_good(make_ck(0));
  GoodCone square = validate_good(make_square_cone());
  RankTable t1 = chain_ranks(ck0, tsup::near_vertical(ck0, {1, -1}), 24);
  RankTable t2 = chain_ranks(square, tsup::near_vertical(square, {-1, -1}), 24);
  TableDiff diff = compare_tables(t1, t2);
  CHECK(diff.common_bound == 24);
  CHECK(diff.ranks_equal());
}

TEST_CASE("spheres match the closed form") {
  for (int n = 1; n <= 2; ++n) {
    CAPTURE(n);
    GoodCone cone = validate_good(make_simplex_cone(n));
    ReebVector reeb = tsup::near_vertical(cone, {});
    RankTable t = chain_ranks(cone, reeb, 16);
    CHECK(compare_tables(t, sphere_closed_form(n, 16)).ranks_equal());
  }
}

TEST_CASE("parallel scan equals the serial reference") {
  GoodCone cone = validate_good(make_ck(2));
  ReebVector reeb = tsup::near_vertical(cone, {-1, -1});
  CHECK(chain_ranks(cone, reeb, 24) == chain_ranks_serial(cone, reeb, 24));

  GoodCone cube = validate_good(tsup::cube_cone(3));
  ReebVector r2 = tsup::near_vertical(cube, {});
  CHECK(chain_ranks(cube, r2, 16) == chain_ranks_serial(cube, r2, 16));
}

TEST_CASE("generation seed does not change the table") {
  GoodCone cone = validate_good(make_ck(1));
  RankTable t0 = chain_ranks(cone, tsup::near_vertical(cone, {-1, -1}, 0), 16);
  for (std::uint64_t seed : {1ULL, 2ULL}) {
    RankTable t = chain_ranks(cone, tsup::near_vertical(cone, {-1, -1}, seed), 16);
    TableDiff diff = compare_tables(t0, t);
    CHECK(diff.common_bound == 16);
    CHECK(diff.identical());
  }
}

TEST_CASE("table comparison reports differences") {
  GoodCone c1 = validate_good(make_ck(1));
  GoodCone c2 = validate_good(make_ck(2));
  RankTable t1 = chain_ranks(c1, tsup::near_vertical(c1, {-1, -1}), 12);
  RankTable t2 = chain_ranks(c2, tsup::near_vertical(c2, {-1, -1}), 12);

  CHECK(compare_tables(t1, t1).identical());

  TableDiff diff = compare_tables(t1, t2);
  CHECK_FALSE(diff.ranks_equal());
  REQUIRE_FALSE(diff.rank_diffs.empty());
  // Lowest differing degree: rank k at degree 0.
  CHECK(diff.rank_diffs[0].first == 0);
  CHECK(diff.rank_diffs[0].second == std::pair<long, long>{1, 2});
}

TEST_CASE("comparison respects the weaker completeness bound") {
  GoodCone cone = validate_good(make_ck(1));
  ReebVector reeb = tsup::near_vertical(cone, {-1, -1});
  RankTable wide = chain_ranks(cone, reeb, 20);
  RankTable narrow = chain_ranks(cone, reeb, 8);
  TableDiff diff = compare_tables(wide, narrow);
  CHECK(diff.common_bound == 8);
  CHECK(diff.identical());  // beyond-bound entries must be ignored
}

TEST_CASE("torsion grading cannot produce an integer-graded table") {
  GoodCone cone = validate_good(tsup::torsion_cone());
  ReebVector reeb = tsup::near_vertical(cone, {-1, -1});
  CHECK_THROWS_AS(chain_ranks(cone, reeb, 10), ModulusError);
}

TEST_CASE("comparison rejects mismatched gradings") {
  RankTable a, b;
  a.grading_modulus = 0;
  b.grading_modulus = 4;
  CHECK_THROWS_AS(compare_tables(a, b), ModulusError);
}

TEST_CASE("rendering shows the grading, the edge rows, and the rank row") {
  GoodCone cone = validate_good(make_ck(1));
  RankTable t = chain_ranks(cone, tsup::near_vertical(cone, {-1, -1}), 8);
  std::string text = render_table(t);
  CHECK(text.find("grading: Z") != std::string::npos);
  CHECK(text.find("degree") != std::string::npos);
  CHECK(text.find("gamma_1") != std::string::npos);
  CHECK(text.find("gamma_4") != std::string::npos);
  CHECK(text.find("rank") != std::string::npos);
  CHECK(text.find("complete up to: 8") != std::string::npos);
}

}  // TEST_SUITE
