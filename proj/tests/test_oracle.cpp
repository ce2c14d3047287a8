#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "toricch/cone.hpp"
#include "toricch/errors.hpp"
#include "toricch/oracle.hpp"
#include "toricch/reeb.hpp"

using namespace toricch;

namespace {

std::vector<std::vector<int>> production_edges(const ConeSpec& spec) {
  std::vector<std::vector<int>> out;
  for (const Edge& e : validate_good(spec).edges) out.push_back(e.active);
  return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("slice enumeration agrees on the built-in cones") {
  std::vector<ConeSpec> specs;
  for (int k = 0; k <= 4; ++k) specs.push_back(make_ck(k));
  specs.push_back(make_square_cone());
  for (int n = 1; n <= 3; ++n) specs.push_back(make_simplex_cone(n));
  specs.push_back(tsup::cube_cone(2));
  specs.push_back(tsup::cube_cone(3));
  specs.push_back(tsup::torsion_cone());
  for (const ConeSpec& spec : specs) {
    CAPTURE(spec.name.value_or("unnamed"));
    CHECK(edges_via_slice(spec) == production_edges(spec));
  }
}

TEST_CASE("slice enumeration: plane orthant and space orthant") {
  ConeSpec orthant3(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(edges_via_slice(orthant3) ==
        std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  ConeSpec orthant2(2, {{1, 0}, {0, 1}});
  CHECK(edges_via_slice(orthant2) == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("slice enumeration rejects non-spanning normals") {
  ConeSpec flat(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}});
  CHECK_THROWS_AS(edges_via_slice(flat), NoPositiveFunctional);
}

TEST_CASE("slice enumeration agrees on random good cones in dimensions 2..4") {
  tsup::Rng rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = 2 + static_cast<int>(rng.range(0, 2));
    ConeSpec spec = tsup::random_good_cone(dim, rng);
    CAPTURE(trial);
    CAPTURE(dim);
    CHECK(edges_via_slice(spec) == production_edges(spec));
  }
}

TEST_CASE("degree recomputation from shifted frames") {
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    GoodCone cone = validate_good(make_ck(k));
    ReebVector reeb = tsup::near_vertical(cone, {-1, -1});
    for (const Edge& e : cone.edges)
      for (std::uint64_t seed = 0; seed < 3; ++seed)
        CHECK(degree_invariance_probe(cone, reeb, e, 10, seed));
  }
}

TEST_CASE("degree recomputation covers the torsion grading") {
  GoodCone cone = validate_good(tsup::torsion_cone());
  ReebVector reeb = tsup::near_vertical(cone, {-1, -1});
  for (const Edge& e : cone.edges) CHECK(degree_invariance_probe(cone, reeb, e, 10, 1));
}

TEST_CASE("degree recomputation with no trials is vacuous") {
  GoodCone cone = validate_good(make_ck(1));
  ReebVector reeb = tsup::near_vertical(cone, {-1, -1});
  CHECK(degree_invariance_probe(cone, reeb, cone.edges[0], 0, 0));
}

TEST_CASE("closed-form sphere tables") {
  RankTable s2 = sphere_closed_form(2, 10);
  CHECK(s2.grading_modulus == 0);
  CHECK(s2.completeness_bound == 10);
  CHECK(s2.ranks == std::map<long, long>{{4, 1}, {6, 1}, {8, 1}, {10, 1}});
  CHECK(s2.contributions.empty());

  CHECK(sphere_closed_form(1, 4).ranks == std::map<long, long>{{2, 1}, {4, 1}});
  CHECK(sphere_closed_form(1, 1).ranks.empty());
  CHECK(sphere_closed_form(3, 5).ranks.empty());
  CHECK_THROWS_AS(sphere_closed_form(0, 10), SpecError);
}

}  // TEST_SUITE
