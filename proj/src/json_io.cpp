#include "toricch/json_io.hpp"

#include <fstream>
#include <utility>

#include "toricch/errors.hpp"

namespace toricch {

namespace {

long require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw SpecError(where + " must be a JSON integer, got " + j.dump());
  return j.get<long>();
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SpecError("'" + path + "': " + e.what());
  }
}

}  // namespace

ConeSpec cone_from_json(const Json& j) {
  if (!j.is_object()) throw SpecError("cone document must be a JSON object");
  if (!j.contains("dimension") || !j.contains("normals"))
    throw SpecError("cone document needs 'dimension' and 'normals'");
  int dim = static_cast<int>(require_int(j.at("dimension"), "'dimension'"));
  const Json& ns = j.at("normals");
  if (!ns.is_array()) throw SpecError("'normals' must be an array of arrays");
  std::vector<IntVec> normals;
  normals.reserve(ns.size());
  for (size_t r = 0; r < ns.size(); ++r) {
    const Json& row = ns[r];
    if (!row.is_array())
      throw SpecError("normal " + std::to_string(r) + " must be an array");
    IntVec v;
    v.reserve(row.size());
    for (size_t c = 0; c < row.size(); ++c)
      v.emplace_back(require_int(row[c], "normal " + std::to_string(r) +
                                             " entry " + std::to_string(c)));
    normals.push_back(std::move(v));
  }
  std::optional<std::string> name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw SpecError("'name' must be a string");
    name = j.at("name").get<std::string>();
  }
  try {
    return ConeSpec(dim, std::move(normals), std::move(name));
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

ConeSpec parse_cone_file(const std::string& path) {
  return cone_from_json(load_file(path));
}

Json cone_to_json(const ConeSpec& spec) {
  Json j;
  if (spec.name) j["name"] = *spec.name;
  j["dimension"] = spec.ambient_dim;
  Json rows = Json::array();
  for (const IntVec& nu : spec.normals) {
    Json row = Json::array();
    for (const Int& v : nu) row.push_back(to_long(v));
    rows.push_back(std::move(row));
  }
  j["normals"] = std::move(rows);
  return j;
}

Json rank_table_to_json(const RankTable& t) {
  Json j;
  j["grading_modulus"] = t.grading_modulus;
  j["cutoff"] = t.cutoff_degree;
  Json ranks = Json::object();
  for (const auto& [deg, r] : t.ranks) ranks[std::to_string(deg)] = r;
  j["ranks"] = std::move(ranks);
  Json contribs = Json::array();
  for (const auto& [key, count] : t.contributions)
    contribs.push_back({{"edge", key.first}, {"degree", key.second}, {"count", count}});
  j["contributions"] = std::move(contribs);
  j["complete_up_to"] = t.completeness_bound;
  if (t.has_negative_degrees) j["has_negative_degrees"] = true;
  return j;
}

RankTable rank_table_from_json(const Json& j) {
  if (!j.is_object()) throw SpecError("rank table must be a JSON object");
  for (const char* field : {"grading_modulus", "cutoff", "ranks", "contributions",
                            "complete_up_to"})
    if (!j.contains(field))
      throw SpecError(std::string("rank table needs '") + field + "'");
  RankTable t;
  t.grading_modulus = require_int(j.at("grading_modulus"), "'grading_modulus'");
  t.cutoff_degree = require_int(j.at("cutoff"), "'cutoff'");
  t.completeness_bound = require_int(j.at("complete_up_to"), "'complete_up_to'");
  if (!j.at("ranks").is_object()) throw SpecError("'ranks' must be an object");
  for (const auto& [key, value] : j.at("ranks").items()) {
    size_t used = 0;
    long deg = 0;
    try {
      deg = std::stol(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size())
      throw SpecError("rank key '" + key + "' is not an integer degree");
    t.ranks[deg] = require_int(value, "rank at degree " + key);
    if (deg < 0) t.has_negative_degrees = true;
  }
  if (!j.at("contributions").is_array())
    throw SpecError("'contributions' must be an array");
  for (const Json& c : j.at("contributions")) {
    if (!c.is_object() || !c.contains("edge") || !c.contains("degree") ||
        !c.contains("count"))
      throw SpecError("each contribution needs 'edge', 'degree', 'count'");
    int edge = static_cast<int>(require_int(c.at("edge"), "contribution 'edge'"));
    long deg = require_int(c.at("degree"), "contribution 'degree'");
    t.contributions[{edge, deg}] = require_int(c.at("count"), "contribution 'count'");
  }
  if (j.contains("has_negative_degrees") && j.at("has_negative_degrees").is_boolean())
    t.has_negative_degrees =
        t.has_negative_degrees || j.at("has_negative_degrees").get<bool>();
  return t;
}

RankTable parse_rank_table_file(const std::string& path) {
  return rank_table_from_json(load_file(path));
}

Json edges_to_json(const GoodCone& cone) {
  Json arr = Json::array();
  for (const Edge& e : cone.edges) {
    Json gen = Json::array();
    for (const Int& v : e.generator) gen.push_back(to_long(v));
    arr.push_back({{"id", e.id}, {"active", e.active}, {"generator", std::move(gen)}});
  }
  return arr;
}

std::string group_to_string(const AbelianGroup& g) {
  if (g.trivial()) return "trivial";
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += " x ";
    s += part;
  };
  if (g.free_rank == 1) append("Z");
  if (g.free_rank > 1) append("Z^" + std::to_string(g.free_rank));
  for (const Int& f : g.invariant_factors) append("Z/" + f.get_str());
  return s;
}

Json group_to_json(const AbelianGroup& g) {
  Json j;
  j["free_rank"] = g.free_rank;
  Json factors = Json::array();
  for (const Int& f : g.invariant_factors) factors.push_back(to_long(f));
  j["invariant_factors"] = std::move(factors);
  j["group"] = group_to_string(g);
  if (g.free_rank == 0) j["order"] = to_long(g.order());
  return j;
}

Json chern_to_json(const KernelData& k) {
  Json j;
  Json basis = Json::array();
  for (const IntVec& v : k.basis) {
    Json row = Json::array();
    for (const Int& x : v) row.push_back(to_long(x));
    basis.push_back(std::move(row));
  }
  j["kernel_basis"] = std::move(basis);
  Json sums = Json::array();
  for (const Int& s : k.column_sums) sums.push_back(to_long(s));
  j["column_sums"] = std::move(sums);
  j["chern_divisibility"] = to_long(k.chern_divisibility);
  j["first_chern_class_zero"] = (k.chern_divisibility == 0);
  return j;
}

Json reeb_to_json(const ReebVector& r) {
  Json j;
  Json nu = Json::array();
  for (const Rat& q : r.nu) nu.push_back(rat_to_string(q));
  j["nu"] = std::move(nu);
  Json w = Json::array();
  for (const Rat& q : r.witness) w.push_back(rat_to_string(q));
  j["witness"] = std::move(w);
  switch (r.provenance.kind) {
    case Provenance::Kind::UserSupplied:
      j["provenance"] = {{"kind", "user"}};
      break;
    case Provenance::Kind::GeneratedNear: {
      Json target = Json::array();
      for (const Int& v : r.provenance.target) target.push_back(to_long(v));
      j["provenance"] = {{"kind", "near"},
                         {"target", std::move(target)},
                         {"seed", r.provenance.seed}};
      break;
    }
    case Provenance::Kind::GeneratedNearNormal:
      j["provenance"] = {{"kind", "near-normal"},
                         {"normal", r.provenance.normal_index},
                         {"seed", r.provenance.seed}};
      break;
  }
  return j;
}

Json farkas_to_json(const FarkasCertificate& c) {
  Json y = Json::array();
  for (const Rat& q : c.y) y.push_back(rat_to_string(q));
  return Json{{"farkas_certificate", std::move(y)}};
}

Json orbits_to_json(const std::vector<OrbitIndex>& orbits) {
  Json arr = Json::array();
  for (const OrbitIndex& o : orbits) {
    Json j;
    j["edge"] = o.edge_id;
    j["orbit"] = "gamma_" + std::to_string(o.edge_id + 1);
    j["multiple"] = o.multiple;
    j["cz"] = to_long(o.cz);
    j["degree"] = to_long(o.degree.value);
    if (o.degree.modulus > 0) j["degree_modulus"] = to_long(o.degree.modulus);
    j["action"] = rat_to_string(o.action);
    j["good"] = o.good;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json diff_to_json(const TableDiff& d) {
  Json j;
  j["common_bound"] = d.common_bound;
  j["ranks_equal"] = d.ranks_equal();
  j["identical"] = d.identical();
  Json ranks = Json::array();
  for (const auto& [deg, pair] : d.rank_diffs)
    ranks.push_back(
        {{"degree", deg}, {"left", pair.first}, {"right", pair.second}});
  j["rank_diffs"] = std::move(ranks);
  Json contribs = Json::array();
  for (const auto& [key, pair] : d.contribution_diffs)
    contribs.push_back({{"edge", key.first},
                        {"degree", key.second},
                        {"left", pair.first},
                        {"right", pair.second}});
  j["contribution_diffs"] = std::move(contribs);
  return j;
}

Json genericity_to_json(const GenericityReport& rep) {
  Json j;
  j["n_max"] = rep.n_max;
  j["clean"] = rep.clean();
  Json hits = Json::array();
  for (const DegenerateHit& h : rep.degenerate_hits)
    hits.push_back({{"edge", h.edge}, {"i", h.i}, {"multiple", h.multiple}});
  j["degenerate_hits"] = std::move(hits);
  Json zeros = Json::array();
  for (const ZeroCoeff& z : rep.zero_coeffs)
    zeros.push_back({{"edge", z.edge}, {"i", z.i}});
  j["zero_coeffs"] = std::move(zeros);
  return j;
}

}  // namespace toricch
