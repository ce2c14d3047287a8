#pragma once

#include <string>

#include "json.hpp"
#include "toricch/cone.hpp"
#include "toricch/cz.hpp"
#include "toricch/errors.hpp"
#include "toricch/homology.hpp"
#include "toricch/invariants.hpp"
#include "toricch/reeb.hpp"

namespace toricch {

using Json = nlohmann::json;

// Cone files: {"dimension": int, "normals": [[int, ...], ...], "name"?: str}.
// Every normal entry must be a JSON integer; anything else is a SpecError
// with the offending position named.
ConeSpec cone_from_json(const Json& j);
ConeSpec parse_cone_file(const std::string& path);
Json cone_to_json(const ConeSpec& spec);

// Rank tables: {"grading_modulus": int, "cutoff": int, "ranks": {"<deg>": int},
// "contributions": [{"edge": int, "degree": int, "count": int}],
// "complete_up_to": int} plus "has_negative_degrees": true only when set.
Json rank_table_to_json(const RankTable& t);
RankTable rank_table_from_json(const Json& j);
RankTable parse_rank_table_file(const std::string& path);

Json edges_to_json(const GoodCone& cone);
Json group_to_json(const AbelianGroup& g);
std::string group_to_string(const AbelianGroup& g);  // "Z^r x Z/a x Z/b"
Json chern_to_json(const KernelData& k);
Json reeb_to_json(const ReebVector& r);
Json farkas_to_json(const FarkasCertificate& c);
Json orbits_to_json(const std::vector<OrbitIndex>& orbits);
Json diff_to_json(const TableDiff& d);
Json genericity_to_json(const GenericityReport& rep);

}  // namespace toricch
