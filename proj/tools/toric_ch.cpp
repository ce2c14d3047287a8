#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toricch/cone.hpp"
#include "toricch/cz.hpp"
#include "toricch/errors.hpp"
#include "toricch/homology.hpp"
#include "toricch/invariants.hpp"
#include "toricch/json_io.hpp"
#include "toricch/oracle.hpp"
#include "toricch/reeb.hpp"

namespace tc = toricch;

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) out.push_back(token);
  if (!s.empty() && s.back() == ',') out.push_back("");
  return out;
}

long parse_long(const std::string& s, const std::string& what) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw tc::SpecError(what + ": '" + s + "' is not an integer");
  return v;
}

tc::ConeSpec builtin_cone(const std::string& name) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  if (head == "square") {
    if (colon != std::string::npos)
      throw tc::SpecError("builtin 'square' takes no parameter");
    return tc::make_square_cone();
  }
  if (colon == std::string::npos)
    throw tc::SpecError("builtin '" + name + "' needs a parameter, e.g. ck:1");
  long p = parse_long(name.substr(colon + 1), "builtin parameter");
  if (head == "ck") return tc::make_ck(static_cast<int>(p));
  if (head == "sphere") return tc::make_simplex_cone(static_cast<int>(p));
  throw tc::SpecError("unknown builtin '" + head + "' (ck:K, sphere:N, square)");
}

struct InputOpts {
  std::string file;
  std::string builtin;

  tc::ConeSpec load() const {
    if (!file.empty() && !builtin.empty())
      throw tc::SpecError("give a cone file or --builtin, not both");
    if (!builtin.empty()) return builtin_cone(builtin);
    if (!file.empty()) return tc::parse_cone_file(file);
    throw tc::SpecError("no input: give a cone file or --builtin");
  }
};

void add_input(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("file", in.file, "cone description (JSON)");
  cmd->add_option("--builtin", in.builtin, "built-in cone: ck:K, sphere:N, square");
}

struct ReebOpts {
  std::string spec;
  std::string signs;
  std::uint64_t seed = 0;
  long screen = 64;
  long min_denominator = 101;

  tc::ReebVector resolve(const tc::GoodCone& cone) const {
    if (spec.empty())
      throw tc::SpecError("--reeb is required (exact:..., near:..., near-normal:J)");
    auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw tc::SpecError("--reeb needs a kind prefix: exact:, near:, near-normal:");
    std::string kind = spec.substr(0, colon);
    std::string payload = spec.substr(colon + 1);
    if (kind != "near" && !signs.empty())
      throw tc::SpecError("--signs only applies to --reeb near:...");

    if (kind == "exact") {
      tc::RatVec nu;
      for (const std::string& t : split_csv(payload)) nu.push_back(tc::rat_from_string(t));
      return tc::check_admissible(cone, nu);
    }

    tc::GenOptions opt;
    opt.seed = seed;
    opt.n_max = screen;
    opt.min_denominator = min_denominator;
    if (kind == "near") {
      tc::IntVec target;
      for (const std::string& t : split_csv(payload))
        target.push_back(tc::Int(parse_long(t, "near target entry")));
      for (const std::string& t : split_csv(signs)) {
        if (t == "+" || t == "+1")
          opt.signs.push_back(1);
        else if (t == "-" || t == "-1")
          opt.signs.push_back(-1);
        else if (!t.empty())
          throw tc::SpecError("--signs entries must be + or -");
      }
      return tc::generate_generic(cone, target, opt);
    }
    if (kind == "near-normal") {
      long j = parse_long(payload, "near-normal index");
      return tc::generate_near_normal(cone, static_cast<int>(j), opt);
    }
    throw tc::SpecError("unknown --reeb kind '" + kind + "'");
  }
};

void add_reeb(CLI::App* cmd, ReebOpts& r, const std::string& n_max_help) {
  cmd->add_option("--reeb", r.spec,
                  "Reeb vector: exact:q1,...  near:i1,...  near-normal:J");
  cmd->add_option("--signs", r.signs, "perturbation signs for near:, e.g. -,-");
  cmd->add_option("--seed", r.seed, "generation seed");
  cmd->add_option("--n-max", r.screen, n_max_help);
  cmd->add_option("--min-denominator", r.min_denominator,
                  "smallest perturbation denominator");
}

void emit(const tc::Json& j, const std::string& format, const std::string& table) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of good toric contact manifolds"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  InputOpts in_validate, in_edges, in_pi1, in_chern, in_reeb, in_indices, in_homology;
  ReebOpts reeb_check, reeb_indices, reeb_homology;
  reeb_indices.screen = 10;
  long cutoff = 20;
  std::string compare_left, compare_right;

  CLI::App* cmd_validate = app.add_subcommand("validate", "check the goodness clauses");
  add_input(cmd_validate, in_validate);
  CLI::App* cmd_edges = app.add_subcommand("edges", "list the cone's edges");
  add_input(cmd_edges, in_edges);
  CLI::App* cmd_pi1 = app.add_subcommand("pi1", "fundamental group");
  add_input(cmd_pi1, in_pi1);
  CLI::App* cmd_chern = app.add_subcommand("chern", "Chern divisibility and grading");
  add_input(cmd_chern, in_chern);
  CLI::App* cmd_reeb = app.add_subcommand("reeb-check", "admissibility of a Reeb vector");
  add_input(cmd_reeb, in_reeb);
  add_reeb(cmd_reeb, reeb_check, "genericity screen horizon");
  CLI::App* cmd_indices = app.add_subcommand("indices", "orbit index table");
  add_input(cmd_indices, in_indices);
  add_reeb(cmd_indices, reeb_indices, "largest cover multiple shown");
  CLI::App* cmd_homology =
      app.add_subcommand("homology", "graded ranks of cylindrical contact homology");
  add_input(cmd_homology, in_homology);
  add_reeb(cmd_homology, reeb_homology, "genericity screen horizon for generation");
  cmd_homology->add_option("--cutoff", cutoff, "largest degree reported");
  CLI::App* cmd_compare = app.add_subcommand("compare", "diff two rank-table files");
  cmd_compare->add_option("left", compare_left, "rank table (JSON)")->required();
  cmd_compare->add_option("right", compare_right, "rank table (JSON)")->required();

  // Let global options like --format appear after the subcommand name.
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_validate->parsed()) {
      tc::GoodCone cone = tc::validate_good(in_validate.load());
      tc::Json j{{"good", true},
                 {"dimension", cone.dim()},
                 {"facets", cone.d()},
                 {"edges", tc::edges_to_json(cone)},
                 {"report", cone.validation_report}};
      if (cone.spec.name) j["name"] = *cone.spec.name;
      std::ostringstream t;
      for (const std::string& line : cone.validation_report) t << line << "\n";
      t << "good moment cone: dimension " << cone.dim() << ", " << cone.d()
        << " facets, " << cone.edges.size() << " edges\n";
      emit(j, format, t.str());
    } else if (cmd_edges->parsed()) {
      tc::GoodCone cone = tc::validate_good(in_edges.load());
      std::ostringstream t;
      for (const tc::Edge& e : cone.edges) {
        t << "edge " << e.id << "  active " << tc::active_set_string(e.active)
          << "  generator (";
        for (size_t i = 0; i < e.generator.size(); ++i)
          t << (i ? "," : "") << e.generator[i].get_str();
        t << ")\n";
      }
      emit(tc::edges_to_json(cone), format, t.str());
    } else if (cmd_pi1->parsed()) {
      tc::GoodCone cone = tc::validate_good(in_pi1.load());
      tc::AbelianGroup g = tc::fundamental_group(cone);
      emit(tc::group_to_json(g), format, "pi_1 = " + tc::group_to_string(g) + "\n");
    } else if (cmd_chern->parsed()) {
      tc::GoodCone cone = tc::validate_good(in_chern.load());
      tc::KernelData k = tc::chern_data(cone);
      long modulus = tc::grading_modulus(cone);
      tc::Json j = tc::chern_to_json(k);
      j["grading_modulus"] = modulus;
      std::ostringstream t;
      t << "chern divisibility c = " << k.chern_divisibility.get_str() << "\n";
      t << "first chern class zero: " << (k.chern_divisibility == 0 ? "yes" : "no")
        << "\n";
      if (modulus == 0)
        t << "grading: Z\n";
      else
        t << "grading: Z/" << modulus << "\n";
      emit(j, format, t.str());
    } else if (cmd_reeb->parsed()) {
      tc::GoodCone cone = tc::validate_good(in_reeb.load());
      tc::ReebVector r = reeb_check.resolve(cone);
      tc::GenericityReport rep = tc::nondegenerate_up_to(cone, r, reeb_check.screen);
      tc::Json j = tc::reeb_to_json(r);
      j["admissible"] = true;
      j["genericity"] = tc::genericity_to_json(rep);
      std::ostringstream t;
      t << "admissible: yes\nnu = (";
      for (size_t i = 0; i < r.nu.size(); ++i)
        t << (i ? "," : "") << tc::rat_to_string(r.nu[i]);
      t << ")\nwitness = (";
      for (size_t i = 0; i < r.witness.size(); ++i)
        t << (i ? "," : "") << tc::rat_to_string(r.witness[i]);
      t << ")\nnondegenerate up to multiple " << rep.n_max << ": "
        << (rep.clean() ? "yes" : "no") << "\n";
      emit(j, format, t.str());
    } else if (cmd_indices->parsed()) {
      tc::GoodCone cone = tc::validate_good(in_indices.load());
      tc::ReebVector r = reeb_indices.resolve(cone);
      std::vector<tc::OrbitIndex> orbits = tc::orbit_table(cone, r, reeb_indices.screen);
      std::ostringstream t;
      t << std::left << std::setw(10) << "orbit" << std::right << std::setw(5) << "N"
        << std::setw(8) << "cz" << "  " << std::left << std::setw(14) << "degree"
        << std::setw(18) << "action" << "good\n";
      for (const tc::OrbitIndex& o : orbits) {
        std::string degree = o.degree.value.get_str();
        if (o.degree.modulus > 0) degree += " (mod " + o.degree.modulus.get_str() + ")";
        // The trailing spaces keep a separator even when a cell overflows.
        t << std::left << std::setw(10) << ("gamma_" + std::to_string(o.edge_id + 1))
          << std::right << std::setw(5) << o.multiple << std::setw(8) << o.cz.get_str()
          << "  " << std::left << std::setw(14) << (degree + "  ") << std::setw(18)
          << (tc::rat_to_string(o.action) + "  ") << (o.good ? "good" : "bad") << "\n";
      }
      emit(tc::orbits_to_json(orbits), format, t.str());
    } else if (cmd_homology->parsed()) {
      tc::GoodCone cone = tc::validate_good(in_homology.load());
      ReebOpts opts = reeb_homology;
      // The rank scan visits multiples well past the cutoff; make sure the
      // generated Reeb vector is certified clean at least that far.
      if (opts.screen < 4 * cutoff) opts.screen = 4 * cutoff;
      tc::ReebVector r = opts.resolve(cone);
      tc::RankTable table = tc::chain_ranks(cone, r, cutoff);
      emit(tc::rank_table_to_json(table), format, tc::render_table(table));
    } else if (cmd_compare->parsed()) {
      tc::RankTable left = tc::parse_rank_table_file(compare_left);
      tc::RankTable right = tc::parse_rank_table_file(compare_right);
      tc::TableDiff diff = tc::compare_tables(left, right);
      std::ostringstream t;
      t << "comparable up to degree " << diff.common_bound << "\n";
      if (diff.rank_diffs.empty()) {
        t << "ranks: identical\n";
      } else {
        for (const auto& [deg, ab] : diff.rank_diffs)
          t << "rank differs at degree " << deg << ": " << ab.first << " vs "
            << ab.second << "\n";
      }
      t << "contribution differences: " << diff.contribution_diffs.size() << "\n";
      emit(tc::diff_to_json(diff), format, t.str());
      return diff.ranks_equal() ? 0 : 1;
    }
    return 0;
  } catch (const tc::InadmissibleReeb& e) {
    std::cerr << "error: " << e.what() << "\n"
              << tc::farkas_to_json(e.certificate).dump(2) << "\n";
    return 3;
  } catch (const tc::GenerationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const tc::DegenerateOrbit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const tc::DegenerateReeb& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const tc::NotPrimitive& e) {
    std::cerr << "not a good cone: " << e.what() << "\n";
    return 2;
  } catch (const tc::RedundantNormal& e) {
    std::cerr << "not a good cone: " << e.what() << "\n";
    return 2;
  } catch (const tc::NotStronglyConvex& e) {
    std::cerr << "not a good cone: " << e.what() << "\n";
    return 2;
  } catch (const tc::BadFaceCount& e) {
    std::cerr << "not a good cone: " << e.what() << "\n";
    return 2;
  } catch (const tc::NotBasisExtendable& e) {
    std::cerr << "not a good cone: " << e.what() << "\n";
    return 2;
  } catch (const tc::ModulusError& e) {
    std::cerr << "error: " << e.what()
              << " (degrees are periodic; use 'indices' for residues)\n";
    return 2;
  } catch (const tc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
