#include "qgclass/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qgclass/cohomology.hpp"
#include "qgclass/lie_algebra.hpp"
#include "qgclass/rmatrix.hpp"
#include "qgclass/root_system.hpp"
#include "qgclass/triples.hpp"

namespace qgclass {

namespace {

AdmissibleTriple parse_triple_spec(const std::string& spec,
                                   std::shared_ptr<const RootSystem> rs) {
  if (spec.empty() || spec == "empty")
    return make_triple(std::move(rs), {}, {}, {});
  nlohmann::json j;
  try {
    if (spec.front() == '@') {
      std::ifstream file(spec.substr(1));
      if (!file) throw std::invalid_argument("cannot open triple file " + spec.substr(1));
      j = nlohmann::json::parse(file);
    } else {
      j = nlohmann::json::parse(spec);
    }
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("triple spec is not valid JSON: ") + e.what());
  }
  return triple_from_json(j, std::move(rs));
}

// Plain-text rendering for --format table: "key: value" lines, arrays as
// one compact entry per line.
void render_table(const nlohmann::json& j, std::ostream& out, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        out << indent << key << ":\n";
        render_table(value, out, indent + "  ");
      } else {
        out << indent << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) out << indent << "- " << value.dump() << "\n";
  } else {
    out << indent << j.dump() << "\n";
  }
}

void emit(const nlohmann::json& j, const std::string& format, std::ostream& out) {
  if (format == "table")
    render_table(j, out, "");
  else
    out << j.dump() << "\n";
}

struct SystemSpec {
  TypeLabel type;
  int rank;
};

std::vector<SystemSpec> sweep_battery(int rank_cap) {
  std::vector<SystemSpec> out;
  for (int n = 1; n <= rank_cap; ++n) out.push_back({TypeLabel::A, n});
  for (int n = 2; n <= rank_cap - 1; ++n) out.push_back({TypeLabel::B, n});
  for (int n = 2; n <= rank_cap - 1; ++n) out.push_back({TypeLabel::C, n});
  for (int n = 4; n <= rank_cap; ++n) out.push_back({TypeLabel::D, n});
  return out;
}

}  // namespace

nlohmann::json sweep_report(int rank_cap) {
  if (rank_cap < 1 || rank_cap > 8)
    throw std::invalid_argument("rank cap must be between 1 and 8");

  nlohmann::json systems = nlohmann::json::array();
  long total = 0, passed = 0;
  for (const SystemSpec& spec : sweep_battery(rank_cap)) {
    auto rs = build_root_system_shared(spec.type, spec.rank);
    auto g = MatrixLieAlgebra::realize(rs);
    nlohmann::json triples = nlohmann::json::array();
    for (const AdmissibleTriple& triple : enumerate_admissible_triples(rs)) {
      R0Space r0 = solve_r0(*g, triple);
      RMatrix r = build_bd_rmatrix(g, triple, r0.particular, HalfLaurent::one());
      bool cybe_zero = cybe_defect(r).is_zero();
      bool sym_ok = symmetrization_is_scaled_casimir(r);
      bool perturbed_ok = true;
      for (const Tensor2& v : r0.homogeneous_basis) {
        RMatrix shifted = build_bd_rmatrix(g, triple, r0.particular + v, HalfLaurent::one());
        if (!cybe_defect(shifted).is_zero()) perturbed_ok = false;
      }

      CohomologyReport nontwisted = nontwisted_cardinality(triple, Group::automatic);
      CohomologyReport twisted = twisted_cardinality(triple, Group::automatic);
      bool tables_ok =
          nontwisted.cardinality.kind == Cardinality::Kind::count &&
          nontwisted.cardinality.value >= 1 &&
          (twisted.cardinality == Cardinality::empty_set() ||
           twisted.cardinality == Cardinality::of(1) ||
           twisted.cardinality == Cardinality::of(2));

      nlohmann::json entry{{"triple", triple_to_json(triple)},
                           {"r0_homogeneous_dimension", r0.homogeneous_basis.size()},
                           {"cybe_defect_zero", cybe_zero},
                           {"cybe_defect_zero_perturbed", perturbed_ok},
                           {"symmetrization_is_casimir", sym_ok},
                           {"nontwisted", report_to_json(nontwisted)},
                           {"twisted", report_to_json(twisted)}};
      bool ok = cybe_zero && sym_ok && perturbed_ok && tables_ok;
      if (spec.type == TypeLabel::A) {
        CohomologyReport sl = nontwisted_cardinality(triple, Group::SL);
        entry["nontwisted_sl"] = report_to_json(sl);
        ok = ok && sl.cardinality.kind == Cardinality::Kind::count &&
             (spec.rank + 1) % sl.cardinality.value == 0;
      }
      entry["pass"] = ok;
      total += 1;
      if (ok) passed += 1;
      triples.push_back(std::move(entry));
    }
    systems.push_back(nlohmann::json{{"type", type_to_string(spec.type)},
                                     {"rank", spec.rank},
                                     {"triples", std::move(triples)}});
  }
  return {{"rank_cap", rank_cap},
          {"systems", std::move(systems)},
          {"summary",
           {{"total", total}, {"passed", passed}, {"failed", total - passed}}}};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Belavin-Drinfeld machinery for classical Lie bialgebras"};
  app.name("qgclass");

  bool sweep = false;
  std::string sweep_format = "json";
  app.add_flag("--sweep", sweep, "run the full verification battery");
  app.add_option("--format", sweep_format, "output format for --sweep")
      ->check(CLI::IsMember({"json", "table"}));

  struct SubOpts {
    std::string type;
    int rank = 0;
    std::string triple = "empty";
    std::string format = "json";
    std::string group;
    std::string scaling = "1";
    std::string kind;
    bool twisted = false;
  };

  auto add_common = [](CLI::App* cmd, SubOpts& o, bool needs_triple) {
    cmd->add_option("--type", o.type, "root system type: A, B, C or D")->required();
    cmd->add_option("--rank", o.rank, "root system rank")->required();
    if (needs_triple)
      cmd->add_option("--triple", o.triple,
                      "triple as inline JSON, @file, or 'empty' (default)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
  };

  SubOpts triples_opts, rmatrix_opts, verify_opts, cohomology_opts, strings_opts;
  SubOpts doubles_opts;

  CLI::App* cmd_triples =
      app.add_subcommand("triples", "enumerate all admissible triples");
  add_common(cmd_triples, triples_opts, false);

  CLI::App* cmd_rmatrix =
      app.add_subcommand("rmatrix", "build the r-matrix for a triple");
  add_common(cmd_rmatrix, rmatrix_opts, true);
  cmd_rmatrix->add_option("--scaling", rmatrix_opts.scaling, "1 or sqrt_hbar")
      ->check(CLI::IsMember({"1", "sqrt_hbar"}));

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "check CYBE and symmetrization for a triple");
  add_common(cmd_verify, verify_opts, true);

  CLI::App* cmd_cohomology =
      app.add_subcommand("cohomology", "classification-level cardinalities");
  add_common(cmd_cohomology, cohomology_opts, true);
  cmd_cohomology->add_option("--group", cohomology_opts.group, "GL or SL (type A)")
      ->check(CLI::IsMember({"GL", "SL"}));
  cmd_cohomology->add_flag("--twisted", cohomology_opts.twisted,
                           "twisted instead of non-twisted cohomology");

  CLI::App* cmd_doubles = app.add_subcommand("doubles", "Drinfeld double type");
  cmd_doubles->add_option("--kind", doubles_opts.kind, "nontwisted, twisted or skew")
      ->required()
      ->check(CLI::IsMember({"nontwisted", "twisted", "skew"}));
  cmd_doubles->add_option("--format", doubles_opts.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* cmd_strings =
      app.add_subcommand("strings", "tau strings, weights and the GCD invariant");
  add_common(cmd_strings, strings_opts, true);

  std::vector<const char*> argv;
  argv.push_back("qgclass");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (sweep) {
      if (!app.get_subcommands().empty()) {
        err << "--sweep does not combine with a subcommand\n";
        return 2;
      }
      int cap = 4;
      if (const char* env = std::getenv("QGCLASS_RANK_CAP")) cap = std::atoi(env);
      emit(sweep_report(cap), sweep_format, out);
      return 0;
    }

    if (cmd_triples->parsed()) {
      auto rs = build_root_system_shared(type_from_string(triples_opts.type),
                                         triples_opts.rank);
      nlohmann::json arr = nlohmann::json::array();
      for (const AdmissibleTriple& t : enumerate_admissible_triples(rs))
        arr.push_back(triple_to_json(t));
      emit(arr, triples_opts.format, out);
      return 0;
    }

    if (cmd_rmatrix->parsed()) {
      auto rs = build_root_system_shared(type_from_string(rmatrix_opts.type),
                                         rmatrix_opts.rank);
      auto g = MatrixLieAlgebra::realize(rs);
      AdmissibleTriple triple = parse_triple_spec(rmatrix_opts.triple, rs);
      R0Space r0 = solve_r0(*g, triple);
      HalfLaurent scaling = rmatrix_opts.scaling == "sqrt_hbar"
                                ? HalfLaurent::sqrt_hbar()
                                : HalfLaurent::one();
      RMatrix r = build_bd_rmatrix(g, triple, r0.particular, scaling);
      nlohmann::json j = rmatrix_to_json(r);
      j["r0_homogeneous_dimension"] = r0.homogeneous_basis.size();
      emit(j, rmatrix_opts.format, out);
      return 0;
    }

    if (cmd_verify->parsed()) {
      auto rs = build_root_system_shared(type_from_string(verify_opts.type),
                                         verify_opts.rank);
      auto g = MatrixLieAlgebra::realize(rs);
      AdmissibleTriple triple = parse_triple_spec(verify_opts.triple, rs);
      R0Space r0 = solve_r0(*g, triple);
      RMatrix r = build_bd_rmatrix(g, triple, r0.particular, HalfLaurent::one());
      nlohmann::json j{{"cybe_defect_zero", cybe_defect(r).is_zero()},
                       {"symmetrization_is_casimir", symmetrization_is_scaled_casimir(r)}};
      emit(j, verify_opts.format, out);
      return 0;
    }

    if (cmd_cohomology->parsed()) {
      auto rs = build_root_system_shared(type_from_string(cohomology_opts.type),
                                         cohomology_opts.rank);
      AdmissibleTriple triple = parse_triple_spec(cohomology_opts.triple, rs);
      Group group = group_from_string(cohomology_opts.group);
      CohomologyReport report = cohomology_opts.twisted
                                    ? twisted_cardinality(triple, group)
                                    : nontwisted_cardinality(triple, group);
      emit(report_to_json(report), cohomology_opts.format, out);
      return 0;
    }

    if (cmd_doubles->parsed()) {
      StructureKind kind = structure_kind_from_string(doubles_opts.kind);
      StructureDescriptor d = make_descriptor(kind, std::nullopt);
      nlohmann::json j{{"kind", structure_kind_to_string(kind)},
                       {"double", double_type_to_string(double_type(d))}};
      emit(j, doubles_opts.format, out);
      return 0;
    }

    if (cmd_strings->parsed()) {
      auto rs = build_root_system_shared(type_from_string(strings_opts.type),
                                         strings_opts.rank);
      AdmissibleTriple triple = parse_triple_spec(strings_opts.triple, rs);
      nlohmann::json arr = nlohmann::json::array();
      for (const TauString& s : strings(triple))
        arr.push_back(nlohmann::json{
            {"members", s.members}, {"weight", s.weight}, {"formal", s.is_formal}});
      nlohmann::json j{{"strings", arr}, {"N", gcd_invariant(triple)}};
      emit(j, strings_opts.format, out);
      return 0;
    }

    err << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << nlohmann::json{{"error", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << nlohmann::json{{"error", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << nlohmann::json{{"error", std::string("internal error: ") + e.what()}}.dump()
        << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << nlohmann::json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace qgclass
