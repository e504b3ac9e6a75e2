#include "gnepdeg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>

#include "gnepdeg/degrees.hpp"
#include "gnepdeg/errors.hpp"
#include "gnepdeg/fjsys.hpp"
#include "gnepdeg/instance_spec.hpp"
#include "gnepdeg/polynomial.hpp"
#include "gnepdeg/selftest.hpp"

namespace gnepdeg::cli {

namespace {

using nlohmann::json;

// Shared flag bundle of the degree-style commands.
struct DegreeArgs {
  std::string spec_path;
  bool per_active = false;
  std::string active;  // empty = no --active
  bool as_json = false;
};

struct GenerateArgs {
  std::string spec_path;
  std::uint64_t seed = 0;
  int coeff_bound = 9;
  std::string out_path;
};

struct ExportArgs {
  std::string spec_path;
  std::string active;
  std::string formulation = "minors";
  std::string format = "cas";
  std::string out_path;
  std::optional<std::uint64_t> normalization_seed;
};

struct SelftestArgs {
  int depth = 1;
  bool inject_fault = false;
};

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw SpecError("cannot write " + path);
  file << content;
  if (!file) throw SpecError("cannot write " + path);
}

// Rejects tuples outside the admissible family: out-of-range indices are a
// usage error; a skipped equality or an oversized set violates the counting
// preconditions.
void require_admissible(const GnepShape& shape, const ActiveTuple& active) {
  for (std::size_t i = 0; i < shape.num_players(); ++i) {
    const auto& constraints = shape.player(i).constraints;
    for (int idx : active.set(i)) {
      if (idx < 0 || idx >= static_cast<int>(constraints.size()))
        throw ParseError("active tuple: player " + std::to_string(i + 1) +
                         " has no constraint " + std::to_string(idx + 1));
    }
    if (active.set(i).size() > static_cast<std::size_t>(shape.player(i).dim))
      throw PreconditionError("active tuple: player " + std::to_string(i + 1) +
                              " has more active constraints than variables");
    for (std::size_t j = 0; j < constraints.size(); ++j) {
      if (constraints[j].kind != ConstraintKind::Equality) continue;
      const auto& set = active.set(i);
      if (!std::binary_search(set.begin(), set.end(), static_cast<int>(j)))
        throw PreconditionError("active tuple: equality constraint " + std::to_string(j + 1) +
                                " of player " + std::to_string(i + 1) + " must be active");
    }
  }
}

json breakdown_json(const TotalDegree& total) {
  json arr = json::array();
  for (const auto& [tuple, value] : total.per_active) {
    json entry;
    entry["active"] = format_active_tuple(tuple);
    entry["degree"] = value.str();
    arr.push_back(entry);
  }
  return arr;
}

void print_breakdown(std::ostream& out, const TotalDegree& total) {
  for (const auto& [tuple, value] : total.per_active)
    out << "active " << format_active_tuple(tuple) << ": " << value.str() << "\n";
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

int do_degree(const DegreeArgs& a, std::ostream& out) {
  const InstanceSpec spec = load_instance_spec(a.spec_path);
  const GnepShape shape = spec_shape(spec);
  if (!a.active.empty()) {
    const ActiveTuple tuple = parse_active_tuple(a.active, shape.num_players());
    require_admissible(shape, tuple);
    const Int value = gnep_degree_fixed(shape, tuple);
    if (a.as_json) {
      json doc;
      doc["command"] = "degree";
      doc["active"] = format_active_tuple(tuple);
      doc["degree"] = value.str();
      emit(out, doc);
    } else {
      out << "active " << format_active_tuple(tuple) << ": " << value.str() << "\n";
    }
    return 0;
  }
  const TotalDegree total = gnep_degree_total(shape);
  if (a.as_json) {
    json doc;
    doc["command"] = "degree";
    doc["per_active"] = breakdown_json(total);
    doc["total"] = total.total.str();
    emit(out, doc);
  } else {
    if (a.per_active) print_breakdown(out, total);
    out << "total: " << total.total.str() << "\n";
  }
  return 0;
}

int do_bound(const DegreeArgs& a, std::ostream& out) {
  const InstanceSpec spec = load_instance_spec(a.spec_path);
  const GnepShape shape = spec_shape(spec);
  const ResolvedGradients resolved = spec_gradient_degrees(spec);
  if (!resolved.any_sharpening)
    throw PreconditionError(
        "bound requires concrete polynomials or explicit check_multidegree entries");
  if (!a.active.empty()) {
    const ActiveTuple tuple = parse_active_tuple(a.active, shape.num_players());
    require_admissible(shape, tuple);
    const Int sharp = gnep_degree_fixed(shape, tuple, resolved.grads);
    const Int generic = gnep_degree_fixed(shape, tuple);
    if (a.as_json) {
      json doc;
      doc["command"] = "bound";
      doc["active"] = format_active_tuple(tuple);
      doc["degree"] = sharp.str();
      doc["generic"] = generic.str();
      emit(out, doc);
    } else {
      out << "active " << format_active_tuple(tuple) << ": " << sharp.str() << "\n";
      out << "generic: " << generic.str() << "\n";
    }
    return 0;
  }
  const TotalDegree sharp = gnep_degree_total(shape, resolved.grads);
  const TotalDegree generic = gnep_degree_total(shape);
  if (a.as_json) {
    json doc;
    doc["command"] = "bound";
    doc["per_active"] = breakdown_json(sharp);
    doc["total"] = sharp.total.str();
    doc["generic"] = generic.total.str();
    emit(out, doc);
  } else {
    if (a.per_active) print_breakdown(out, sharp);
    out << "total: " << sharp.total.str() << "\n";
    out << "generic: " << generic.total.str() << "\n";
  }
  return 0;
}

int do_nep_degree(const DegreeArgs& a, std::ostream& out) {
  const InstanceSpec spec = load_instance_spec(a.spec_path);
  const GnepShape shape = spec_shape(spec);
  const TotalDegree total = nep_degree_total(shape);
  const TotalDegree cross = gnep_degree_total(shape);
  if (a.as_json) {
    json doc;
    doc["command"] = "nep-degree";
    doc["per_active"] = breakdown_json(total);
    doc["total"] = total.total.str();
    doc["gnep_total"] = cross.total.str();
    emit(out, doc);
  } else {
    if (a.per_active) print_breakdown(out, total);
    out << "total: " << total.total.str() << "\n";
    out << "gnep-formula: " << cross.total.str() << "\n";
  }
  return 0;
}

int do_active_sets(const DegreeArgs& a, std::ostream& out) {
  const InstanceSpec spec = load_instance_spec(a.spec_path);
  const GnepShape shape = spec_shape(spec);
  const ActiveTupleEnumeration en = enumerate_active_tuples(shape);
  if (a.as_json) {
    json doc;
    doc["command"] = "active-sets";
    doc["count"] = en.tuples.size();
    json tuples = json::array();
    for (const ActiveTuple& t : en.tuples) tuples.push_back(format_active_tuple(t));
    doc["tuples"] = tuples;
    emit(out, doc);
  } else {
    for (const ActiveTuple& t : en.tuples) out << format_active_tuple(t) << "\n";
    out << "count: " << en.tuples.size() << "\n";
  }
  return 0;
}

std::uint64_t slot_seed(std::uint64_t seed, std::uint64_t ordinal) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (ordinal + 1));
}

int do_generate(const GenerateArgs& a, std::ostream& out) {
  const InstanceSpec spec = load_instance_spec(a.spec_path);
  const GnepShape shape = spec_shape(spec);
  InstanceSpec result;
  result.dims = spec.dims;
  result.constraints.resize(shape.num_players());
  std::uint64_t ordinal = 0;
  for (std::size_t i = 0; i < shape.num_players(); ++i) {
    const GnepShape::Player& player = shape.player(i);
    SlotSpec objective;
    objective.declared = player.objective;
    objective.polynomial =
        random_generic(result.dims, player.objective, slot_seed(a.seed, ordinal++), a.coeff_bound);
    result.objectives.push_back(std::move(objective));
    for (const Constraint& c : player.constraints) {
      SlotSpec slot;
      slot.kind = c.kind;
      slot.declared = c.degree;
      slot.polynomial =
          random_generic(result.dims, c.degree, slot_seed(a.seed, ordinal++), a.coeff_bound);
      result.constraints[i].push_back(std::move(slot));
    }
  }
  write_output(a.out_path, write_instance_spec(result), out);
  return 0;
}

int do_export(const ExportArgs& a, std::ostream& out) {
  if (a.normalization_seed && a.formulation != "lagrange")
    throw SpecError("--normalization-seed applies to the lagrange formulation only");
  const InstanceSpec spec = load_instance_spec(a.spec_path);
  const GnepShape shape = spec_shape(spec);
  const std::optional<GnepInstance> instance = spec_instance(spec);
  if (!instance)
    throw PreconditionError("export requires a concrete polynomial in every slot");
  const ActiveTuple tuple = parse_active_tuple(a.active, shape.num_players());
  require_admissible(shape, tuple);
  BuildOptions options;
  options.formulation = a.formulation == "lagrange" ? Formulation::Lagrange : Formulation::Minors;
  options.normalization_seed = a.normalization_seed;
  const FritzJohnSystem system = build_fritz_john(*instance, tuple, options);
  write_output(a.out_path, a.format == "json" ? export_json(system) : export_cas(system), out);
  return 0;
}

int do_selftest(const SelftestArgs& a, std::ostream& out) {
  const std::vector<SelftestCheck> checks = run_selftest_checks(a.depth, a.inject_fault);
  int failed = 0;
  for (const SelftestCheck& c : checks) {
    if (c.ok) {
      out << "ok: " << c.name << "\n";
    } else {
      out << "FAIL: " << c.name << " (" << c.detail << ")\n";
      ++failed;
    }
  }
  out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? 0 : 3;
}

void add_degree_style_flags(CLI::App* cmd, DegreeArgs& args, bool with_active) {
  cmd->add_option("spec", args.spec_path, "Instance spec file (JSON)")->required();
  cmd->add_flag("--per-active", args.per_active, "Print the per-active-set breakdown");
  if (with_active)
    cmd->add_option("--active", args.active,
                    "Restrict to one active tuple, e.g. \"1:{1,2};2:{}\"");
  cmd->add_flag("--json", args.as_json, "Emit a JSON document instead of text");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebraic degrees of polynomial Nash games"};
  app.require_subcommand(1);

  DegreeArgs degree_args;
  CLI::App* degree =
      app.add_subcommand("degree", "Count complex Fritz-John points for generic data");
  add_degree_style_flags(degree, degree_args, true);

  DegreeArgs bound_args;
  CLI::App* bound = app.add_subcommand(
      "bound", "Upper bound from the attained gradient degrees, with generic comparison");
  add_degree_style_flags(bound, bound_args, true);

  DegreeArgs nep_args;
  CLI::App* nep =
      app.add_subcommand("nep-degree", "Own-block count for games with private constraints");
  add_degree_style_flags(nep, nep_args, false);

  DegreeArgs active_args;
  CLI::App* active_sets = app.add_subcommand("active-sets", "List the admissible active tuples");
  active_sets->add_option("spec", active_args.spec_path, "Instance spec file (JSON)")->required();
  active_sets->add_flag("--json", active_args.as_json, "Emit a JSON document instead of text");

  GenerateArgs generate_args;
  CLI::App* generate =
      app.add_subcommand("generate", "Fill a shape with seeded random generic polynomials");
  generate->add_option("spec", generate_args.spec_path, "Instance spec file (JSON)")->required();
  generate->add_option("--seed", generate_args.seed, "Deterministic seed (default 0)");
  generate->add_option("--coeff-bound", generate_args.coeff_bound,
                       "Coefficients drawn from [-B, B] (default 9)")
      ->check(CLI::PositiveNumber);
  generate->add_option("-o,--output", generate_args.out_path, "Output file (default stdout)");

  ExportArgs export_args;
  CLI::App* exporter =
      app.add_subcommand("export", "Write the Fritz-John system of one active tuple");
  exporter->add_option("spec", export_args.spec_path, "Instance spec file (JSON)")->required();
  exporter->add_option("--active", export_args.active, "Active tuple, e.g. \"1:{1};2:{}\"")
      ->required();
  exporter->add_option("--formulation", export_args.formulation, "minors (default) or lagrange")
      ->check(CLI::IsMember({"minors", "lagrange"}));
  exporter->add_option("--format", export_args.format, "cas (default) or json")
      ->check(CLI::IsMember({"cas", "json"}));
  exporter->add_option("-o,--output", export_args.out_path, "Output file (default stdout)");
  std::uint64_t norm_seed_value = 0;
  CLI::Option* norm_opt = exporter->add_option(
      "--normalization-seed", norm_seed_value,
      "Lagrange only: random affine multiplier normalization instead of the unit chart");

  SelftestArgs selftest_args;
  CLI::App* selftest = app.add_subcommand("selftest", "Run the built-in verification checks");
  selftest->add_option("--depth", selftest_args.depth, "0 = fixtures only (default 1)")
      ->check(CLI::NonNegativeNumber);
  selftest->add_flag("--inject-fault", selftest_args.inject_fault,
                     "Corrupt one expected value to exercise the failure path");

  try {
    std::vector<const char*> argv;
    argv.push_back("gnepdeg");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  if (norm_opt->count() > 0) export_args.normalization_seed = norm_seed_value;

  try {
    if (degree->parsed()) return do_degree(degree_args, out);
    if (bound->parsed()) return do_bound(bound_args, out);
    if (nep->parsed()) return do_nep_degree(nep_args, out);
    if (active_sets->parsed()) return do_active_sets(active_args, out);
    if (generate->parsed()) return do_generate(generate_args, out);
    if (exporter->parsed()) return do_export(export_args, out);
    if (selftest->parsed()) return do_selftest(selftest_args, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace gnepdeg::cli
