#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "fintop/construction.hpp"
#include "fintop/homotopy.hpp"
#include "fintop/io.hpp"
#include "fintop/mccord.hpp"
#include "fintop/verify.hpp"

using namespace fintop;

namespace {

struct GlobalFlags {
  std::string group_spec;
  std::string group_file;
  std::string gens;
  std::string mode = "sandt:1";
  bool pointed = false;
  std::uint64_t budget_maps = 10'000'000;
  std::uint64_t budget_aut = 1'000'000;
  std::uint64_t seed = 0;
  std::string out;
};

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
  const char* value = std::getenv(name);
  if (!value || !*value) return fallback;
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    throw InvalidArgument(std::string(name) + " must be a non-negative integer");
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

FiniteGroup load_group(const GlobalFlags& flags) {
  if (!flags.group_file.empty()) return group_from_json(parse_json(read_text_file(flags.group_file)));
  if (flags.group_spec.empty()) throw InvalidArgument("give --group family:param or --group-file FILE");
  return builtin_group_from_spec(flags.group_spec);
}

std::vector<Element> load_gens(const GlobalFlags& flags, const FiniteGroup& group) {
  if (!flags.gens.empty()) return resolve_labels(group, split_commas(flags.gens));
  if (!flags.group_file.empty()) throw InvalidArgument("--gens is required with --group-file");
  auto family = flags.group_spec.substr(0, flags.group_spec.find(':'));
  return standard_generators(family, group);
}

void emit(const GlobalFlags& flags, const std::string& text) {
  if (flags.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(flags.out, text);
  }
}

FinitePoset load_space(const std::string& path) { return poset_from_text(read_text_file(path)); }

std::string images_json(const FinitePoset& space, const PosetMap& f) {
  nlohmann::json images = nlohmann::json::array();
  for (PointIndex x = 0; x < space.size(); ++x) images.push_back(space.id(f(x)));
  return images.dump();
}

std::string matrix_text(const IntSquareMatrix& m) {
  std::ostringstream out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-space realizations of finite groups: build, inspect and verify."};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  flags.budget_maps = env_budget("FINTOP_BUDGET_MAPS", flags.budget_maps);
  flags.budget_aut = env_budget("FINTOP_BUDGET_AUT", flags.budget_aut);

  auto* group_opt = app.add_option("--group", flags.group_spec, "Built-in group, family:param (cyclic:3, dihedral:4, ...)");
  auto* file_opt = app.add_option("--group-file", flags.group_file, "Group document {order, identity, labels, cayley}");
  group_opt->excludes(file_opt);
  app.add_option("--gens", flags.gens, "Comma-separated generator labels (default: the family's standard set)");
  app.add_option("--mode", flags.mode, "Gadget mode: none, sonly or sandt:N")->capture_default_str();
  app.add_flag("--pointed", flags.pointed, "Add the basepoint above the level -1 points");
  app.add_option("--budget-maps", flags.budget_maps, "Node budget for self-map enumeration (env FINTOP_BUDGET_MAPS)");
  app.add_option("--budget-aut", flags.budget_aut, "Node budget for automorphism search (env FINTOP_BUDGET_AUT)");
  app.add_option("--seed", flags.seed, "Reserved; every algorithm is deterministic");
  app.add_option("--out", flags.out, "Write the result to this file instead of stdout");

  std::string space_path;
  auto* build = app.add_subcommand("build", "Build a space and print its document");

  auto* aut = app.add_subcommand("aut", "List the automorphisms of a space");
  aut->add_option("space", space_path, "Space document")->required();

  auto* core_cmd = app.add_subcommand("core", "Remove beat points and print the core");
  core_cmd->add_option("space", space_path, "Space document")->required();

  std::size_t limit = 8;
  auto* selfmaps = app.add_subcommand("selfmaps", "Enumerate continuous self-maps and their homotopy classes");
  selfmaps->add_option("space", space_path, "Space document")->required();
  selfmaps->add_option("--limit", limit, "Largest space to enumerate")->capture_default_str();

  std::size_t cap = 2;
  auto* complex_cmd = app.add_subcommand("complex", "Build the order complex of a space");
  complex_cmd->add_option("space", space_path, "Space document")->required();
  complex_cmd->add_option("--cap", cap, "Top simplex dimension")->capture_default_str();

  std::string complex_path;
  auto* homology_cmd = app.add_subcommand("homology", "Integral homology of a complex document");
  homology_cmd->add_option("complex", complex_path, "Complex document")->required();

  auto* h1 = app.add_subcommand("h1-action", "H1 matrices of every automorphism");
  h1->add_option("space", space_path, "Space document")->required();

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram as DOT");
  dot->add_option("space", space_path, "Space document")->required();

  VerifyOptions verify_options;
  std::string check_name;
  std::string family_range = "1,2,3";
  std::vector<std::string> skip;
  bool json_report = false;
  bool no_timings = false;
  auto add_verify_flags = [&](CLI::App* sub) {
    sub->add_option("--family-range", family_range, "Values of n for the T^n family checks")->capture_default_str();
    sub->add_option("--skip", skip, "Check names to skip");
    sub->add_flag("--json", json_report, "Print the report as JSON");
    sub->add_flag("--no-timings", no_timings, "Omit timing fields");
  };
  auto* verify = app.add_subcommand("verify", "Run one named check");
  verify->add_option("check", check_name, "Check name")->required();
  add_verify_flags(verify);
  auto* verify_all_cmd = app.add_subcommand("verify-all", "Run every check in order");
  add_verify_flags(verify_all_cmd);
  auto* list = app.add_subcommand("list-checks", "Print the check names in report order");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      auto group = load_group(flags);
      ConstructionSpec spec{validate_generating_set(group, load_gens(flags, group))};
      parse_mode(flags.mode, spec.mode, spec.t_length);
      spec.pointed = flags.pointed;
      emit(flags, poset_to_text(build_space(spec)));
    } else if (aut->parsed()) {
      auto space = load_space(space_path);
      AutomorphismOptions options;
      options.node_budget = flags.budget_aut;
      auto group = automorphism_group(space, options);
      std::ostringstream out;
      out << "order=" << group.order() << '\n';
      for (std::size_t i = 0; i < group.order(); ++i) out << 'f' << i << ' ' << images_json(space, group.elements()[i]) << '\n';
      emit(flags, out.str());
    } else if (core_cmd->parsed()) {
      auto result = core(load_space(space_path));
      nlohmann::json trace = nlohmann::json::array();
      for (const auto& label : result.trace) trace.push_back(to_id(label));
      std::cerr << "removed " << result.trace.size() << " beat points: " << trace.dump() << '\n';
      emit(flags, poset_to_text(result.core));
    } else if (selfmaps->parsed()) {
      auto space = load_space(space_path);
      auto maps = enumerate_continuous_selfmaps(space, {limit, flags.budget_maps});
      auto count = maps.size();
      auto classes = homotopy_classes(std::move(maps));
      auto equivalences = classes.equivalence_group();
      std::ostringstream out;
      out << "maps=" << count << '\n'
          << "homotopy_classes=" << classes.classes.size() << '\n'
          << "equivalence_classes=" << classes.equivalence_classes.size() << '\n';
      out << "equivalence_element_orders=[";
      for (Element e = 0; e < equivalences.order(); ++e) out << (e ? "," : "") << equivalences.element_order(e);
      out << "]\n";
      emit(flags, out.str());
    } else if (complex_cmd->parsed()) {
      auto space = load_space(space_path);
      emit(flags, complex_to_json(space, order_complex(space, cap)).dump(2) + "\n");
    } else if (homology_cmd->parsed()) {
      auto complex = complex_from_json(parse_json(read_text_file(complex_path)));
      ChainComplex chains(complex);
      std::ostringstream out;
      std::vector<std::string> torsion;
      for (std::size_t k = 0; k < complex.dim_cap(); ++k) {
        auto h = homology(chains, k);
        out << (k ? ", " : "") << 'b' << k << '=' << h.betti;
        for (const auto& t : h.torsion) torsion.push_back("H" + std::to_string(k) + ":" + t.str());
      }
      out << ", torsion=[";
      for (std::size_t i = 0; i < torsion.size(); ++i) out << (i ? "," : "") << torsion[i];
      out << "]\n";
      emit(flags, out.str());
    } else if (h1->parsed()) {
      auto space = load_space(space_path);
      AutomorphismOptions options;
      options.node_budget = flags.budget_aut;
      auto group = automorphism_group(space, options);
      auto basis = hasse_h1_basis(space);
      std::ostringstream out;
      for (std::size_t i = 0; i < group.order(); ++i) {
        out << 'f' << i << '\n' << matrix_text(induced_h1_action(group.elements()[i], basis));
      }
      emit(flags, out.str());
    } else if (dot->parsed()) {
      emit(flags, export_dot(load_space(space_path)));
    } else if (list->parsed()) {
      std::ostringstream out;
      for (const auto& name : check_names()) out << name << '\n';
      emit(flags, out.str());
    } else if (verify->parsed() || verify_all_cmd->parsed()) {
      auto group = load_group(flags);
      auto gens = load_gens(flags, group);
      parse_mode(flags.mode, verify_options.mode, verify_options.t_length);
      verify_options.aut_budget = flags.budget_aut;
      verify_options.family_range.clear();
      for (const auto& part : split_commas(family_range)) verify_options.family_range.push_back(std::stoi(part));
      verify_options.skip.insert(skip.begin(), skip.end());
      if (verify->parsed()) verify_options.only = check_name;
      auto report = verify_all(group, gens, verify_options);
      emit(flags, json_report ? report.to_json(!no_timings).dump(2) + "\n" : report.to_text(!no_timings));
      return report.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
