#include "fintop/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "fintop/homotopy.hpp"
#include "fintop/mccord.hpp"

namespace fintop {
namespace {

// A check returns its status and detail; witness is required on failure.
struct Outcome {
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  nlohmann::json witness;
};

Outcome pass(std::string detail, nlohmann::json witness = nullptr) {
  return {CheckStatus::Pass, std::move(detail), std::move(witness)};
}

Outcome fail(std::string detail, nlohmann::json witness) {
  return {CheckStatus::Fail, std::move(detail), std::move(witness)};
}

Outcome skipped(std::string detail) { return {CheckStatus::Skipped, std::move(detail), nullptr}; }

struct Homology {
  std::size_t b0 = 0;
  std::size_t b1 = 0;
  std::vector<std::string> torsion;
  std::size_t cycle_rank = 0;
  bool boundary_ok = false;
};

class Context {
 public:
  Context(GeneratingSet gens, const VerifyOptions& options) : gens_(std::move(gens)), options_(options) {}

  const FiniteGroup& group() const { return gens_.group(); }
  std::size_t n() const { return group().order(); }
  std::size_t r() const { return gens_.size(); }
  const VerifyOptions& options() const { return options_; }
  bool has_gadgets() const { return options_.mode != GadgetMode::None; }

  ConstructionSpec spec(GadgetMode mode, int t_length, bool pointed) const {
    return ConstructionSpec{gens_, mode, t_length, pointed};
  }
  ConstructionSpec bar_spec(bool pointed = false) const { return spec(options_.mode, options_.t_length, pointed); }

  const FinitePoset& base() {
    if (!base_) base_ = build_base(spec(GadgetMode::None, 1, false));
    return *base_;
  }
  const AutomorphismGroup& base_aut() {
    if (!base_aut_) base_aut_ = automorphism_group(base(), aut_options());
    return *base_aut_;
  }
  const FinitePoset& bar() {
    if (!bar_) bar_ = build_space(bar_spec());
    return *bar_;
  }
  const AutomorphismGroup& bar_aut() {
    if (!bar_aut_) bar_aut_ = automorphism_group(bar(), aut_options());
    return *bar_aut_;
  }
  const FinitePoset& pointed() {
    if (!pointed_) pointed_ = build_space(bar_spec(true));
    return *pointed_;
  }
  const AutomorphismGroup& pointed_aut() {
    if (!pointed_aut_) pointed_aut_ = automorphism_group(pointed(), aut_options());
    return *pointed_aut_;
  }
  const FinitePoset& family(int t) {
    auto it = family_.find(t);
    if (it == family_.end()) it = family_.emplace(t, build_space(spec(GadgetMode::SAndT, t, false))).first;
    return it->second;
  }
  const Homology& homology_of(const FinitePoset& space, const std::string& key) {
    auto it = homology_.find(key);
    if (it != homology_.end()) return it->second;
    Homology h;
    auto complex = order_complex(space, 2);
    ChainComplex chains(complex);
    h.boundary_ok = chains.squares_to_zero();
    h.b0 = homology(chains, 0).betti;
    auto h1 = homology(chains, 1);
    h.b1 = h1.betti;
    for (const auto& t : h1.torsion) h.torsion.push_back(t.str());
    h.cycle_rank = hasse_undirected(space).cycle_rank();
    return homology_.emplace(key, std::move(h)).first->second;
  }

 private:
  AutomorphismOptions aut_options() const {
    AutomorphismOptions o;
    o.node_budget = options_.aut_budget;
    return o;
  }

  GeneratingSet gens_;
  const VerifyOptions& options_;
  std::optional<FinitePoset> base_;
  std::optional<AutomorphismGroup> base_aut_;
  std::optional<FinitePoset> bar_;
  std::optional<AutomorphismGroup> bar_aut_;
  std::optional<FinitePoset> pointed_;
  std::optional<AutomorphismGroup> pointed_aut_;
  std::map<int, FinitePoset> family_;
  std::map<std::string, Homology> homology_;
};

nlohmann::json element_json(const FiniteGroup& g, Element e) { return {{"index", e}, {"label", g.label(e)}}; }

Outcome count_check(const FinitePoset& space, std::size_t expected, const std::string& formula) {
  if (space.size() == expected) return pass(std::to_string(expected) + " points = " + formula);
  return fail("point count differs from " + formula, {{"expected", expected}, {"actual", space.size()}});
}

Outcome realizes_group(Context& c, const AutomorphismGroup& aut, const std::string& what) {
  if (aut.order() != c.n()) {
    return fail("|Aut(" + what + ")| differs from |G|", {{"expected", c.n()}, {"actual", aut.order()}});
  }
  constexpr std::size_t limit = 16;
  if (c.n() > limit) {
    return pass("|Aut(" + what + ")| = " + std::to_string(aut.order()) +
                "; table comparison skipped above order " + std::to_string(limit));
  }
  if (!groups_isomorphic(aut.as_group(), c.group(), limit)) {
    return fail("composition table of Aut(" + what + ") is not isomorphic to G", {{"order", aut.order()}});
  }
  return pass("|Aut(" + what + ")| = " + std::to_string(aut.order()) + " and its table is isomorphic to G");
}

Outcome check_base_aut(Context& c) {
  const auto& aut = c.base_aut();
  const auto& g = c.group();
  std::vector<PosetMap> translations;
  for (Element a = 0; a < c.n(); ++a) {
    translations.push_back(translation_map(c.base(), g, a));
    if (!aut.index_of(translations.back())) {
      return fail("a translation is not an automorphism", {{"element", element_json(g, a)}});
    }
  }
  for (Element a = 0; a < c.n(); ++a) {
    for (Element b = 0; b < c.n(); ++b) {
      if (!(translations[a].after(translations[b]) == translations[g.mul(a, b)])) {
        return fail("translation is not a homomorphism",
                    {{"a", element_json(g, a)}, {"b", element_json(g, b)}});
      }
    }
  }
  auto out = realizes_group(c, aut, "X_G");
  if (out.status == CheckStatus::Pass) out.detail += "; translations give an isomorphism G -> Aut(X_G)";
  return out;
}

Outcome check_free_action(Context& c) {
  const auto& g = c.group();
  for (Element a = 0; a < c.n(); ++a) {
    if (a == g.identity()) continue;
    auto t = translation_map(c.base(), g, a);
    for (PointIndex x = 0; x < c.base().size(); ++x) {
      if (t(x) == x) {
        return fail("a non-identity translation fixes a point",
                    {{"element", element_json(g, a)}, {"point", c.base().id(x)}});
      }
    }
  }
  return pass("no non-identity translation fixes a point");
}

Outcome check_levels(Context& c) {
  const auto& aut = c.base_aut();
  const auto& space = c.base();
  for (std::size_t i = 0; i < aut.order(); ++i) {
    const auto& f = aut.elements()[i];
    for (PointIndex x = 0; x < space.size(); ++x) {
      if (base_level(space.label(x)) != base_level(space.label(f(x)))) {
        return fail("an automorphism changes the level of a point",
                    {{"automorphism", i}, {"point", space.id(x)}, {"image", space.id(f(x))}});
      }
    }
  }
  return pass("all " + std::to_string(aut.order()) + " automorphisms of X_G preserve levels");
}

nlohmann::json beat_json(const FinitePoset& space, const std::vector<BeatPoint>& beats) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& b : beats) {
    out.push_back({{"point", space.id(b.point)}, {"kind", b.kind == BeatKind::Up ? "up" : "down"}});
  }
  return out;
}

Outcome check_no_beats(Context& c) {
  auto beats = beat_points(c.bar());
  if (beats.empty()) return pass("X̄_G has no beat points, so it is a core");
  return fail(std::to_string(beats.size()) + " beat points in X̄_G", beat_json(c.bar(), beats));
}

Outcome check_extension(Context& c) {
  auto report = extension_isomorphism_check(c.base_aut(), c.bar_aut());
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& record : report.checks()) {
    if (record.status != CheckStatus::Pass) {
      failures.push_back({{"part", record.name}, {"detail", record.detail}, {"witness", record.witness}});
    }
  }
  if (!failures.empty()) return fail("restriction Aut(X̄_G) -> Aut(X_G) is not a verified bijection", failures);
  return pass("restriction Aut(X̄_G) -> Aut(X_G) is a bijection of groups of order " +
              std::to_string(c.bar_aut().order()) + " with natural extension as inverse");
}

Outcome check_star_fixed(Context& c) {
  const auto& space = c.pointed();
  auto star = space.find(Star{});
  if (!star) return fail("pointed space has no basepoint", {{"points", space.size()}});
  const auto& aut = c.pointed_aut();
  for (std::size_t i = 0; i < aut.order(); ++i) {
    auto image = aut.elements()[i](*star);
    if (image != *star) {
      return fail("an automorphism moves the basepoint", {{"automorphism", i}, {"image", space.id(image)}});
    }
  }
  return pass("all " + std::to_string(aut.order()) + " automorphisms of X̄*_G fix the basepoint");
}

Outcome check_family(Context& c) {
  const auto& range = c.options().family_range;
  if (range.empty()) return skipped("empty T^n range");
  nlohmann::json summary = nlohmann::json::array();
  for (int t : range) {
    const auto& space = c.family(t);
    auto beats = beat_points(space);
    if (!beats.empty()) {
      return fail("X̄^n has beat points", {{"n", t}, {"beat_points", beat_json(space, beats)}});
    }
    AutomorphismOptions o;
    o.node_budget = c.options().aut_budget;
    auto aut = automorphism_group(space, o);
    if (aut.order() != c.n()) {
      return fail("|Aut(X̄^n)| differs from |G|", {{"n", t}, {"expected", c.n()}, {"actual", aut.order()}});
    }
    summary.push_back({{"n", t}, {"points", space.size()}});
  }
  for (std::size_t i = 0; i < range.size(); ++i) {
    for (std::size_t j = i + 1; j < range.size(); ++j) {
      if (range[i] == range[j]) continue;
      if (are_isomorphic(c.family(range[i]), c.family(range[j]), c.options().aut_budget)) {
        return fail("two members of the T^n family are isomorphic", {{"n", range[i]}, {"m", range[j]}});
      }
    }
  }
  std::string ns;
  for (int t : range) ns += (ns.empty() ? "" : ",") + std::to_string(t);
  return pass("X̄^n for n in {" + ns + "} are cores with |Aut| = |G| and pairwise non-isomorphic", summary);
}

Outcome check_collapse(Context& c) {
  for (int t : c.options().family_range) {
    auto f = collapse_map(c.family(t), c.family(1));
    if (!f.is_order_preserving()) return fail("collapse map is not order-preserving", {{"n", t}});
    if (!f.is_surjective()) return fail("collapse map is not surjective", {{"n", t}});
  }
  return pass("every collapse X̄^n -> X̄^1 is an order-preserving surjection");
}

Outcome check_betti(Context& c) {
  const auto& h = c.homology_of(c.bar(), "bar");
  const long long expected = expected_b1(c.options().mode, c.n(), c.r());
  nlohmann::json actual{{"b0", h.b0}, {"b1", h.b1}, {"torsion", h.torsion}};
  if (!h.boundary_ok) return fail("boundary maps do not compose to zero", actual);
  if (h.b0 != 1 || static_cast<long long>(h.b1) != expected || !h.torsion.empty()) {
    return fail("Betti numbers differ from the prediction",
                {{"expected", {{"b0", 1}, {"b1", expected}, {"torsion", nlohmann::json::array()}}}, {"actual", actual}});
  }
  if (h.cycle_rank != h.b1) {
    return fail("Hasse graph cycle rank differs from b1", {{"cycle_rank", h.cycle_rank}, {"b1", h.b1}});
  }
  return pass("b0=1, b1=" + std::to_string(h.b1) + ", torsion=[]; Hasse graph cycle rank agrees");
}

Outcome check_n_independence(Context& c) {
  const auto& range = c.options().family_range;
  if (range.empty()) return skipped("empty T^n range");
  nlohmann::json values = nlohmann::json::array();
  std::optional<std::pair<std::size_t, std::size_t>> first;
  bool same = true;
  for (int t : range) {
    const auto& h = c.homology_of(c.family(t), "family:" + std::to_string(t));
    values.push_back({{"n", t}, {"b0", h.b0}, {"b1", h.b1}, {"torsion", h.torsion}});
    if (!h.torsion.empty()) same = false;
    if (!first) first = {h.b0, h.b1};
    if (*first != std::pair{h.b0, h.b1}) same = false;
  }
  if (!same) return fail("Betti numbers vary across the T^n family", values);
  return pass("b0=" + std::to_string(first->first) + ", b1=" + std::to_string(first->second) +
              " for every n in the range", values);
}

Outcome check_h1(Context& c) {
  const auto& space = c.bar();
  auto complex = order_complex(space, 2);
  ChainComplex chains(complex);
  auto basis = hasse_h1_basis(space);
  if (!basis_spans_h1(basis, complex, chains)) {
    return fail("Hasse fundamental cycles are not a basis of H1", {{"cycles", basis.cycles.size()}});
  }
  const auto& aut = c.bar_aut();
  std::vector<IntSquareMatrix> matrices;
  for (const auto& f : aut.elements()) matrices.push_back(induced_h1_action(f, basis));
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    for (std::size_t j = i + 1; j < matrices.size(); ++j) {
      if (matrices[i] == matrices[j]) {
        return fail("two automorphisms induce the same H1 matrix", {{"automorphisms", {i, j}}});
      }
    }
    for (std::size_t j = 0; j < matrices.size(); ++j) {
      if (matrices[aut.table()[i][j]] != multiply(matrices[i], matrices[j])) {
        return fail("H1 action is not a homomorphism", {{"automorphisms", {i, j}}});
      }
    }
  }
  return pass(std::to_string(matrices.size()) + " automorphisms induce pairwise distinct " +
              std::to_string(basis.cycles.size()) + "x" + std::to_string(basis.cycles.size()) +
              " H1 matrices forming a homomorphic image; a certificate for this instance only, "
              "not a decision procedure for injectivity up to homotopy");
}

struct Check {
  std::string name;
  bool needs_gadgets;
  std::function<Outcome(Context&)> run;
};

const std::vector<Check>& registry() {
  static const std::vector<Check> checks{
      {"base.point-count", false,
       [](Context& c) { return count_check(c.base(), expected_base_size(c.n(), c.r()), "n(r+2)"); }},
      {"base.path-connected", false,
       [](Context& c) {
         auto k = component_count(c.base());
         if (k == 1) return pass("X_G is path-connected");
         return fail("X_G is not path-connected", {{"components", k}});
       }},
      {"base.aut-realizes-group", false, check_base_aut},
      {"base.free-action", false, check_free_action},
      {"base.level-preservation", false, check_levels},
      {"bar.point-count", true,
       [](Context& c) {
         const char* formula = c.options().mode == GadgetMode::SOnly ? "n(r+2)+4nr" : "n(r+2)+(2t+8)nr";
         return count_check(c.bar(), expected_size(c.bar_spec()), formula);
       }},
      {"bar.no-beat-points", true, check_no_beats},
      {"bar.extension-bijection", true, check_extension},
      {"pointed.star-fixed", true, check_star_fixed},
      {"pointed.aut-realizes-group", true, [](Context& c) { return realizes_group(c, c.pointed_aut(), "X̄*_G"); }},
      {"family.non-isomorphic", false, check_family},
      {"family.collapse-maps", false, check_collapse},
      {"homology.betti", false, check_betti},
      {"homology.n-independence", false, check_n_independence},
      {"homology.h1-injective", true, check_h1},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out{"generating-set"};
    for (const auto& c : registry()) out.push_back(c.name);
    return out;
  }();
  return names;
}

long long expected_b1(GadgetMode mode, std::size_t order, std::size_t rank) {
  const auto n = static_cast<long long>(order);
  const auto r = static_cast<long long>(rank);
  switch (mode) {
    case GadgetMode::None:
      return n * (r - 1) + 1;
    case GadgetMode::SOnly:
      return 2 * n * r - n + 1;
    case GadgetMode::SAndT:
      return 3 * n * r - n + 1;
  }
  return 0;
}

VerificationReport verify_all(const FiniteGroup& group, const std::vector<Element>& gens,
                              const VerifyOptions& options) {
  const auto& names = check_names();
  auto known = [&](const std::string& name) { return std::find(names.begin(), names.end(), name) != names.end(); };
  if (options.only && !known(*options.only)) throw InvalidArgument("unknown check '" + *options.only + "'");
  for (const auto& name : options.skip) {
    if (!known(name)) throw InvalidArgument("unknown check '" + name + "'");
  }
  auto selected = [&](const std::string& name) { return !options.only || *options.only == name; };

  using Clock = std::chrono::steady_clock;
  auto millis = [](Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };

  VerificationReport report;
  std::optional<GeneratingSet> validated;
  std::string gens_failure;
  {
    auto start = Clock::now();
    try {
      validated = validate_generating_set(group, gens);
    } catch (const GeneratingSetError& e) {
      gens_failure = e.what();
      nlohmann::json subgroup = nlohmann::json::array();
      for (auto w : e.witness()) subgroup.push_back(group.label(w));
      if (selected("generating-set")) {
        const char* key = e.kind() == GeneratingSetError::Kind::DoesNotGenerate ? "generated_subgroup" : "offending";
        report.fail("generating-set", e.what(), {{key, subgroup}}, millis(start));
      }
    }
    if (validated && selected("generating-set")) {
      if (options.skip.count("generating-set")) {
        report.skip("generating-set", "skipped by request");
      } else {
        nlohmann::json labels = nlohmann::json::array();
        for (auto g : gens) labels.push_back(group.label(g));
        report.pass("generating-set", std::to_string(gens.size()) + " distinct non-identity generators generate G",
                    {{"generators", labels}}, millis(start));
      }
    }
  }

  std::optional<Context> context;
  if (validated) context.emplace(*validated, options);
  for (const auto& check : registry()) {
    if (!selected(check.name)) continue;
    if (!validated) {
      report.skip(check.name, "generating set invalid");
      continue;
    }
    if (options.skip.count(check.name)) {
      report.skip(check.name, "skipped by request");
      continue;
    }
    if (check.needs_gadgets && !context->has_gadgets()) {
      report.skip(check.name, "gadget mode none builds no rigid space");
      continue;
    }
    auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = check.run(*context);
    } catch (const std::exception& e) {
      outcome = fail(std::string("check raised an error: ") + e.what(), {{"error", e.what()}});
    }
    report.add({check.name, outcome.status, outcome.detail, outcome.witness, millis(start)});
  }
  return report;
}

}  // namespace fintop
