#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fintop/construction.hpp"
#include "fintop/homotopy.hpp"
#include "fintop/io.hpp"
#include "fintop/mccord.hpp"
#include "fintop/verify.hpp"

namespace py = pybind11;
using namespace fintop;

namespace {

struct Group {
  FiniteGroup group;
  std::string family;
};

Group make_group(const std::string& spec) {
  return {builtin_group_from_spec(spec), spec.substr(0, spec.find(':'))};
}

std::vector<Element> generators(const Group& g, const std::optional<std::vector<std::string>>& labels) {
  if (labels) return resolve_labels(g.group, *labels);
  if (g.family.empty()) throw InvalidArgument("a group loaded from a table needs explicit generators");
  return standard_generators(g.family, g.group);
}

ConstructionSpec make_spec(const Group& g, const std::optional<std::vector<std::string>>& gens,
                           const std::string& mode, bool pointed) {
  ConstructionSpec spec{validate_generating_set(g.group, generators(g, gens))};
  parse_mode(mode, spec.mode, spec.t_length);
  spec.pointed = pointed;
  return spec;
}

std::vector<std::pair<std::string, std::string>> edge_ids(const FinitePoset& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : p.hasse_edges()) out.emplace_back(p.id(e.lower), p.id(e.upper));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "FintopError", PyExc_RuntimeError);

  py::class_<Group>(m, "Group")
      .def_property_readonly("order", [](const Group& g) { return g.group.order(); })
      .def_property_readonly("labels", [](const Group& g) { return g.group.labels(); })
      .def("to_json", [](const Group& g) { return group_to_json(g.group).dump(); });
  m.def("group", &make_group, py::arg("spec"));
  m.def("group_from_json", [](const std::string& text) { return Group{group_from_json(parse_json(text)), ""}; });

  py::class_<FinitePoset>(m, "Space")
      .def("__len__", &FinitePoset::size)
      .def_property_readonly("ids", &FinitePoset::ids)
      .def_property_readonly("hasse_edges", &edge_ids)
      .def("leq", [](const FinitePoset& p, const std::string& a, const std::string& b) {
        auto x = p.find(parse_id(a));
        auto y = p.find(parse_id(b));
        if (!x || !y) throw InvalidArgument("unknown point id");
        return p.leq(*x, *y);
      })
      .def("beat_points", [](const FinitePoset& p) {
        std::vector<std::string> out;
        for (const auto& b : beat_points(p)) out.push_back(p.id(b.point));
        return out;
      })
      .def("component_count", [](const FinitePoset& p) { return component_count(p); })
      .def("to_json", [](const FinitePoset& p) { return poset_to_text(p); })
      .def("to_dot", [](const FinitePoset& p) { return export_dot(p); });
  m.def("space_from_json", &poset_from_text);

  m.def("build_space",
        [](const Group& g, std::optional<std::vector<std::string>> gens, const std::string& mode, bool pointed) {
          return build_space(make_spec(g, gens, mode, pointed));
        },
        py::arg("group"), py::arg("gens") = py::none(), py::arg("mode") = "sandt:1", py::arg("pointed") = false);
  m.def("build_base",
        [](const Group& g, std::optional<std::vector<std::string>> gens) {
          return build_base(make_spec(g, gens, "none", false));
        },
        py::arg("group"), py::arg("gens") = py::none());

  m.def("automorphisms", [](const FinitePoset& p, std::uint64_t budget) {
        AutomorphismOptions options;
        options.node_budget = budget;
        std::vector<std::vector<PointIndex>> out;
        auto group = automorphism_group(p, options);
        for (const auto& f : group.elements()) out.push_back(f.images());
        return out;
      },
      py::arg("space"), py::arg("budget") = 1'000'000);
  m.def("core", [](const FinitePoset& p) {
    auto c = core(p);
    std::vector<std::string> trace;
    for (const auto& l : c.trace) trace.push_back(to_id(l));
    return py::make_tuple(c.core, trace);
  });
  m.def("homology", [](const FinitePoset& p, std::size_t cap) {
        ChainComplex chains(order_complex(p, cap));
        py::list out;
        for (std::size_t k = 0; k < cap; ++k) {
          auto h = homology(chains, k);
          std::vector<std::string> torsion;
          for (const auto& t : h.torsion) torsion.push_back(t.str());
          out.append(py::make_tuple(h.betti, torsion));
        }
        return out;
      },
      py::arg("space"), py::arg("cap") = 2);
  m.def("expected_b1", [](const std::string& mode, std::size_t order, std::size_t rank) {
    GadgetMode parsed{};
    int t = 1;
    parse_mode(mode, parsed, t);
    return expected_b1(parsed, order, rank);
  });

  m.def("check_names", &check_names);
  m.def("verify_all",
        [](const Group& g, std::optional<std::vector<std::string>> gens, const std::string& mode,
           std::vector<int> family_range, std::set<std::string> skip, std::optional<std::string> only) {
          VerifyOptions options;
          parse_mode(mode, options.mode, options.t_length);
          options.family_range = std::move(family_range);
          options.skip = std::move(skip);
          options.only = std::move(only);
          return verify_all(g.group, generators(g, gens), options).to_json(false).dump();
        },
        py::arg("group"), py::arg("gens") = py::none(), py::arg("mode") = "sandt:1",
        py::arg("family_range") = std::vector<int>{1, 2, 3}, py::arg("skip") = std::set<std::string>{},
        py::arg("only") = py::none());
}
