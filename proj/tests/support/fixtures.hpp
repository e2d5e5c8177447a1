#pragma once

#include <string>
#include <vector>

#include "fintop/construction.hpp"
#include "fintop/poset.hpp"

namespace fixture {

inline fintop::FinitePoset plain_poset(const std::vector<std::string>& names,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
  std::vector<fintop::PointLabel> labels;
  for (const auto& n : names) labels.push_back(fintop::Plain{n});
  return fintop::FinitePoset::from_relations(std::move(labels), relations);
}

inline fintop::FinitePoset chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i) rel.emplace_back(i - 1, i);
  }
  return plain_poset(names, rel);
}

// Five points a, b below c, d, e, with c below e.
inline fintop::FinitePoset five_point_space() {
  return plain_poset({"a", "b", "c", "d", "e"}, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}});
}

// Four-point circle: two minima below two maxima.
inline fintop::FinitePoset circle() { return plain_poset({"a", "b", "c", "d"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

struct ZooEntry {
  std::string name;
  std::string family;
  fintop::FiniteGroup group;
  std::vector<fintop::Element> gens;
};

inline std::vector<ZooEntry> zoo() {
  std::vector<ZooEntry> out;
  auto add = [&](std::string name, std::string family, std::string spec) {
    auto g = fintop::builtin_group_from_spec(spec);
    auto gens = fintop::standard_generators(family, g);
    out.push_back({std::move(name), std::move(family), std::move(g), std::move(gens)});
  };
  add("C2", "cyclic", "cyclic:2");
  add("C3", "cyclic", "cyclic:3");
  add("C4", "cyclic", "cyclic:4");
  add("C5", "cyclic", "cyclic:5");
  add("Klein4", "klein4", "klein4");
  add("S3", "symmetric", "symmetric:3");
  add("D4", "dihedral", "dihedral:4");
  add("Q8", "quaternion8", "quaternion8");
  return out;
}

inline fintop::ConstructionSpec spec_for(const ZooEntry& z, fintop::GadgetMode mode = fintop::GadgetMode::SAndT,
                                         int t = 1, bool pointed = false) {
  return fintop::ConstructionSpec{fintop::validate_generating_set(z.group, z.gens), mode, t, pointed};
}

inline fintop::ConstructionSpec c3_spec(fintop::GadgetMode mode = fintop::GadgetMode::SAndT, int t = 1,
                                        bool pointed = false) {
  auto g = fintop::builtin_group("cyclic", 3);
  return fintop::ConstructionSpec{fintop::validate_generating_set(g, {1}), mode, t, pointed};
}

}  // namespace fixture
