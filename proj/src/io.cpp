#include "fintop/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fintop/errors.hpp"

namespace fintop {
namespace {

template <typename T>
T field(const nlohmann::json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

std::string quoted(const std::string& id) { return "\"" + id + "\""; }

}  // namespace

nlohmann::json poset_to_json(const FinitePoset& poset) {
  nlohmann::json hasse = nlohmann::json::array();
  for (const auto& e : poset.hasse_edges()) hasse.push_back({poset.id(e.lower), poset.id(e.upper)});
  return {{"points", poset.ids()}, {"hasse", std::move(hasse)}};
}

FinitePoset poset_from_json(const nlohmann::json& doc) {
  auto ids = field<std::vector<std::string>>(doc, "points");
  auto pairs = field<std::vector<std::pair<std::string, std::string>>>(doc, "hasse");
  std::vector<PointLabel> labels;
  std::map<std::string, PointIndex> index;
  for (const auto& id : ids) {
    labels.push_back(parse_id(id));
    if (!index.emplace(id, labels.size() - 1).second) throw ParseError("duplicate point id '" + id + "'");
  }
  std::vector<std::pair<PointIndex, PointIndex>> relations;
  for (const auto& [lo, hi] : pairs) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end()) {
      throw ParseError("hasse pair [" + lo + ", " + hi + "] names an unknown point");
    }
    relations.emplace_back(a->second, b->second);
  }
  FinitePoset poset = [&] {
    try {
      return FinitePoset::from_relations(std::move(labels), relations);
    } catch (const InvalidStructure& e) {
      throw ParseError(e.what());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }();
  std::set<std::pair<PointIndex, PointIndex>> distinct(relations.begin(), relations.end());
  if (distinct.size() != relations.size()) throw ParseError("hasse list repeats a pair");
  for (const auto& [a, b] : relations) {
    if (!poset.is_cover(a, b)) throw ParseError("pair [" + ids[a] + ", " + ids[b] + "] is not a covering pair");
  }
  return poset;
}

std::string poset_to_text(const FinitePoset& poset) { return poset_to_json(poset).dump(2) + "\n"; }

FinitePoset poset_from_text(const std::string& text) { return poset_from_json(parse_json(text)); }

nlohmann::json group_to_json(const FiniteGroup& group) {
  return {{"order", group.order()},
          {"identity", group.identity()},
          {"labels", group.labels()},
          {"cayley", group.cayley()}};
}

FiniteGroup group_from_json(const nlohmann::json& doc) {
  auto order = field<std::size_t>(doc, "order");
  auto identity = field<std::size_t>(doc, "identity");
  auto labels = field<std::vector<std::string>>(doc, "labels");
  auto cayley = field<std::vector<std::vector<std::size_t>>>(doc, "cayley");
  if (labels.size() != order || cayley.size() != order) {
    throw ParseError("group document: labels and cayley must have 'order' entries");
  }
  try {
    return FiniteGroup(std::move(cayley), identity, std::move(labels));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid group: ") + e.what());
  } catch (const InvalidStructure& e) {
    throw ParseError(std::string("invalid group: ") + e.what());
  }
}

nlohmann::json complex_to_json(const FinitePoset& poset, const SimplicialComplex& complex) {
  if (complex.vertex_count() != poset.size()) throw InvalidArgument("complex does not belong to this poset");
  auto doc = poset_to_json(poset);
  doc["dim_cap"] = complex.dim_cap();
  nlohmann::json by_dim = nlohmann::json::array();
  for (std::size_t k = 0; k <= complex.dim_cap(); ++k) by_dim.push_back(complex.simplices(k));
  doc["simplices"] = std::move(by_dim);
  return doc;
}

SimplicialComplex complex_from_json(const nlohmann::json& doc) {
  auto poset = poset_from_json(doc);
  auto cap = field<std::size_t>(doc, "dim_cap");
  auto simplices = field<std::vector<std::vector<Simplex>>>(doc, "simplices");
  if (cap == 0 || simplices.size() != cap + 1) throw ParseError("complex document: need dim_cap >= 1 and cap+1 simplex lists");
  for (std::size_t k = 0; k <= cap; ++k) {
    for (const auto& s : simplices[k]) {
      if (s.size() != k + 1) throw ParseError("simplex stored at the wrong dimension");
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= poset.size()) throw ParseError("simplex vertex out of range");
        if (i > 0 && !poset.less(s[i - 1], s[i])) throw ParseError("simplex is not a chain listed bottom to top");
      }
    }
  }
  SimplicialComplex complex(poset.size(), cap, std::move(simplices));
  for (std::size_t k = 1; k <= cap; ++k) {
    for (const auto& s : complex.simplices(k)) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        if (!complex.index_of(face)) throw ParseError("complex is not closed under faces");
      }
    }
  }
  return complex;
}

std::string export_dot(const FinitePoset& poset) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  std::map<int, std::vector<PointIndex>> levels;
  for (PointIndex x = 0; x < poset.size(); ++x) {
    out << "  " << quoted(poset.id(x)) << ";\n";
    if (std::holds_alternative<BasePoint>(poset.label(x))) levels[*base_level(poset.label(x))].push_back(x);
  }
  for (const auto& [level, points] : levels) {
    out << "  { rank=same;";
    for (auto x : points) out << ' ' << quoted(poset.id(x)) << ';';
    out << " }\n";
  }
  for (const auto& e : poset.hasse_edges()) {
    out << "  " << quoted(poset.id(e.lower)) << " -> " << quoted(poset.id(e.upper)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace fintop
