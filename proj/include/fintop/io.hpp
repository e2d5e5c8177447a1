#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "fintop/group.hpp"
#include "fintop/mccord.hpp"
#include "fintop/poset.hpp"

namespace fintop {

/// {"points": [id, ...], "hasse": [[lower_id, upper_id], ...]}
nlohmann::json poset_to_json(const FinitePoset& poset);
/// Rejects unknown or duplicate ids, cycles, and pairs that are not covers,
/// so parse followed by serialize reproduces the input document.
FinitePoset poset_from_json(const nlohmann::json& doc);

std::string poset_to_text(const FinitePoset& poset);
FinitePoset poset_from_text(const std::string& text);

/// {"order", "identity", "labels", "cayley"}
nlohmann::json group_to_json(const FiniteGroup& group);
FiniteGroup group_from_json(const nlohmann::json& doc);

/// {"points": [...], "hasse": [...], "dim_cap": k, "simplices": [[[v, ...], ...], ...]}
/// Vertices are point indices into "points".
nlohmann::json complex_to_json(const FinitePoset& poset, const SimplicialComplex& complex);
/// Checks that every stored simplex is a chain and that every face is stored.
SimplicialComplex complex_from_json(const nlohmann::json& doc);

/// Hasse diagram as a DOT digraph drawn bottom to top. Base points of one
/// level share a rank.
std::string export_dot(const FinitePoset& poset);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
nlohmann::json parse_json(const std::string& text);

}  // namespace fintop
