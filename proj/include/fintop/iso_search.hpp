#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fintop/poset.hpp"

namespace fintop {

struct IsoSearchOptions {
  /// Backtrack nodes allowed before BudgetExceeded is thrown.
  std::uint64_t node_budget = 1'000'000;
  /// Optional initial colours, one per point of each side. Isomorphisms must
  /// preserve them. Used to inject label information such as levels.
  std::optional<std::vector<int>> source_colors;
  std::optional<std::vector<int>> target_colors;
  /// Branch on this source point first and accept at most one completion per
  /// choice of its image. Only sound when an isomorphism is known to be
  /// determined by the image of this point.
  std::optional<PointIndex> anchor;
  bool first_only = false;
};

struct IsoSearchResult {
  /// Image vectors (source index -> target index), sorted lexicographically.
  std::vector<std::vector<PointIndex>> maps;
  std::uint64_t nodes = 0;
};

/// All order isomorphisms source -> target (or the first one found).
///
/// Colour refinement on the Hasse digraph of the disjoint union (initial
/// colours from down/up-set sizes and cover degrees, then iterated multisets
/// of cover colours) followed by individualisation with smallest-cell-first
/// branching. Every leaf is verified against the covering relation.
IsoSearchResult find_isomorphisms(const FinitePoset& source, const FinitePoset& target,
                                  const IsoSearchOptions& options = {});

}  // namespace fintop
