#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fintop/group.hpp"
#include "fintop/poset.hpp"
#include "fintop/report.hpp"

namespace fintop {

// ---------------------------------------------------------------------------
// Cores

enum class RemovalOrder { LowestIndexFirst, HighestIndexFirst };

struct CoreResult {
  FinitePoset core;
  /// Removed points, in removal order.
  std::vector<PointLabel> trace;
};

/// Removes beat points one at a time until none remain. The result is unique
/// up to isomorphism whatever the order; `order` only changes which beat
/// point goes first.
CoreResult core(const FinitePoset& poset, RemovalOrder order = RemovalOrder::LowestIndexFirst);

// ---------------------------------------------------------------------------
// Automorphisms

struct AutomorphismOptions {
  std::uint64_t node_budget = 1'000'000;
  /// Colour points by the level of their label (Base points) or their
  /// anchor's level (gadgets) before searching. Only valid for spaces where
  /// automorphisms are known to preserve levels.
  bool use_level_hints = false;
  /// Branch first on this point and stop after one completion per image.
  /// Valid for X_G with the point Base(e, -1), where an automorphism is
  /// determined by a single value.
  std::optional<PointIndex> anchor;
};

/// All self-isomorphisms of a poset with their composition table.
class AutomorphismGroup {
 public:
  AutomorphismGroup(FinitePoset space, std::vector<PosetMap> elements);

  const FinitePoset& space() const { return space_; }
  /// Sorted lexicographically by image tuple; the identity comes first.
  const std::vector<PosetMap>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  /// table()[i][j] is the index of elements[i] o elements[j].
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::optional<std::size_t> index_of(const PosetMap& map) const;

  /// The composition table as a FiniteGroup with labels "f0", "f1", ...
  FiniteGroup as_group() const;

 private:
  FinitePoset space_;
  std::vector<PosetMap> elements_;
  std::vector<std::vector<std::size_t>> table_;
};

/// Throws BudgetExceeded (with the budget in the message) when the search is too large.
AutomorphismGroup automorphism_group(const FinitePoset& poset, const AutomorphismOptions& options = {});

/// Restriction/extension between Aut(X_G) and Aut(X̄_G) for spaces built from
/// one spec. Checks that every automorphism of the full space maps Base
/// points onto Base points, that restriction is a bijection onto base_aut, and
/// that extending along anchors inverts it.
VerificationReport extension_isomorphism_check(const AutomorphismGroup& base_aut,
                                               const AutomorphismGroup& full_aut);

/// Extends an automorphism of the base space to the full space by moving each
/// gadget with its anchor. Throws InvalidArgument if some label has no image.
PosetMap natural_extension(const PosetMap& base_automorphism, const FinitePoset& full_space);

/// Restriction of a map of the full space to its Base points. Throws
/// InvalidArgument if some Base point leaves the base.
PosetMap restrict_to_base(const PosetMap& full_automorphism, const FinitePoset& base_space);

// ---------------------------------------------------------------------------
// Self-maps and homotopy classes

struct EnumerationOptions {
  std::size_t max_points = 8;
  std::uint64_t node_budget = 10'000'000;
};

/// All order-preserving self-maps, sorted lexicographically by image tuple.
/// Throws SizeLimitExceeded above max_points, BudgetExceeded past the budget.
std::vector<PosetMap> enumerate_continuous_selfmaps(const FinitePoset& poset,
                                                    const EnumerationOptions& options = {});

struct HomotopyClassification {
  std::vector<PosetMap> maps;
  /// Partition of map indices; classes sorted by their smallest member.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
  /// Indices into `classes` of the classes of homotopy equivalences, ascending.
  std::vector<std::size_t> equivalence_classes;
  /// Composition table of the equivalence classes (indices into equivalence_classes).
  std::vector<std::vector<std::size_t>> equivalence_table;
  /// Position of the identity's class in equivalence_classes.
  std::size_t identity_position = 0;

  FiniteGroup equivalence_group() const;
};

/// Classes are connected components of the graph joining pointwise
/// comparable maps. Throws InvalidArgument for an empty list or maps with
/// differing source/target.
HomotopyClassification homotopy_classes(std::vector<PosetMap> maps);

/// Retractions r (r o r = r) with r(x) comparable to x for every x.
/// Default guard is 64 points: the comparability restriction and idempotence
/// propagation keep the search far smaller than full self-map enumeration.
std::vector<PosetMap> comparative_retractions(const FinitePoset& poset,
                                              const EnumerationOptions& options = {64, 10'000'000});

}  // namespace fintop
