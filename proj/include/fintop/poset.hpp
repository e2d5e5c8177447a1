#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fintop/label.hpp"

namespace fintop {

using PointIndex = std::size_t;
using Bitset = boost::dynamic_bitset<>;

/// A covering pair lower < upper.
struct HasseEdge {
  PointIndex lower = 0;
  PointIndex upper = 0;

  auto operator<=>(const HasseEdge&) const = default;
};

/// Immutable finite partial order.
///
/// The Hasse edges are the ground truth; the reflexive-transitive closure is
/// materialised as per-point down-set and up-set bitsets when the value is
/// built, so `leq` is a single bit test. Copies share the underlying storage.
class FinitePoset {
 public:
  /// The empty poset.
  FinitePoset();

  /// Builds the partial order generated by `relations` (pairs lower < upper,
  /// in any redundant form). Throws InvalidStructure if the relations contain
  /// a cycle or a reflexive pair, or if two labels coincide.
  static FinitePoset from_relations(std::vector<PointLabel> points,
                                    std::span<const std::pair<PointIndex, PointIndex>> relations);

  static FinitePoset from_relations(std::vector<PointLabel> points,
                                    const std::vector<std::pair<PointIndex, PointIndex>>& relations) {
    return from_relations(std::move(points), std::span(relations));
  }

  std::size_t size() const { return impl_->labels.size(); }
  bool empty() const { return size() == 0; }

  const PointLabel& label(PointIndex x) const { return impl_->labels.at(x); }
  const std::vector<PointLabel>& labels() const { return impl_->labels; }
  const std::string& id(PointIndex x) const { return impl_->ids.at(x); }
  const std::vector<std::string>& ids() const { return impl_->ids; }
  std::optional<PointIndex> find(const PointLabel& label) const;
  std::optional<PointIndex> find_id(const std::string& id) const;

  bool leq(PointIndex a, PointIndex b) const { return impl_->down[b].test(a); }
  bool less(PointIndex a, PointIndex b) const { return a != b && leq(a, b); }
  bool comparable(PointIndex a, PointIndex b) const { return leq(a, b) || leq(b, a); }

  /// {y : y <= x}, including x.
  const Bitset& down_set(PointIndex x) const { return impl_->down.at(x); }
  /// {y : y >= x}, including x.
  const Bitset& up_set(PointIndex x) const { return impl_->up.at(x); }

  /// Sorted by (lower, upper).
  const std::vector<HasseEdge>& hasse_edges() const { return impl_->hasse; }
  /// Points covering x, ascending.
  const std::vector<PointIndex>& upper_covers(PointIndex x) const { return impl_->upper_covers.at(x); }
  /// Points covered by x, ascending.
  const std::vector<PointIndex>& lower_covers(PointIndex x) const { return impl_->lower_covers.at(x); }
  bool is_cover(PointIndex lower, PointIndex upper) const;

  /// A linear extension: every point appears after all points below it. Ties by index.
  const std::vector<PointIndex>& linear_extension() const { return impl_->linear_extension; }

  /// Subposet on `keep` (kept in the given order) with the induced order.
  FinitePoset induced(std::span<const PointIndex> keep) const;
  /// Subposet obtained by deleting one point.
  FinitePoset without_point(PointIndex x) const;
  /// The poset generated by the Hasse diagram minus one edge.
  FinitePoset without_hasse_edge(const HasseEdge& edge) const;
  /// Relabels points by a permutation: point i of the result is point perm[i] of this poset.
  FinitePoset permuted(std::span<const PointIndex> perm) const;

  bool same_as(const FinitePoset& other) const { return impl_ == other.impl_; }
  /// Identical labels in identical order and identical Hasse edges.
  bool operator==(const FinitePoset& other) const;

 private:
  struct Impl {
    std::vector<PointLabel> labels;
    std::vector<std::string> ids;
    std::vector<Bitset> down;
    std::vector<Bitset> up;
    std::vector<HasseEdge> hasse;
    std::vector<std::vector<PointIndex>> upper_covers;
    std::vector<std::vector<PointIndex>> lower_covers;
    std::vector<PointIndex> linear_extension;
  };
  explicit FinitePoset(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Total function between two posets.
class PosetMap {
 public:
  PosetMap(FinitePoset source, FinitePoset target, std::vector<PointIndex> images);

  static PosetMap identity(const FinitePoset& space);

  const FinitePoset& source() const { return source_; }
  const FinitePoset& target() const { return target_; }
  const std::vector<PointIndex>& images() const { return images_; }
  PointIndex operator()(PointIndex x) const { return images_[x]; }

  /// x <= y implies f(x) <= f(y). Equivalent to continuity.
  bool is_order_preserving() const;
  bool is_bijective() const;
  bool is_surjective() const;
  /// Bijective, and order-preserving in both directions.
  bool is_isomorphism() const;

  /// this o inner (apply inner first).
  PosetMap after(const PosetMap& inner) const;
  /// Inverse of a bijection. Throws InvalidArgument otherwise.
  PosetMap inverse() const;

  bool operator==(const PosetMap& other) const { return images_ == other.images_; }

 private:
  FinitePoset source_;
  FinitePoset target_;
  std::vector<PointIndex> images_;
};

/// U_x = {y : y <= x}, ascending. Throws InvalidArgument for a bad index.
std::vector<PointIndex> minimal_open_set(const FinitePoset& poset, PointIndex x);

enum class BeatKind { Up, Down };

struct BeatPoint {
  PointIndex point = 0;
  BeatKind kind = BeatKind::Up;

  bool operator==(const BeatPoint&) const = default;
};

/// All beat points, ascending by index; a point that is both up and down beat
/// is reported twice (Up first).
std::vector<BeatPoint> beat_points(const FinitePoset& poset);

/// Connected components of the comparability graph, as a component id per
/// point (ids assigned in order of smallest member).
std::vector<std::size_t> component_ids(const FinitePoset& poset);
std::size_t component_count(const FinitePoset& poset);

/// True iff the comparability graph is connected. The empty poset counts as connected.
bool is_path_connected(const FinitePoset& poset);

/// An order isomorphism P -> Q, if one exists.
std::optional<PosetMap> are_isomorphic(const FinitePoset& p, const FinitePoset& q,
                                       std::uint64_t node_budget = 1'000'000);

}  // namespace fintop
