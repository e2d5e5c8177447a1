#include "fintop/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "fintop/errors.hpp"
#include "fintop/iso_search.hpp"

namespace fintop {

FinitePoset::FinitePoset() : impl_(std::make_shared<Impl>()) {}

FinitePoset FinitePoset::from_relations(std::vector<PointLabel> points,
                                        std::span<const std::pair<PointIndex, PointIndex>> relations) {
  const std::size_t n = points.size();
  auto impl = std::make_shared<Impl>();
  impl->ids.reserve(n);
  {
    std::set<std::string> seen;
    for (const auto& p : points) {
      auto id = to_id(p);
      if (!seen.insert(id).second) throw InvalidStructure("duplicate point label '" + id + "'");
      impl->ids.push_back(std::move(id));
    }
  }

  std::vector<std::vector<PointIndex>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [lo, hi] : relations) {
    if (lo >= n || hi >= n) throw InvalidArgument("relation endpoint out of range");
    if (lo == hi) throw InvalidStructure("reflexive pair in strict relation: " + impl->ids[lo]);
    succ[lo].push_back(hi);
    ++indegree[hi];
  }

  // Kahn's algorithm with a min-heap gives the index-tie-broken linear extension.
  std::priority_queue<PointIndex, std::vector<PointIndex>, std::greater<>> ready;
  for (PointIndex x = 0; x < n; ++x) {
    if (indegree[x] == 0) ready.push(x);
  }
  std::vector<PointIndex> order;
  order.reserve(n);
  while (!ready.empty()) {
    auto x = ready.top();
    ready.pop();
    order.push_back(x);
    for (auto y : succ[x]) {
      if (--indegree[y] == 0) ready.push(y);
    }
  }
  if (order.size() != n) throw InvalidStructure("relations contain a cycle; not a partial order");

  impl->down.assign(n, Bitset(n));
  impl->up.assign(n, Bitset(n));
  for (auto x : order) impl->down[x].set(x);
  for (auto x : order) {
    for (auto y : succ[x]) impl->down[y] |= impl->down[x];
  }
  for (PointIndex x = 0; x < n; ++x) {
    for (auto y = impl->down[x].find_first(); y != Bitset::npos; y = impl->down[x].find_next(y)) {
      impl->up[y].set(x);
    }
  }

  // a < b is a cover iff nothing lies strictly between.
  impl->upper_covers.assign(n, {});
  impl->lower_covers.assign(n, {});
  for (PointIndex a = 0; a < n; ++a) {
    Bitset strictly_above = impl->up[a];
    strictly_above.reset(a);
    for (auto b = strictly_above.find_first(); b != Bitset::npos; b = strictly_above.find_next(b)) {
      Bitset between = strictly_above & impl->down[b];
      between.reset(b);
      if (between.none()) {
        impl->hasse.push_back({a, b});
        impl->upper_covers[a].push_back(b);
        impl->lower_covers[b].push_back(a);
      }
    }
  }
  std::sort(impl->hasse.begin(), impl->hasse.end());
  for (auto& v : impl->lower_covers) std::sort(v.begin(), v.end());

  impl->linear_extension = std::move(order);
  impl->labels = std::move(points);
  return FinitePoset(std::move(impl));
}

std::optional<PointIndex> FinitePoset::find(const PointLabel& label) const {
  return find_id(to_id(label));
}

std::optional<PointIndex> FinitePoset::find_id(const std::string& id) const {
  auto it = std::find(impl_->ids.begin(), impl_->ids.end(), id);
  if (it == impl_->ids.end()) return std::nullopt;
  return static_cast<PointIndex>(it - impl_->ids.begin());
}

bool FinitePoset::is_cover(PointIndex lower, PointIndex upper) const {
  const auto& covers = impl_->upper_covers.at(lower);
  return std::find(covers.begin(), covers.end(), upper) != covers.end();
}

FinitePoset FinitePoset::induced(std::span<const PointIndex> keep) const {
  std::vector<PointLabel> labels;
  labels.reserve(keep.size());
  for (auto x : keep) labels.push_back(label(x));
  std::vector<std::pair<PointIndex, PointIndex>> relations;
  for (PointIndex i = 0; i < keep.size(); ++i) {
    for (PointIndex j = 0; j < keep.size(); ++j) {
      if (i != j && less(keep[i], keep[j])) relations.emplace_back(i, j);
    }
  }
  return from_relations(std::move(labels), relations);
}

FinitePoset FinitePoset::without_point(PointIndex x) const {
  std::vector<PointIndex> keep;
  for (PointIndex y = 0; y < size(); ++y) {
    if (y != x) keep.push_back(y);
  }
  return induced(keep);
}

FinitePoset FinitePoset::without_hasse_edge(const HasseEdge& edge) const {
  std::vector<std::pair<PointIndex, PointIndex>> relations;
  bool found = false;
  for (const auto& e : hasse_edges()) {
    if (e == edge) {
      found = true;
      continue;
    }
    relations.emplace_back(e.lower, e.upper);
  }
  if (!found) throw InvalidArgument("not a Hasse edge");
  return from_relations(labels(), relations);
}

FinitePoset FinitePoset::permuted(std::span<const PointIndex> perm) const {
  if (perm.size() != size()) throw InvalidArgument("permutation has wrong length");
  std::vector<PointIndex> position(size(), size());
  for (PointIndex i = 0; i < perm.size(); ++i) {
    if (perm[i] >= size() || position[perm[i]] != size()) throw InvalidArgument("not a permutation");
    position[perm[i]] = i;
  }
  std::vector<PointLabel> labels;
  for (auto x : perm) labels.push_back(label(x));
  std::vector<std::pair<PointIndex, PointIndex>> relations;
  for (const auto& e : hasse_edges()) relations.emplace_back(position[e.lower], position[e.upper]);
  return from_relations(std::move(labels), relations);
}

bool FinitePoset::operator==(const FinitePoset& other) const {
  return impl_->ids == other.impl_->ids && impl_->hasse == other.impl_->hasse;
}

PosetMap::PosetMap(FinitePoset source, FinitePoset target, std::vector<PointIndex> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size()) throw InvalidArgument("map needs one image per source point");
  for (auto y : images_) {
    if (y >= target_.size()) throw InvalidArgument("map image out of range");
  }
}

PosetMap PosetMap::identity(const FinitePoset& space) {
  std::vector<PointIndex> images(space.size());
  std::iota(images.begin(), images.end(), 0);
  return PosetMap(space, space, std::move(images));
}

bool PosetMap::is_order_preserving() const {
  // Checking covers suffices: the order is their reflexive-transitive closure.
  for (const auto& e : source_.hasse_edges()) {
    if (!target_.leq(images_[e.lower], images_[e.upper])) return false;
  }
  return true;
}

bool PosetMap::is_bijective() const {
  if (source_.size() != target_.size()) return false;
  return is_surjective();
}

bool PosetMap::is_surjective() const {
  std::vector<char> hit(target_.size(), 0);
  for (auto y : images_) hit[y] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool PosetMap::is_isomorphism() const {
  if (!is_bijective() || !is_order_preserving()) return false;
  return inverse().is_order_preserving();
}

PosetMap PosetMap::after(const PosetMap& inner) const {
  if (inner.target_.size() != source_.size()) throw InvalidArgument("maps are not composable");
  std::vector<PointIndex> images(inner.images_.size());
  for (PointIndex x = 0; x < images.size(); ++x) images[x] = images_[inner.images_[x]];
  return PosetMap(inner.source_, target_, std::move(images));
}

PosetMap PosetMap::inverse() const {
  if (!is_bijective()) throw InvalidArgument("only bijections have inverses");
  std::vector<PointIndex> images(images_.size());
  for (PointIndex x = 0; x < images_.size(); ++x) images[images_[x]] = x;
  return PosetMap(target_, source_, std::move(images));
}

std::vector<PointIndex> minimal_open_set(const FinitePoset& poset, PointIndex x) {
  if (x >= poset.size()) throw InvalidArgument("point index out of range");
  std::vector<PointIndex> out;
  const auto& down = poset.down_set(x);
  for (auto y = down.find_first(); y != Bitset::npos; y = down.find_next(y)) out.push_back(y);
  return out;
}

std::vector<BeatPoint> beat_points(const FinitePoset& poset) {
  // {z : z > x} has a unique minimal element iff x has exactly one upper
  // cover; dually for down beat points.
  std::vector<BeatPoint> out;
  for (PointIndex x = 0; x < poset.size(); ++x) {
    if (poset.upper_covers(x).size() == 1) out.push_back({x, BeatKind::Up});
    if (poset.lower_covers(x).size() == 1) out.push_back({x, BeatKind::Down});
  }
  return out;
}

std::vector<std::size_t> component_ids(const FinitePoset& poset) {
  const std::size_t n = poset.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> ids(n, unset);
  std::size_t next = 0;
  for (PointIndex start = 0; start < n; ++start) {
    if (ids[start] != unset) continue;
    std::vector<PointIndex> stack{start};
    ids[start] = next;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (const auto* neighbours : {&poset.upper_covers(x), &poset.lower_covers(x)}) {
        for (auto y : *neighbours) {
          if (ids[y] == unset) {
            ids[y] = next;
            stack.push_back(y);
          }
        }
      }
    }
    ++next;
  }
  return ids;
}

std::size_t component_count(const FinitePoset& poset) {
  auto ids = component_ids(poset);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

bool is_path_connected(const FinitePoset& poset) { return component_count(poset) <= 1; }

std::optional<PosetMap> are_isomorphic(const FinitePoset& p, const FinitePoset& q,
                                       std::uint64_t node_budget) {
  IsoSearchOptions options;
  options.node_budget = node_budget;
  options.first_only = true;
  auto result = find_isomorphisms(p, q, options);
  if (result.maps.empty()) return std::nullopt;
  return PosetMap(p, q, std::move(result.maps.front()));
}

}  // namespace fintop
