#include "fintop/iso_search.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "fintop/errors.hpp"

namespace fintop {
namespace {

// Vertices 0..n-1 belong to the source, n..2n-1 to the target.
class JointSearch {
 public:
  JointSearch(const FinitePoset& source, const FinitePoset& target, const IsoSearchOptions& options)
      : source_(source), target_(target), options_(options), n_(source.size()) {}

  IsoSearchResult run() {
    IsoSearchResult result;
    if (source_.size() != target_.size() ||
        source_.hasse_edges().size() != target_.hasse_edges().size()) {
      return result;
    }
    std::vector<int> colors = initial_colors();
    if (!refine(colors)) return result;
    search(colors, result, /*depth=*/0);
    std::sort(result.maps.begin(), result.maps.end());
    result.nodes = nodes_;
    return result;
  }

 private:
  const FinitePoset& side(std::size_t v) const { return v < n_ ? source_ : target_; }
  std::size_t local(std::size_t v) const { return v < n_ ? v : v - n_; }

  std::vector<int> initial_colors() const {
    using Key = std::tuple<int, std::size_t, std::size_t, std::size_t, std::size_t>;
    std::vector<Key> keys(2 * n_);
    for (std::size_t v = 0; v < 2 * n_; ++v) {
      const auto& p = side(v);
      auto x = local(v);
      int hint = 0;
      if (v < n_ && options_.source_colors) hint = (*options_.source_colors)[x];
      if (v >= n_ && options_.target_colors) hint = (*options_.target_colors)[x];
      keys[v] = {hint, p.down_set(x).count(), p.up_set(x).count(), p.lower_covers(x).size(),
                 p.upper_covers(x).size()};
    }
    return compress(keys);
  }

  template <class Key>
  static std::vector<int> compress(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v) {
      colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    }
    return colors;
  }

  static std::size_t distinct(const std::vector<int>& colors) {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  // Refines to the coarsest stable colouring; false if the two sides disagree
  // on some colour class size.
  bool refine(std::vector<int>& colors) const {
    std::size_t classes = distinct(colors);
    while (true) {
      using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
      std::vector<Key> keys(2 * n_);
      for (std::size_t v = 0; v < 2 * n_; ++v) {
        const auto& p = side(v);
        auto x = local(v);
        std::size_t offset = v < n_ ? 0 : n_;
        std::vector<int> below, above;
        for (auto y : p.lower_covers(x)) below.push_back(colors[y + offset]);
        for (auto y : p.upper_covers(x)) above.push_back(colors[y + offset]);
        std::sort(below.begin(), below.end());
        std::sort(above.begin(), above.end());
        keys[v] = {colors[v], std::move(below), std::move(above)};
      }
      auto next = compress(keys);
      std::size_t next_classes = distinct(next);
      colors = std::move(next);
      if (!balanced(colors)) return false;
      if (next_classes == classes) return true;
      classes = next_classes;
    }
  }

  bool balanced(const std::vector<int>& colors) const {
    std::map<int, long> diff;
    for (std::size_t v = 0; v < 2 * n_; ++v) diff[colors[v]] += v < n_ ? 1 : -1;
    return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second == 0; });
  }

  void tick() {
    if (++nodes_ > options_.node_budget) {
      throw BudgetExceeded("isomorphism search exceeded node budget of " +
                           std::to_string(options_.node_budget));
    }
  }

  bool verify(const std::vector<PointIndex>& images) const {
    for (const auto& e : source_.hasse_edges()) {
      if (!target_.is_cover(images[e.lower], images[e.upper])) return false;
    }
    // Bijective and covers map into covers with equal edge counts, so the
    // inverse also preserves covers.
    std::vector<char> hit(n_, 0);
    for (auto y : images) {
      if (hit[y]) return false;
      hit[y] = 1;
    }
    return true;
  }

  // Returns true when the caller should stop (first_only satisfied).
  bool search(std::vector<int>& colors, IsoSearchResult& result, int depth) {
    tick();
    std::map<int, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < 2 * n_; ++v) cells[colors[v]].push_back(v);

    // Branching cell: the anchor at the root, else the smallest non-singleton
    // cell (ties: lowest colour).
    std::optional<PointIndex> branch_point;
    bool anchored = false;
    if (depth == 0 && options_.anchor) {
      if (cells[colors[*options_.anchor]].size() > 2) {
        branch_point = *options_.anchor;
        anchored = true;
      } else {
        // Anchor image already forced: at most one completion exists.
        options_.first_only = true;
      }
    }
    if (!branch_point) {
      std::size_t best = 0;
      for (const auto& [color, members] : cells) {
        std::size_t count = members.size() / 2;
        if (count > 1 && (best == 0 || count < best)) {
          best = count;
          branch_point = members.front();
        }
      }
    }
    if (!branch_point) {
      std::vector<PointIndex> images(n_);
      for (const auto& [color, members] : cells) images[members[0]] = members[1] - n_;
      if (verify(images)) {
        result.maps.push_back(std::move(images));
        return options_.first_only;
      }
      return false;
    }

    int fresh = static_cast<int>(2 * n_) + 1;
    int cell_color = colors[*branch_point];
    for (std::size_t w = n_; w < 2 * n_; ++w) {
      if (colors[w] != cell_color) continue;
      std::vector<int> child = colors;
      child[*branch_point] = fresh;
      child[w] = fresh;
      if (!refine(child)) continue;
      if (anchored) {
        bool caller_first_only = options_.first_only;
        std::size_t before = result.maps.size();
        options_.first_only = true;
        search(child, result, depth + 1);
        options_.first_only = caller_first_only;
        if (caller_first_only && result.maps.size() > before) return true;
        continue;
      }
      if (search(child, result, depth + 1)) return true;
    }
    return false;
  }

  const FinitePoset& source_;
  const FinitePoset& target_;
  IsoSearchOptions options_;
  std::size_t n_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

IsoSearchResult find_isomorphisms(const FinitePoset& source, const FinitePoset& target,
                                  const IsoSearchOptions& options) {
  if (options.source_colors && options.source_colors->size() != source.size()) {
    throw InvalidArgument("source colour vector has wrong length");
  }
  if (options.target_colors && options.target_colors->size() != target.size()) {
    throw InvalidArgument("target colour vector has wrong length");
  }
  if (options.anchor && *options.anchor >= source.size()) {
    throw InvalidArgument("anchor point out of range");
  }
  return JointSearch(source, target, options).run();
}

}  // namespace fintop
