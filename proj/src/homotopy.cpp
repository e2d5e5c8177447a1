#include "fintop/homotopy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "fintop/iso_search.hpp"

namespace fintop {

CoreResult core(const FinitePoset& poset, RemovalOrder order) {
  CoreResult result{poset, {}};
  while (true) {
    auto beats = beat_points(result.core);
    if (beats.empty()) break;
    auto x = order == RemovalOrder::LowestIndexFirst ? beats.front().point : beats.back().point;
    result.trace.push_back(result.core.label(x));
    result.core = result.core.without_point(x);
  }
  return result;
}

AutomorphismGroup::AutomorphismGroup(FinitePoset space, std::vector<PosetMap> elements)
    : space_(std::move(space)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [](const PosetMap& a, const PosetMap& b) { return a.images() < b.images(); });
  for (const auto& f : elements_) {
    if (!f.source().same_as(space_) && !(f.source() == space_)) {
      throw InvalidArgument("automorphism acts on a different space");
    }
  }
  const std::size_t m = elements_.size();
  table_.assign(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto k = index_of(elements_[i].after(elements_[j]));
      if (!k) throw InvalidStructure("automorphism list is not closed under composition");
      table_[i][j] = *k;
    }
  }
}

std::optional<std::size_t> AutomorphismGroup::index_of(const PosetMap& map) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), map.images(),
                             [](const PosetMap& a, const std::vector<PointIndex>& b) { return a.images() < b; });
  if (it == elements_.end() || it->images() != map.images()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

FiniteGroup AutomorphismGroup::as_group() const {
  auto identity = index_of(PosetMap::identity(space_));
  if (!identity) throw InvalidStructure("automorphism list lacks the identity");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < order(); ++i) labels.push_back("f" + std::to_string(i));
  return FiniteGroup(table_, *identity, std::move(labels));
}

AutomorphismGroup automorphism_group(const FinitePoset& poset, const AutomorphismOptions& options) {
  IsoSearchOptions search;
  search.node_budget = options.node_budget;
  search.anchor = options.anchor;
  if (options.use_level_hints) {
    std::vector<int> colors(poset.size(), 0);
    for (PointIndex x = 0; x < poset.size(); ++x) {
      if (auto level = base_level(poset.label(x))) colors[x] = *level + 2;
    }
    search.source_colors = colors;
    search.target_colors = colors;
  }
  auto found = find_isomorphisms(poset, poset, search);
  std::vector<PosetMap> elements;
  elements.reserve(found.maps.size());
  for (auto& images : found.maps) elements.emplace_back(poset, poset, std::move(images));
  return AutomorphismGroup(poset, std::move(elements));
}

PosetMap natural_extension(const PosetMap& base_automorphism, const FinitePoset& full_space) {
  const auto& base = base_automorphism.source();
  std::vector<PointIndex> images(full_space.size());
  for (PointIndex x = 0; x < full_space.size(); ++x) {
    const auto& label = full_space.label(x);
    PointLabel moved = label;
    if (auto anchor = anchor_of(label)) {
      auto in_base = base.find(*anchor);
      if (!in_base) throw InvalidArgument("anchor " + to_id(*anchor) + " missing from the base space");
      const auto& image = base.label(base_automorphism(*in_base));
      auto image_base = std::get_if<BasePoint>(&image);
      if (!image_base) throw InvalidArgument("base automorphism leaves the Base points");
      moved = with_anchor(label, *image_base);
    } else if (!std::holds_alternative<Star>(label)) {
      throw InvalidArgument("point " + to_id(label) + " has no anchor to transport");
    }
    auto y = full_space.find(moved);
    if (!y) throw InvalidArgument("extension image " + to_id(moved) + " missing from the space");
    images[x] = *y;
  }
  return PosetMap(full_space, full_space, std::move(images));
}

PosetMap restrict_to_base(const PosetMap& full_automorphism, const FinitePoset& base_space) {
  const auto& full = full_automorphism.source();
  std::vector<PointIndex> images(base_space.size());
  for (PointIndex x = 0; x < base_space.size(); ++x) {
    auto in_full = full.find(base_space.label(x));
    if (!in_full) throw InvalidArgument("base point " + base_space.id(x) + " missing from the full space");
    auto y = base_space.find(full.label(full_automorphism(*in_full)));
    if (!y) {
      throw InvalidArgument("base point " + base_space.id(x) + " is sent outside the base, to " +
                            full.id(full_automorphism(*in_full)));
    }
    images[x] = *y;
  }
  return PosetMap(base_space, base_space, std::move(images));
}

VerificationReport extension_isomorphism_check(const AutomorphismGroup& base_aut,
                                               const AutomorphismGroup& full_aut) {
  VerificationReport report;
  const auto& base = base_aut.space();
  const auto& full = full_aut.space();

  // (i) Base points go to Base points.
  nlohmann::json leaks = nlohmann::json::array();
  for (std::size_t i = 0; i < full_aut.order(); ++i) {
    const auto& f = full_aut.elements()[i];
    for (PointIndex x = 0; x < full.size(); ++x) {
      if (!base.find(full.label(x))) continue;
      if (!base.find(full.label(f(x)))) {
        leaks.push_back({{"automorphism", i}, {"point", full.id(x)}, {"image", full.id(f(x))}});
        break;
      }
    }
  }
  bool preserves = leaks.empty();
  if (preserves) {
    report.pass("extension.preserves-base",
                "all " + std::to_string(full_aut.order()) + " automorphisms of the full space map X_G onto X_G");
  } else {
    report.fail("extension.preserves-base", "some automorphism moves a Base point off the base", leaks);
  }

  // (ii) Restriction is a bijection full_aut -> base_aut.
  if (!preserves) {
    report.skip("extension.restriction-bijective", "restriction undefined");
  } else {
    nlohmann::json problems = nlohmann::json::array();
    std::vector<std::size_t> hits(base_aut.order(), 0);
    for (std::size_t i = 0; i < full_aut.order(); ++i) {
      auto restricted = restrict_to_base(full_aut.elements()[i], base);
      auto j = base_aut.index_of(restricted);
      if (!j) {
        problems.push_back({{"automorphism", i}, {"reason", "restriction is not an automorphism of X_G"}});
      } else {
        ++hits[*j];
      }
    }
    for (std::size_t j = 0; j < hits.size(); ++j) {
      if (hits[j] != 1) {
        problems.push_back({{"base_automorphism", j}, {"preimages", hits[j]}});
      }
    }
    if (problems.empty()) {
      report.pass("extension.restriction-bijective",
                  "restriction is a bijection between groups of order " + std::to_string(base_aut.order()));
    } else {
      report.fail("extension.restriction-bijective",
                  "restriction is not a bijection (|full|=" + std::to_string(full_aut.order()) +
                      ", |base|=" + std::to_string(base_aut.order()) + ")",
                  problems);
    }
  }

  // (iii) Natural extension inverts restriction.
  nlohmann::json problems = nlohmann::json::array();
  for (std::size_t j = 0; j < base_aut.order(); ++j) {
    try {
      auto extended = natural_extension(base_aut.elements()[j], full);
      if (!full_aut.index_of(extended)) {
        problems.push_back({{"base_automorphism", j}, {"reason", "extension is not an automorphism of the full space"}});
      } else if (!(restrict_to_base(extended, base) == base_aut.elements()[j])) {
        problems.push_back({{"base_automorphism", j}, {"reason", "restriction of extension differs"}});
      }
    } catch (const Error& e) {
      problems.push_back({{"base_automorphism", j}, {"reason", e.what()}});
    }
  }
  if (problems.empty()) {
    report.pass("extension.extension-inverts", "natural extension is a two-sided inverse of restriction");
  } else {
    report.fail("extension.extension-inverts", "natural extension fails for some automorphism", problems);
  }
  return report;
}

std::vector<PosetMap> enumerate_continuous_selfmaps(const FinitePoset& poset, const EnumerationOptions& options) {
  const std::size_t n = poset.size();
  if (n > options.max_points) {
    throw SizeLimitExceeded("self-map enumeration limited to " + std::to_string(options.max_points) +
                            " points; poset has " + std::to_string(n));
  }
  const auto& order = poset.linear_extension();
  std::vector<PointIndex> images(n, 0);
  std::vector<std::vector<PointIndex>> found;
  std::uint64_t nodes = 0;

  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (++nodes > options.node_budget) {
      throw BudgetExceeded("self-map enumeration exceeded node budget of " + std::to_string(options.node_budget));
    }
    if (depth == n) {
      found.push_back(images);
      return;
    }
    auto x = order[depth];
    // Lower covers precede x in a linear extension, so their images are fixed.
    Bitset candidates(n);
    candidates.set();
    for (auto z : poset.lower_covers(x)) candidates &= poset.up_set(images[z]);
    for (auto y = candidates.find_first(); y != Bitset::npos; y = candidates.find_next(y)) {
      images[x] = y;
      extend(depth + 1);
    }
  };
  extend(0);

  std::sort(found.begin(), found.end());
  std::vector<PosetMap> maps;
  maps.reserve(found.size());
  for (auto& f : found) maps.emplace_back(poset, poset, std::move(f));
  return maps;
}

namespace {

bool pointwise_leq(const FinitePoset& p, const PosetMap& f, const PosetMap& g) {
  for (PointIndex x = 0; x < p.size(); ++x) {
    if (!p.leq(f(x), g(x))) return false;
  }
  return true;
}

}  // namespace

FiniteGroup HomotopyClassification::equivalence_group() const {
  std::vector<std::string> labels;
  for (auto c : equivalence_classes) labels.push_back("[" + std::to_string(classes[c].front()) + "]");
  return FiniteGroup(equivalence_table, identity_position, std::move(labels));
}

HomotopyClassification homotopy_classes(std::vector<PosetMap> maps) {
  if (maps.empty()) throw InvalidArgument("no maps to classify");
  const FinitePoset space = maps.front().source();
  for (const auto& f : maps) {
    bool same_source = f.source().same_as(space) || f.source() == space;
    bool same_target = f.target().same_as(space) || f.target() == space;
    if (!same_source || !same_target) throw InvalidArgument("maps must all be self-maps of one space");
  }
  const std::size_t m = maps.size();
  std::map<std::vector<PointIndex>, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(maps[i].images(), i);

  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = root(parent[i]);
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (root(i) == root(j)) continue;
      if (pointwise_leq(space, maps[i], maps[j]) || pointwise_leq(space, maps[j], maps[i])) {
        parent[std::max(root(i), root(j))] = std::min(root(i), root(j));
      }
    }
  }

  HomotopyClassification out;
  out.class_of.assign(m, 0);
  std::map<std::size_t, std::size_t> class_index;
  for (std::size_t i = 0; i < m; ++i) {
    auto [it, inserted] = class_index.emplace(root(i), out.classes.size());
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(i);
    out.class_of[i] = it->second;
  }

  auto id_it = index.find(PosetMap::identity(space).images());
  if (id_it == index.end()) throw InvalidArgument("map list must contain the identity");
  const std::size_t id_class = out.class_of[id_it->second];

  // Homotopy is compatible with composition, so representatives suffice.
  const std::size_t k = out.classes.size();
  auto compose = [&](std::size_t c, std::size_t d) -> std::optional<std::size_t> {
    auto composite = maps[out.classes[c].front()].after(maps[out.classes[d].front()]);
    auto it = index.find(composite.images());
    if (it == index.end()) return std::nullopt;
    return out.class_of[it->second];
  };
  std::vector<std::vector<std::optional<std::size_t>>> table(k, std::vector<std::optional<std::size_t>>(k));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) table[c][d] = compose(c, d);
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      if (table[c][d] == id_class && table[d][c] == id_class) {
        out.equivalence_classes.push_back(c);
        break;
      }
    }
  }
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < out.equivalence_classes.size(); ++i) position[out.equivalence_classes[i]] = i;
  out.identity_position = position.at(id_class);
  out.equivalence_table.assign(out.equivalence_classes.size(),
                               std::vector<std::size_t>(out.equivalence_classes.size()));
  for (std::size_t i = 0; i < out.equivalence_classes.size(); ++i) {
    for (std::size_t j = 0; j < out.equivalence_classes.size(); ++j) {
      auto c = table[out.equivalence_classes[i]][out.equivalence_classes[j]];
      out.equivalence_table[i][j] = position.at(*c);
    }
  }
  out.maps = std::move(maps);
  return out;
}

std::vector<PosetMap> comparative_retractions(const FinitePoset& poset, const EnumerationOptions& options) {
  const std::size_t n = poset.size();
  if (n > options.max_points) {
    throw SizeLimitExceeded("comparative retraction search limited to " + std::to_string(options.max_points) +
                            " points; poset has " + std::to_string(n));
  }
  constexpr PointIndex unset = static_cast<PointIndex>(-1);
  const auto& order = poset.linear_extension();
  std::vector<PointIndex> r(n, unset);
  // pinned[y] > 0: some assigned point maps to y, so r(y) must be y.
  std::vector<std::size_t> pinned(n, 0);
  std::vector<std::vector<PointIndex>> found;
  std::uint64_t nodes = 0;

  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (++nodes > options.node_budget) {
      throw BudgetExceeded("comparative retraction search exceeded node budget of " +
                           std::to_string(options.node_budget));
    }
    if (depth == n) {
      found.push_back(r);
      return;
    }
    auto x = order[depth];
    Bitset candidates = poset.down_set(x) | poset.up_set(x);
    for (auto z : poset.lower_covers(x)) candidates &= poset.up_set(r[z]);
    if (pinned[x] > 0) {
      bool keep = candidates.test(x);
      candidates.reset();
      if (keep) candidates.set(x);
    }
    for (auto y = candidates.find_first(); y != Bitset::npos; y = candidates.find_next(y)) {
      if (y != x && r[y] != unset && r[y] != y) continue;
      r[x] = y;
      if (y != x) ++pinned[y];
      extend(depth + 1);
      if (y != x) --pinned[y];
      r[x] = unset;
    }
  };
  extend(0);

  std::sort(found.begin(), found.end());
  std::vector<PosetMap> maps;
  for (auto& f : found) {
    PosetMap map(poset, poset, std::move(f));
    if (map.after(map) == map) maps.push_back(std::move(map));
  }
  return maps;
}

}  // namespace fintop
