#include "fintop/construction.hpp"

#include <algorithm>

namespace fintop {
namespace {

using Relations = std::vector<std::pair<PointIndex, PointIndex>>;

PointIndex base_index(std::size_t element, int level, std::size_t rank) {
  return element * (rank + 2) + static_cast<std::size_t>(level + 1);
}

PointLabel t_letter(TnKind kind, int index, BasePoint anchor) {
  int offset = (kind == TnKind::Max ? 0 : 3) + index - 1;
  return GadgetT{static_cast<TKind>(offset), anchor};
}

}  // namespace

void parse_mode(const std::string& text, GadgetMode& mode, int& t_length) {
  if (text == "none") {
    mode = GadgetMode::None;
    t_length = 1;
    return;
  }
  if (text == "sonly") {
    mode = GadgetMode::SOnly;
    t_length = 1;
    return;
  }
  if (text == "sandt") {
    mode = GadgetMode::SAndT;
    t_length = 1;
    return;
  }
  if (text.rfind("sandt:", 0) == 0) {
    std::string arg = text.substr(6);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(arg, &used);
      if (used != arg.size()) n = 0;
    } catch (const std::logic_error&) {
      n = 0;
    }
    if (n < 1) throw InvalidArgument("T^n length must be a positive integer, got '" + arg + "'");
    mode = GadgetMode::SAndT;
    t_length = n;
    return;
  }
  throw InvalidArgument("unknown gadget mode '" + text + "' (expected none, sonly or sandt:N)");
}

std::string mode_name(GadgetMode mode, int t_length) {
  switch (mode) {
    case GadgetMode::None:
      return "none";
    case GadgetMode::SOnly:
      return "sonly";
    case GadgetMode::SAndT:
      return "sandt:" + std::to_string(t_length);
  }
  return "?";
}

std::size_t expected_base_size(std::size_t order, std::size_t rank) { return order * (rank + 2); }

std::size_t expected_size(const ConstructionSpec& spec) {
  const std::size_t n = spec.group().order();
  const std::size_t r = spec.rank();
  std::size_t per_anchor = 0;
  if (spec.mode == GadgetMode::SOnly) per_anchor = 4;
  if (spec.mode == GadgetMode::SAndT) per_anchor = 4 + 2 * static_cast<std::size_t>(spec.t_length) + 4;
  return expected_base_size(n, r) + per_anchor * n * r + (spec.pointed ? 1 : 0);
}

FinitePoset build_base(const ConstructionSpec& spec) {
  const auto& group = spec.group();
  const std::size_t r = spec.rank();
  std::vector<PointLabel> points;
  Relations relations;
  for (Element g = 0; g < group.order(); ++g) {
    for (int level = -1; level <= static_cast<int>(r); ++level) points.push_back(BasePoint{g, level});
  }
  for (Element g = 0; g < group.order(); ++g) {
    for (int level = -1; level < static_cast<int>(r); ++level) {
      relations.emplace_back(base_index(g, level, r), base_index(g, level + 1, r));
    }
    // (g h_b, -1) < (g, b); the relations to higher levels follow from the column.
    for (std::size_t beta = 1; beta <= r; ++beta) {
      Element lower = group.mul(g, spec.gens.h(beta));
      relations.emplace_back(base_index(lower, -1, r), base_index(g, static_cast<int>(beta), r));
    }
  }
  return FinitePoset::from_relations(std::move(points), relations);
}

std::vector<PointLabel> t_gadget_fence(BasePoint anchor, int n) {
  if (n < 1) throw InvalidArgument("T^n length must be positive");
  const int top = n + 2;
  std::vector<PointLabel> fence;
  auto add = [&](TnKind kind, int index) {
    fence.push_back(n == 1 ? t_letter(kind, index, anchor) : PointLabel(GadgetTn{kind, index, anchor}));
  };
  for (int i = 1; i <= top; ++i) add(i % 2 == 1 ? TnKind::Max : TnKind::Min, i);
  for (int i = top; i >= 1; --i) add(i % 2 == 1 ? TnKind::Min : TnKind::Max, i);
  return fence;
}

FinitePoset attach_gadgets(const FinitePoset& base, const ConstructionSpec& spec) {
  if (spec.mode == GadgetMode::None) throw InvalidArgument("gadget mode 'none' has nothing to attach");
  const auto& group = spec.group();
  const std::size_t r = spec.rank();
  if (base.size() != expected_base_size(group.order(), r)) {
    throw InvalidArgument("base space does not match the construction spec");
  }
  for (Element g = 0; g < group.order(); ++g) {
    for (int level = -1; level <= static_cast<int>(r); ++level) {
      if (base.find(BasePoint{g, level}) != base_index(g, level, r)) {
        throw InvalidArgument("base space does not match the construction spec");
      }
    }
  }

  std::vector<PointLabel> points = base.labels();
  Relations relations;
  for (const auto& e : base.hasse_edges()) relations.emplace_back(e.lower, e.upper);
  auto add_point = [&](PointLabel label) {
    points.push_back(std::move(label));
    return points.size() - 1;
  };

  // The top level r carries no gadgets.
  for (Element g = 0; g < group.order(); ++g) {
    for (int level = 0; level < static_cast<int>(r); ++level) {
      const BasePoint anchor{g, level};
      const PointIndex x = base_index(g, level, r);
      auto a = add_point(GadgetS{SKind::A, anchor});
      auto b = add_point(GadgetS{SKind::B, anchor});
      auto c = add_point(GadgetS{SKind::C, anchor});
      auto d = add_point(GadgetS{SKind::D, anchor});
      relations.insert(relations.end(), {{c, a}, {d, a}, {c, b}, {x, b}, {d, x}});
      if (spec.mode != GadgetMode::SAndT) continue;

      auto fence = t_gadget_fence(anchor, spec.t_length);
      // Insert in label order: maxima x_1.. (E, F, G), then minima y_1.. (H, I, J).
      std::vector<PointLabel> ordered = fence;
      std::sort(ordered.begin(), ordered.end());
      std::vector<PointIndex> index_of(fence.size());
      const PointIndex first = points.size();
      for (const auto& label : ordered) add_point(label);
      for (std::size_t k = 0; k < fence.size(); ++k) {
        auto pos = std::lower_bound(ordered.begin(), ordered.end(), fence[k]) - ordered.begin();
        index_of[k] = first + static_cast<PointIndex>(pos);
      }
      relations.emplace_back(x, index_of.front());
      for (std::size_t k = 0; k + 1 < fence.size(); ++k) {
        // Even positions are maxima, odd positions minima.
        if (k % 2 == 0) {
          relations.emplace_back(index_of[k + 1], index_of[k]);
        } else {
          relations.emplace_back(index_of[k], index_of[k + 1]);
        }
      }
      relations.emplace_back(index_of.back(), x);
    }
  }
  return FinitePoset::from_relations(std::move(points), relations);
}

FinitePoset add_basepoint(const FinitePoset& space) {
  std::vector<PointLabel> points = space.labels();
  Relations relations;
  for (const auto& e : space.hasse_edges()) relations.emplace_back(e.lower, e.upper);
  const PointIndex star = points.size();
  bool any = false;
  for (PointIndex x = 0; x < space.size(); ++x) {
    if (std::holds_alternative<Star>(space.label(x))) throw InvalidArgument("space already has a basepoint");
    if (base_level(space.label(x)) == -1) {
      relations.emplace_back(x, star);
      any = true;
    }
  }
  if (!any) throw InvalidArgument("space has no level -1 points to put the basepoint over");
  points.push_back(Star{});
  return FinitePoset::from_relations(std::move(points), relations);
}

FinitePoset build_space(const ConstructionSpec& spec) {
  FinitePoset space = build_base(spec);
  if (spec.mode != GadgetMode::None) space = attach_gadgets(space, spec);
  if (spec.pointed) space = add_basepoint(space);
  return space;
}

PosetMap translation_map(const FinitePoset& space, const FiniteGroup& group, Element element) {
  std::vector<PointIndex> images(space.size());
  for (PointIndex x = 0; x < space.size(); ++x) {
    const auto& label = space.label(x);
    PointLabel moved = label;
    if (auto anchor = anchor_of(label)) {
      if (anchor->element >= group.order()) throw InvalidArgument("label references a missing group element");
      moved = with_anchor(label, BasePoint{group.mul(element, anchor->element), anchor->level});
    }
    auto y = space.find(moved);
    if (!y) throw InvalidArgument("translated label " + to_id(moved) + " is missing from the space");
    images[x] = *y;
  }
  return PosetMap(space, space, std::move(images));
}

PosetMap collapse_map(const FinitePoset& source, const FinitePoset& target) {
  std::vector<PointIndex> images(source.size());
  for (PointIndex x = 0; x < source.size(); ++x) {
    PointLabel image = source.label(x);
    if (auto t = std::get_if<GadgetTn>(&image)) image = t_letter(t->kind, std::min(t->index, 3), t->base);
    auto y = target.find(image);
    if (!y) {
      throw InvalidArgument("collapse target has no point " + to_id(image) +
                            "; source and target come from different specs");
    }
    images[x] = *y;
  }
  return PosetMap(source, target, std::move(images));
}

PosetMap collapse_map(int n, const ConstructionSpec& spec) {
  if (n < 1) throw InvalidArgument("T^n length must be positive");
  ConstructionSpec source_spec = spec;
  source_spec.mode = GadgetMode::SAndT;
  source_spec.t_length = n;
  ConstructionSpec target_spec = source_spec;
  target_spec.t_length = 1;
  return collapse_map(build_space(source_spec), build_space(target_spec));
}

}  // namespace fintop
