#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace fintop {

/// A point (g, level) of the base space G x {-1, 0, ..., r}.
struct BasePoint {
  std::size_t element = 0;
  int level = 0;

  auto operator<=>(const BasePoint&) const = default;
};

enum class SKind { A, B, C, D };
enum class TKind { E, F, G, H, I, J };
enum class TnKind { Max, Min };

/// One of the four points of the S gadget hanging off `base`.
struct GadgetS {
  SKind kind = SKind::A;
  BasePoint base;

  auto operator<=>(const GadgetS&) const = default;
};

/// One of the six points of the T gadget hanging off `base`.
struct GadgetT {
  TKind kind = TKind::E;
  BasePoint base;

  auto operator<=>(const GadgetT&) const = default;
};

/// x_index (Max) or y_index (Min) of a T^n gadget, index in 1..n+2.
struct GadgetTn {
  TnKind kind = TnKind::Max;
  int index = 1;
  BasePoint base;

  auto operator<=>(const GadgetTn&) const = default;
};

/// The extra maximal point of the pointed space.
struct Star {
  auto operator<=>(const Star&) const = default;
};

/// Free-form label for fixtures that do not come from the group construction.
struct Plain {
  std::string name;

  auto operator<=>(const Plain&) const = default;
};

using PointLabel = std::variant<BasePoint, GadgetS, GadgetT, GadgetTn, Star, Plain>;

/// Canonical id, e.g. "base:g2:lv-1", "S:A:base:g0:lv1", "Tn:max:3:base:g1:lv0", "star".
std::string to_id(const PointLabel& label);

/// Inverse of to_id. Throws ParseError on malformed input.
PointLabel parse_id(std::string_view id);

/// Level of a Base label; nullopt for everything else.
std::optional<int> base_level(const PointLabel& label);

/// The Base point a gadget hangs off (or the point itself for Base labels).
std::optional<BasePoint> anchor_of(const PointLabel& label);

/// Same label with its anchor replaced. Labels without an anchor are returned unchanged.
PointLabel with_anchor(const PointLabel& label, BasePoint anchor);

char kind_letter(SKind kind);
char kind_letter(TKind kind);

}  // namespace fintop
