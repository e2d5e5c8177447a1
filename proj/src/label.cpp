#include "fintop/label.hpp"

#include <charconv>
#include <vector>

#include "fintop/errors.hpp"

namespace fintop {
namespace {

std::string base_id(const BasePoint& b) {
  return "base:g" + std::to_string(b.element) + ":lv" + std::to_string(b.level);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

template <class T>
T parse_number(std::string_view text, std::string_view whole) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("bad number in point id '" + std::string(whole) + "'");
  }
  return value;
}

BasePoint parse_base(std::string_view g, std::string_view lv, std::string_view whole) {
  if (g.size() < 2 || g[0] != 'g' || lv.size() < 3 || lv.substr(0, 2) != "lv") {
    throw ParseError("bad base reference in point id '" + std::string(whole) + "'");
  }
  // Canonical form only: no leading '+' or zero padding.
  auto element = parse_number<std::size_t>(g.substr(1), whole);
  auto level = parse_number<int>(lv.substr(2), whole);
  BasePoint b{element, level};
  if (base_id(b) != std::string("base:") + std::string(g) + ":" + std::string(lv)) {
    throw ParseError("non-canonical point id '" + std::string(whole) + "'");
  }
  return b;
}

}  // namespace

char kind_letter(SKind kind) { return static_cast<char>('A' + static_cast<int>(kind)); }
char kind_letter(TKind kind) { return static_cast<char>('E' + static_cast<int>(kind)); }

std::string to_id(const PointLabel& label) {
  struct Visitor {
    std::string operator()(const BasePoint& b) const { return base_id(b); }
    std::string operator()(const GadgetS& s) const {
      return std::string("S:") + kind_letter(s.kind) + ":" + base_id(s.base);
    }
    std::string operator()(const GadgetT& t) const {
      return std::string("T:") + kind_letter(t.kind) + ":" + base_id(t.base);
    }
    std::string operator()(const GadgetTn& t) const {
      return std::string("Tn:") + (t.kind == TnKind::Max ? "max" : "min") + ":" +
             std::to_string(t.index) + ":" + base_id(t.base);
    }
    std::string operator()(const Star&) const { return "star"; }
    std::string operator()(const Plain& p) const { return "pt:" + p.name; }
  };
  return std::visit(Visitor{}, label);
}

PointLabel parse_id(std::string_view id) {
  if (id == "star") return Star{};
  if (id.substr(0, 3) == "pt:") {
    if (id.size() == 3) throw ParseError("empty plain point name");
    return Plain{std::string(id.substr(3))};
  }
  auto parts = split(id, ':');
  auto bad = [&] { return ParseError("unrecognised point id '" + std::string(id) + "'"); };
  if (parts.size() == 3 && parts[0] == "base") {
    return parse_base(parts[1], parts[2], id);
  }
  if (parts.size() == 5 && (parts[0] == "S" || parts[0] == "T") && parts[1].size() == 1 &&
      parts[2] == "base") {
    auto base = parse_base(parts[3], parts[4], id);
    char letter = parts[1][0];
    if (parts[0] == "S") {
      if (letter < 'A' || letter > 'D') throw bad();
      return GadgetS{static_cast<SKind>(letter - 'A'), base};
    }
    if (letter < 'E' || letter > 'J') throw bad();
    return GadgetT{static_cast<TKind>(letter - 'E'), base};
  }
  if (parts.size() == 6 && parts[0] == "Tn" && parts[3] == "base") {
    TnKind kind;
    if (parts[1] == "max") {
      kind = TnKind::Max;
    } else if (parts[1] == "min") {
      kind = TnKind::Min;
    } else {
      throw bad();
    }
    int index = parse_number<int>(parts[2], id);
    if (index < 1 || std::to_string(index) != parts[2]) throw bad();
    return GadgetTn{kind, index, parse_base(parts[4], parts[5], id)};
  }
  throw bad();
}

std::optional<int> base_level(const PointLabel& label) {
  if (auto b = std::get_if<BasePoint>(&label)) return b->level;
  return std::nullopt;
}

std::optional<BasePoint> anchor_of(const PointLabel& label) {
  if (auto b = std::get_if<BasePoint>(&label)) return *b;
  if (auto s = std::get_if<GadgetS>(&label)) return s->base;
  if (auto t = std::get_if<GadgetT>(&label)) return t->base;
  if (auto t = std::get_if<GadgetTn>(&label)) return t->base;
  return std::nullopt;
}

PointLabel with_anchor(const PointLabel& label, BasePoint anchor) {
  PointLabel out = label;
  if (auto b = std::get_if<BasePoint>(&out)) *b = anchor;
  if (auto s = std::get_if<GadgetS>(&out)) s->base = anchor;
  if (auto t = std::get_if<GadgetT>(&out)) t->base = anchor;
  if (auto t = std::get_if<GadgetTn>(&out)) t->base = anchor;
  return out;
}

}  // namespace fintop
