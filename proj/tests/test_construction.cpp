#include <doctest.h>

#include <set>

#include "fintop/construction.hpp"
#include "fintop/errors.hpp"
#include "support/fixtures.hpp"

using namespace fintop;

namespace {

using IdEdge = std::pair<std::string, std::string>;

std::set<IdEdge> id_edges(const FinitePoset& p) {
  std::set<IdEdge> out;
  for (const auto& e : p.hasse_edges()) out.emplace(p.id(e.lower), p.id(e.upper));
  return out;
}

bool covers(const FinitePoset& p, const PointLabel& lower, const PointLabel& upper) {
  auto a = p.find(lower);
  auto b = p.find(upper);
  return a && b && p.is_cover(*a, *b);
}

}  // namespace

TEST_CASE("point counts for the zoo") {
  for (const auto& z : fixture::zoo()) {
    CAPTURE(z.name);
    const std::size_t n = z.group.order();
    const std::size_t r = z.gens.size();
    CHECK(build_space(fixture::spec_for(z, GadgetMode::None)).size() == n * (r + 2));
    CHECK(build_space(fixture::spec_for(z)).size() == n * (r + 2) + 10 * n * r);
    CHECK(build_space(fixture::spec_for(z, GadgetMode::SOnly)).size() == n * (r + 2) + 4 * n * r);
    CHECK(build_space(fixture::spec_for(z, GadgetMode::SAndT, 1, true)).size() == n * (r + 2) + 10 * n * r + 1);
    for (int t = 2; t <= 4; ++t) {
      auto spec = fixture::spec_for(z, GadgetMode::SAndT, t);
      CHECK(build_space(spec).size() == expected_size(spec));
      CHECK(expected_size(spec) == n * (r + 2) + (2 * t + 8) * n * r);
    }
  }
  CHECK(build_space(fixture::spec_for(fixture::zoo()[6])).size() == 192);
}

TEST_CASE("base space of C3 has the column and generator relations") {
  auto x = build_base(fixture::c3_spec(GadgetMode::None));
  REQUIRE(x.size() == 9);
  std::set<IdEdge> expected;
  for (int g = 0; g < 3; ++g) {
    auto id = [](int h, int level) { return "base:g" + std::to_string(h) + ":lv" + std::to_string(level); };
    expected.emplace(id(g, -1), id(g, 0));
    expected.emplace(id(g, 0), id(g, 1));
    expected.emplace(id((g + 1) % 3, -1), id(g, 1));
  }
  CHECK(id_edges(x) == expected);
  CHECK(is_path_connected(x));
}

TEST_CASE("generator cross relations reach every higher level") {
  auto d4 = builtin_group("dihedral", 4);
  ConstructionSpec spec{validate_generating_set(d4, standard_generators("dihedral", d4)), GadgetMode::None};
  auto x = build_base(spec);
  CHECK(x.size() == 32);
  for (Element g = 0; g < 8; ++g) {
    for (std::size_t beta = 1; beta <= 2; ++beta) {
      auto lower = *x.find(BasePoint{d4.mul(g, spec.gens.h(beta)), -1});
      for (int gamma = static_cast<int>(beta); gamma <= 2; ++gamma) CHECK(x.leq(lower, *x.find(BasePoint{g, gamma})));
      CHECK(x.is_cover(lower, *x.find(BasePoint{g, static_cast<int>(beta)})));
    }
  }
}

TEST_CASE("trivial group gives a two-point chain") {
  auto e = builtin_group("cyclic", 1);
  auto x = build_space({validate_generating_set(e, {}), GadgetMode::SAndT});
  REQUIRE(x.size() == 2);
  CHECK(id_edges(x) == std::set<IdEdge>{{"base:g0:lv-1", "base:g0:lv0"}});
}

TEST_CASE("S and T gadget relations") {
  auto x = build_space(fixture::c3_spec());
  for (Element g = 0; g < 3; ++g) {
    BasePoint anchor{g, 0};
    auto s = [&](SKind k) { return PointLabel(GadgetS{k, anchor}); };
    auto t = [&](TKind k) { return PointLabel(GadgetT{k, anchor}); };
    CHECK(covers(x, s(SKind::C), s(SKind::A)));
    CHECK(covers(x, s(SKind::D), s(SKind::A)));
    CHECK(covers(x, s(SKind::C), s(SKind::B)));
    CHECK(covers(x, anchor, s(SKind::B)));
    CHECK(covers(x, s(SKind::D), anchor));
    CHECK(covers(x, t(TKind::H), anchor));
    CHECK(covers(x, anchor, t(TKind::E)));
    CHECK(covers(x, t(TKind::I), t(TKind::E)));
    CHECK(covers(x, t(TKind::H), t(TKind::F)));
    CHECK(covers(x, t(TKind::J), t(TKind::F)));
    CHECK(covers(x, t(TKind::I), t(TKind::G)));
    CHECK(covers(x, t(TKind::J), t(TKind::G)));
    // No gadgets at the top level.
    CHECK_FALSE(x.find(GadgetS{SKind::A, BasePoint{g, 1}}).has_value());
  }
  CHECK(x.hasse_edges().size() == 3 * 2 + 3 + 3 * (5 + 7));
}

TEST_CASE("T^n fence shape") {
  for (int n = 1; n <= 5; ++n) {
    auto fence = t_gadget_fence(BasePoint{0, 0}, n);
    CHECK(fence.size() == static_cast<std::size_t>(2 * n + 4));
    std::set<PointLabel> distinct(fence.begin(), fence.end());
    CHECK(distinct.size() == fence.size());
  }
  auto fence2 = t_gadget_fence(BasePoint{1, 0}, 2);
  std::vector<std::string> ids;
  for (const auto& l : fence2) ids.push_back(to_id(l));
  CHECK(ids == std::vector<std::string>{"Tn:max:1:base:g1:lv0", "Tn:min:2:base:g1:lv0", "Tn:max:3:base:g1:lv0",
                                        "Tn:min:4:base:g1:lv0", "Tn:max:4:base:g1:lv0", "Tn:min:3:base:g1:lv0",
                                        "Tn:max:2:base:g1:lv0", "Tn:min:1:base:g1:lv0"});
  CHECK_THROWS_AS(t_gadget_fence(BasePoint{0, 0}, 0), InvalidArgument);

  auto x = build_space(fixture::c3_spec(GadgetMode::SAndT, 2));
  for (std::size_t k = 0; k + 1 < fence2.size(); ++k) {
    const auto& here = fence2[k];
    const auto& next = fence2[k + 1];
    if (k % 2 == 0) {
      CHECK(covers(x, next, here));
    } else {
      CHECK(covers(x, here, next));
    }
  }
  CHECK(covers(x, BasePoint{1, 0}, fence2.front()));
  CHECK(covers(x, fence2.back(), BasePoint{1, 0}));
}

TEST_CASE("basepoint sits above exactly the level -1 points") {
  auto x = build_space(fixture::c3_spec(GadgetMode::SAndT, 1, true));
  auto star = *x.find(Star{});
  std::set<PointIndex> below;
  for (auto y : x.lower_covers(star)) below.insert(y);
  std::set<PointIndex> expected;
  for (Element g = 0; g < 3; ++g) expected.insert(*x.find(BasePoint{g, -1}));
  CHECK(below == expected);
  CHECK(x.upper_covers(star).empty());
  CHECK_THROWS_AS(add_basepoint(x), InvalidArgument);
  CHECK_THROWS_AS(add_basepoint(fixture::chain(2)), InvalidArgument);
}

TEST_CASE("attach_gadgets preconditions") {
  auto spec = fixture::c3_spec(GadgetMode::None);
  auto base = build_base(spec);
  CHECK_THROWS_AS(attach_gadgets(base, spec), InvalidArgument);
  auto other = fixture::spec_for(fixture::zoo()[2]);
  CHECK_THROWS_AS(attach_gadgets(base, other), InvalidArgument);
}

TEST_CASE("translations are automorphisms acting freely") {
  for (const auto& z : fixture::zoo()) {
    for (bool pointed : {false, true}) {
      auto x = build_space(fixture::spec_for(z, GadgetMode::SAndT, 2, pointed));
      for (Element g = 0; g < z.group.order(); ++g) {
        auto t = translation_map(x, z.group, g);
        CHECK(t.is_isomorphism());
        if (g != z.group.identity()) CHECK(t(0) != 0);
      }
    }
  }
}

TEST_CASE("collapse maps") {
  auto spec = fixture::c3_spec();
  for (int n = 1; n <= 4; ++n) {
    auto f = collapse_map(n, spec);
    CHECK(f.is_order_preserving());
    CHECK(f.is_surjective());
    if (n == 1) CHECK(f == PosetMap::identity(f.source()));
  }
  auto f4 = collapse_map(4, spec);
  const auto& src = f4.source();
  const auto& dst = f4.target();
  auto image = [&](const PointLabel& l) { return dst.label(f4(*src.find(l))); };
  BasePoint anchor{2, 0};
  CHECK(image(GadgetTn{TnKind::Max, 5, anchor}) == PointLabel(GadgetT{TKind::G, anchor}));
  CHECK(image(GadgetTn{TnKind::Min, 6, anchor}) == PointLabel(GadgetT{TKind::J, anchor}));
  CHECK(image(GadgetTn{TnKind::Min, 1, anchor}) == PointLabel(GadgetT{TKind::H, anchor}));
  CHECK(image(GadgetTn{TnKind::Max, 2, anchor}) == PointLabel(GadgetT{TKind::F, anchor}));
  CHECK_THROWS_AS(collapse_map(0, spec), InvalidArgument);
  CHECK_THROWS_AS(collapse_map(build_space(spec), build_base(spec)), InvalidArgument);
}

TEST_CASE("mode parsing") {
  GadgetMode mode{};
  int t = 0;
  parse_mode("none", mode, t);
  CHECK(mode == GadgetMode::None);
  parse_mode("sonly", mode, t);
  CHECK(mode == GadgetMode::SOnly);
  parse_mode("sandt:3", mode, t);
  CHECK(mode == GadgetMode::SAndT);
  CHECK(t == 3);
  CHECK(mode_name(mode, t) == "sandt:3");
  for (const char* bad : {"sandt:0", "sandt:x", "sandt:2x", "both", ""}) CHECK_THROWS_AS(parse_mode(bad, mode, t), InvalidArgument);
}
