#include <doctest.h>

#include "fintop/errors.hpp"
#include "fintop/iso_search.hpp"
#include "fintop/poset.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace fintop;

TEST_CASE("labels round-trip through their ids") {
  std::vector<PointLabel> labels{
      BasePoint{2, -1},
      GadgetS{SKind::A, BasePoint{0, 1}},
      GadgetT{TKind::J, BasePoint{4, 0}},
      GadgetTn{TnKind::Max, 3, BasePoint{1, 0}},
      GadgetTn{TnKind::Min, 12, BasePoint{10, 2}},
      Star{},
      Plain{"x:y"},
  };
  for (const auto& l : labels) CHECK(parse_id(to_id(l)) == l);
  CHECK(to_id(BasePoint{2, -1}) == "base:g2:lv-1");
  CHECK(to_id(GadgetS{SKind::A, BasePoint{0, 1}}) == "S:A:base:g0:lv1");
  CHECK(to_id(GadgetTn{TnKind::Max, 3, BasePoint{1, 0}}) == "Tn:max:3:base:g1:lv0");
  CHECK(to_id(Star{}) == "star");
}

TEST_CASE("malformed ids are rejected") {
  for (const char* bad : {"", "base:g2", "base:g02:lv0", "base:g1:lv+1", "S:Z:base:g0:lv0", "T:E:star",
                          "Tn:max:0:base:g0:lv0", "Tn:mid:1:base:g0:lv0", "stars", "pt:"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_id(bad), ParseError);
  }
}

TEST_CASE("from_relations closes and reduces") {
  auto p = fixture::plain_poset({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(2, 0));
  REQUIRE(p.hasse_edges().size() == 2);
  CHECK(p.is_cover(0, 1));
  CHECK_FALSE(p.is_cover(0, 2));
  CHECK(p.linear_extension() == std::vector<PointIndex>{0, 1, 2});
}

TEST_CASE("invalid relation sets are rejected") {
  CHECK_THROWS_AS(fixture::plain_poset({"a", "b"}, {{0, 1}, {1, 0}}), InvalidStructure);
  CHECK_THROWS_AS(fixture::plain_poset({"a"}, {{0, 0}}), InvalidStructure);
  CHECK_THROWS_AS(fixture::plain_poset({"a", "a"}, {}), InvalidStructure);
  CHECK_THROWS(fixture::plain_poset({"a"}, {{0, 3}}));
}

TEST_CASE("minimal open sets are down-sets") {
  auto p = fixture::five_point_space();
  CHECK(minimal_open_set(p, 4) == std::vector<PointIndex>{0, 1, 2, 4});
  CHECK(minimal_open_set(p, 0) == std::vector<PointIndex>{0});
  CHECK_THROWS_AS(minimal_open_set(p, 5), InvalidArgument);
}

TEST_CASE("beat points of the five-point space") {
  auto p = fixture::five_point_space();
  auto beats = beat_points(p);
  REQUIRE(beats.size() == 2);
  CHECK(beats[0] == BeatPoint{2, BeatKind::Up});
  CHECK(beats[1] == BeatPoint{4, BeatKind::Down});
  CHECK(beat_points(fixture::circle()).empty());
}

TEST_CASE("connectivity") {
  CHECK(is_path_connected(FinitePoset()));
  CHECK(component_count(FinitePoset()) == 0);
  auto two = fixture::plain_poset({"a", "b", "c"}, {{0, 1}});
  CHECK(component_count(two) == 2);
  CHECK_FALSE(is_path_connected(two));
  CHECK(component_ids(two) == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("derived posets") {
  auto p = fixture::five_point_space();
  auto q = p.without_point(2);
  CHECK(q.size() == 4);
  CHECK(q.find(Plain{"c"}) == std::nullopt);
  CHECK(q.leq(*q.find(Plain{"a"}), *q.find(Plain{"e"})));

  auto r = p.without_hasse_edge({2, 4});
  CHECK_FALSE(r.leq(2, 4));
  CHECK_FALSE(r.leq(0, 4));
  CHECK(r.leq(0, 2));

  std::vector<PointIndex> perm{4, 3, 2, 1, 0};
  auto s = p.permuted(perm);
  CHECK(s.label(0) == p.label(4));
  CHECK(s.leq(2, 0));
  CHECK(are_isomorphic(p, s).has_value());
}

TEST_CASE("poset maps") {
  auto p = fixture::chain(3);
  PosetMap constant(p, p, {1, 1, 1});
  CHECK(constant.is_order_preserving());
  CHECK_FALSE(constant.is_surjective());
  PosetMap reverse(p, p, {2, 1, 0});
  CHECK(reverse.is_bijective());
  CHECK_FALSE(reverse.is_order_preserving());
  CHECK_FALSE(reverse.is_isomorphism());
  CHECK_THROWS_AS(constant.inverse(), InvalidArgument);
  CHECK_THROWS(PosetMap(p, p, {0, 1}));
  CHECK_THROWS(PosetMap(p, p, {0, 1, 3}));

  auto c = fixture::circle();
  PosetMap swap(c, c, {1, 0, 3, 2});
  CHECK(swap.is_isomorphism());
  CHECK(swap.after(swap) == PosetMap::identity(c));
  CHECK(swap.inverse() == swap);
}

TEST_CASE("property: closure and covers match Warshall on random posets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 12;
    auto r = gen::random_poset(rng, n, 0.1 + 0.05 * (trial % 8));
    auto expected = oracle::closure(n, r.relations);
    CHECK(oracle::order_matrix(r.poset) == expected);
    std::set<std::pair<PointIndex, PointIndex>> edges;
    for (const auto& e : r.poset.hasse_edges()) edges.emplace(e.lower, e.upper);
    CHECK(edges == oracle::covers(expected));
    std::vector<std::size_t> position(n);
    const auto& ext = r.poset.linear_extension();
    REQUIRE(ext.size() == n);
    for (std::size_t i = 0; i < n; ++i) position[ext[i]] = i;
    for (const auto& e : r.poset.hasse_edges()) CHECK(position[e.lower] < position[e.upper]);
  }
}

TEST_CASE("property: beat points and components match the definitions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto r = gen::random_poset(rng, 1 + trial % 12, 0.25);
    std::set<PointIndex> found;
    for (const auto& b : beat_points(r.poset)) found.insert(b.point);
    CHECK(found == oracle::beat_points(r.poset));
    CHECK(component_count(r.poset) == oracle::components(r.poset));
  }
}

TEST_CASE("property: isomorphism search agrees with permutation brute force") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 1 + trial % 7;
    auto a = gen::random_poset(rng, n, 0.3);
    auto autos = find_isomorphisms(a.poset, a.poset);
    CHECK(autos.maps == oracle::automorphisms(a.poset));

    auto shuffled = a.poset.permuted(gen::random_permutation(rng, n));
    auto iso = are_isomorphic(a.poset, shuffled);
    REQUIRE(iso.has_value());
    CHECK(iso->is_isomorphism());

    auto b = gen::random_poset(rng, n, 0.3);
    CHECK(are_isomorphic(a.poset, b.poset).has_value() == oracle::isomorphic(a.poset, b.poset));
  }
}

TEST_CASE("property: order preservation matches the definition") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 9;
    auto r = gen::random_poset(rng, n, 0.3);
    std::uniform_int_distribution<PointIndex> pick(0, n - 1);
    std::vector<PointIndex> images(n);
    for (auto& y : images) y = pick(rng);
    PosetMap f(r.poset, r.poset, images);
    CHECK(f.is_order_preserving() == oracle::preserves(oracle::order_matrix(r.poset), images));
  }
}

TEST_CASE("isomorphism search honours its budget") {
  auto big = fixture::plain_poset({"a", "b", "c", "d", "e", "f", "g", "h"}, {});
  IsoSearchOptions options;
  options.node_budget = 3;
  CHECK_THROWS_AS(find_isomorphisms(big, big, options), BudgetExceeded);
}
