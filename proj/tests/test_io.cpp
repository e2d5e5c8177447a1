#include <doctest.h>

#include "fintop/construction.hpp"
#include "fintop/errors.hpp"
#include "fintop/io.hpp"
#include "support/fixtures.hpp"

using namespace fintop;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) ++n;
  return n;
}

}  // namespace

TEST_CASE("poset documents round-trip exactly") {
  std::vector<FinitePoset> spaces{
      build_space(fixture::c3_spec(GadgetMode::None)),
      build_space(fixture::c3_spec()),
      build_space(fixture::c3_spec(GadgetMode::SAndT, 3, true)),
      build_space(fixture::c3_spec(GadgetMode::SOnly)),
      fixture::five_point_space(),
      FinitePoset(),
  };
  for (const auto& p : spaces) {
    auto text = poset_to_text(p);
    auto back = poset_from_text(text);
    CHECK(back == p);
    CHECK(poset_to_text(back) == text);
  }
}

TEST_CASE("poset documents are validated") {
  CHECK_THROWS_AS(poset_from_text("{"), ParseError);
  CHECK_THROWS_AS(poset_from_text(R"({"points": []})"), ParseError);
  CHECK_THROWS_AS(poset_from_text(R"({"points": ["pt:a"], "hasse": [["pt:a", "pt:b"]]})"), ParseError);
  CHECK_THROWS_AS(poset_from_text(R"({"points": ["pt:a", "pt:a"], "hasse": []})"), ParseError);
  CHECK_THROWS_AS(poset_from_text(R"({"points": ["nonsense"], "hasse": []})"), ParseError);
  CHECK_THROWS_AS(poset_from_text(R"({"points": ["pt:a", "pt:b"], "hasse": [["pt:a", "pt:b"], ["pt:b", "pt:a"]]})"),
                  ParseError);
  // a < c is implied by a < b < c, so it is not a covering pair.
  CHECK_THROWS_AS(poset_from_text(R"({"points": ["pt:a", "pt:b", "pt:c"],
                                      "hasse": [["pt:a", "pt:b"], ["pt:b", "pt:c"], ["pt:a", "pt:c"]]})"),
                  ParseError);
  CHECK_THROWS_AS(poset_from_text(R"({"points": ["pt:a", "pt:b"], "hasse": [["pt:a", "pt:b"], ["pt:a", "pt:b"]]})"),
                  ParseError);
  CHECK_THROWS_AS(poset_from_text(R"({"points": "pt:a", "hasse": []})"), ParseError);
}

TEST_CASE("group documents round-trip") {
  for (const auto& z : fixture::zoo()) {
    auto doc = group_to_json(z.group);
    CHECK(group_from_json(doc) == z.group);
  }
  auto doc = group_to_json(builtin_group("cyclic", 3));
  doc["cayley"][0][0] = 1;
  CHECK_THROWS_AS(group_from_json(doc), ParseError);
  doc = group_to_json(builtin_group("cyclic", 3));
  doc["order"] = 4;
  CHECK_THROWS_AS(group_from_json(doc), ParseError);
  CHECK_THROWS_AS(group_from_json(parse_json("[]")), ParseError);
}

TEST_CASE("complex documents round-trip and are validated") {
  auto p = build_space(fixture::c3_spec());
  auto k = order_complex(p);
  auto doc = complex_to_json(p, k);
  auto back = complex_from_json(doc);
  CHECK(back.dim_cap() == 2);
  for (std::size_t d = 0; d <= 2; ++d) CHECK(back.simplices(d) == k.simplices(d));
  CHECK(complex_to_json(p, back) == doc);

  auto broken = doc;
  broken["simplices"][1].erase(0);
  CHECK_THROWS_AS(complex_from_json(broken), ParseError);
  broken = doc;
  auto edge = broken["simplices"][1][0];
  broken["simplices"][1][0] = nlohmann::json::array({edge[1], edge[0]});
  CHECK_THROWS_AS(complex_from_json(broken), ParseError);
  broken = doc;
  broken["dim_cap"] = 3;
  CHECK_THROWS_AS(complex_from_json(broken), ParseError);
}

TEST_CASE("DOT export") {
  auto x = build_base(fixture::c3_spec(GadgetMode::None));
  auto dot = export_dot(x);
  CHECK(dot.rfind("digraph poset {\n  rankdir=BT;", 0) == 0);
  CHECK(count_of(dot, " -> ") == x.hasse_edges().size());
  CHECK(count_of(dot, "rank=same") == 3);
  CHECK(dot.find("\"base:g1:lv-1\" -> \"base:g0:lv1\";") != std::string::npos);
  CHECK(export_dot(x) == dot);

  auto two = export_dot(fixture::chain(2));
  CHECK(count_of(two, " -> ") == 1);
  CHECK(two.find("\"pt:c0\" -> \"pt:c1\";") != std::string::npos);

  auto pointed = export_dot(build_space(fixture::c3_spec(GadgetMode::SAndT, 1, true)));
  for (int g = 0; g < 3; ++g) {
    CHECK(pointed.find("\"base:g" + std::to_string(g) + ":lv-1\" -> \"star\";") != std::string::npos);
  }
}

TEST_CASE("file helpers") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/path/for/test"), ParseError);
}
