#include <doctest.h>

#include "fintop/construction.hpp"
#include "fintop/errors.hpp"
#include "fintop/homotopy.hpp"
#include "fintop/mccord.hpp"
#include "fintop/smith.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace fintop;

namespace {

std::vector<std::vector<BigInt>> to_big(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> out(m.rows, std::vector<BigInt>(m.cols));
  for (const auto& e : m.entries) out[e.row][e.col] += e.value;
  return out;
}

struct Betti {
  std::size_t b0;
  std::size_t b1;
  std::size_t torsion;
};

Betti betti_of(const FinitePoset& p) {
  ChainComplex c(order_complex(p, 2));
  auto h1 = homology(c, 1);
  return {homology(c, 0).betti, h1.betti, h1.torsion.size()};
}

}  // namespace

TEST_CASE("Smith form of small matrices") {
  auto s = smith_normal_form(IntMatrix::from_dense({{2, 0}, {0, 3}}));
  CHECK(s.rank == 2);
  CHECK(s.unit_count == 1);
  CHECK(s.torsion == std::vector<BigInt>{6});

  s = smith_normal_form(IntMatrix::from_dense({{2, 4}, {6, 8}}));
  CHECK(s.unit_count == 0);
  CHECK(s.torsion == std::vector<BigInt>{2, 4});

  s = smith_normal_form(IntMatrix::from_dense({{0, 0}, {0, 0}}));
  CHECK(s.rank == 0);

  s = smith_normal_form(IntMatrix::from_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  CHECK(s.rank == 2);
  CHECK(s.unit_count == 1);
  CHECK(s.torsion == std::vector<BigInt>{3});

  IntMatrix empty;
  CHECK(smith_normal_form(empty).rank == 0);
  CHECK_THROWS_AS(empty.add(0, 0, 1), InvalidArgument);
}

TEST_CASE("Smith form promotes to arbitrary precision on overflow") {
  const std::int64_t big = INT64_MAX;
  auto m = IntMatrix::from_dense({{2, big}, {3, 1}});
  auto s = smith_normal_form(m);
  CHECK(s.promoted);
  CHECK(s.rank == 2);
  // The entries are coprime and det = 2 - 3 big.
  CHECK(s.unit_count == 1);
  REQUIRE(s.torsion.size() == 1);
  CHECK(s.torsion.front() == BigInt(3) * big - 2);
}

TEST_CASE("property: sparse and dense elimination agree with rational rank") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> value(-3, 3);
  std::bernoulli_distribution nonzero(0.3);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t rows = 1 + trial % 9;
    std::size_t cols = 1 + (trial * 7) % 11;
    IntMatrix m;
    m.rows = rows;
    m.cols = cols;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (nonzero(rng)) m.add(i, j, value(rng));
    auto sparse = smith_normal_form(m, 0);
    auto dense = smith_normal_form(m, 1'000'000);
    CHECK(sparse.rank == oracle::rational_rank(to_big(m)));
    CHECK(sparse.rank == dense.rank);
    CHECK(sparse.unit_count == dense.unit_count);
    CHECK(sparse.torsion == dense.torsion);
    for (std::size_t k = 1; k < dense.torsion.size(); ++k) CHECK(dense.torsion[k] % dense.torsion[k - 1] == 0);
  }
}

TEST_CASE("order complex of small posets") {
  auto two = order_complex(fixture::chain(2));
  CHECK(two.count(0) == 2);
  CHECK(two.count(1) == 1);
  CHECK(two.count(2) == 0);

  // One S gadget with its apex: C, D below A; C below B; D below the apex below B.
  auto gadget = fixture::plain_poset({"A", "B", "C", "D", "x"}, {{2, 0}, {3, 0}, {2, 1}, {4, 1}, {3, 4}});
  auto k = order_complex(gadget);
  CHECK(k.count(0) == 5);
  CHECK(k.count(1) == 6);
  CHECK(k.count(2) == 1);
  auto b = betti_of(gadget);
  CHECK(b.b0 == 1);
  CHECK(b.b1 == 1);

  CHECK_THROWS_AS(order_complex(fixture::chain(2), 0), InvalidArgument);
  CHECK_THROWS_AS(order_complex(fixture::chain(6), 2, 10), SizeLimitExceeded);
}

TEST_CASE("the S gadget Hasse diagram is a circle") {
  auto gadget = fixture::plain_poset({"A", "B", "C", "D", "x"}, {{2, 0}, {3, 0}, {2, 1}, {4, 1}, {3, 4}});
  auto graph = hasse_undirected(gadget);
  CHECK(graph.vertex_count == 5);
  CHECK(graph.edges.size() == 5);
  CHECK(graph.cycle_rank() == 1);
}

TEST_CASE("property: simplices are chains and boundaries square to zero") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 80; ++trial) {
    auto r = gen::random_poset(rng, 1 + trial % 10, 0.35);
    auto k = order_complex(r.poset, 3);
    for (std::size_t d = 0; d <= 3; ++d) CHECK(k.count(d) == oracle::chain_count(r.poset, d));
    ChainComplex c(k);
    CHECK(c.squares_to_zero());
    CHECK(homology(c, 0).betti == oracle::components(r.poset));
  }
}

TEST_CASE("Betti numbers of the zoo") {
  for (const auto& z : fixture::zoo()) {
    CAPTURE(z.name);
    const long long n = static_cast<long long>(z.group.order());
    const long long r = static_cast<long long>(z.gens.size());
    auto bar = betti_of(build_space(fixture::spec_for(z)));
    CHECK(bar.b0 == 1);
    CHECK(static_cast<long long>(bar.b1) == 3 * n * r - n + 1);
    CHECK(bar.torsion == 0);
    auto base = betti_of(build_space(fixture::spec_for(z, GadgetMode::None)));
    CHECK(static_cast<long long>(base.b1) == n * (r - 1) + 1);
    auto sonly = betti_of(build_space(fixture::spec_for(z, GadgetMode::SOnly)));
    CHECK(static_cast<long long>(sonly.b1) == 2 * n * r - n + 1);
    CHECK(hasse_undirected(build_space(fixture::spec_for(z))).cycle_rank() == bar.b1);
  }
  CHECK(betti_of(build_space(fixture::c3_spec())).b1 == 7);
  CHECK(betti_of(build_space(fixture::c3_spec(GadgetMode::SOnly))).b1 == 4);
  CHECK(hasse_undirected(build_base(fixture::c3_spec(GadgetMode::None))).cycle_rank() == 1);
  CHECK(hasse_undirected(fixture::chain(2)).cycle_rank() == 0);
}

TEST_CASE("Betti numbers do not depend on the T^n length") {
  auto d4 = fixture::zoo()[6];
  auto first = betti_of(build_space(fixture::spec_for(d4, GadgetMode::SAndT, 1)));
  for (int t = 2; t <= 4; ++t) {
    auto b = betti_of(build_space(fixture::spec_for(d4, GadgetMode::SAndT, t)));
    CHECK(b.b0 == first.b0);
    CHECK(b.b1 == first.b1);
  }
}

TEST_CASE("b0 counts cosets for a non-generating set") {
  auto c4 = builtin_group("cyclic", 4);
  ConstructionSpec spec{GeneratingSet::without_closure_check(c4, {*c4.find("a^2")}), GadgetMode::None};
  auto x = build_base(spec);
  CHECK(component_count(x) == 2);
  CHECK(betti_of(x).b0 == 2);
}

TEST_CASE("H1 basis and induced action") {
  for (const auto& z : {fixture::zoo()[1], fixture::zoo()[6]}) {
    CAPTURE(z.name);
    auto x = build_space(fixture::spec_for(z));
    auto complex = order_complex(x);
    ChainComplex chains(complex);
    auto basis = hasse_h1_basis(x);
    CHECK(basis.cycles.size() == hasse_undirected(x).cycle_rank());
    CHECK(basis_spans_h1(basis, complex, chains));

    auto aut = automorphism_group(x);
    std::vector<IntSquareMatrix> matrices;
    for (const auto& f : aut.elements()) matrices.push_back(induced_h1_action(f, basis));
    IntSquareMatrix identity(basis.cycles.size(), std::vector<std::int64_t>(basis.cycles.size(), 0));
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i][i] = 1;
    CHECK(matrices.front() == identity);
    for (std::size_t i = 0; i < matrices.size(); ++i) {
      for (std::size_t j = 0; j < matrices.size(); ++j) {
        if (i != j) CHECK(matrices[i] != matrices[j]);
        CHECK(matrices[aut.table()[i][j]] == multiply(matrices[i], matrices[j]));
      }
    }
  }
}

TEST_CASE("induced action rejects maps that are not automorphisms") {
  auto x = build_space(fixture::c3_spec());
  auto basis = hasse_h1_basis(x);
  std::vector<PointIndex> constant(x.size(), 0);
  CHECK_THROWS_AS(induced_h1_action(PosetMap(x, x, constant), basis), InvalidArgument);
  auto other = fixture::circle();
  CHECK_THROWS_AS(induced_h1_action(PosetMap::identity(other), basis), InvalidArgument);
}

TEST_CASE("a wrong cycle basis is detected") {
  auto x = build_space(fixture::c3_spec());
  auto complex = order_complex(x);
  ChainComplex chains(complex);
  auto basis = hasse_h1_basis(x);
  auto doubled = basis;
  doubled.cycles[0] = basis.cycles[1];
  CHECK_FALSE(basis_spans_h1(doubled, complex, chains));
  auto short_basis = basis;
  short_basis.cycles.pop_back();
  CHECK_FALSE(basis_spans_h1(short_basis, complex, chains));
}
