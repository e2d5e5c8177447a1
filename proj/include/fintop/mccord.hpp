#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fintop/poset.hpp"
#include "fintop/smith.hpp"

namespace fintop {

/// A simplex of the order complex: a chain of the poset listed bottom to top.
using Simplex = std::vector<PointIndex>;

/// Order complex truncated at `dim_cap`.
class SimplicialComplex {
 public:
  SimplicialComplex(std::size_t vertex_count, std::size_t dim_cap, std::vector<std::vector<Simplex>> simplices);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t dim_cap() const { return simplices_.size() - 1; }
  /// Simplices of dimension k in lexicographic order; empty above the cap.
  const std::vector<Simplex>& simplices(std::size_t k) const;
  std::size_t count(std::size_t k) const { return simplices(k).size(); }
  std::optional<std::size_t> index_of(const Simplex& s) const;

 private:
  std::size_t vertex_count_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

/// All chains with at most dim_cap + 1 points. Throws InvalidArgument when
/// dim_cap is 0 and SizeLimitExceeded past `max_simplices`.
SimplicialComplex order_complex(const FinitePoset& poset, std::size_t dim_cap = 2,
                                std::size_t max_simplices = 5'000'000);

/// boundary(k) maps k-chains to (k-1)-chains; boundary(0) is the zero map
/// onto the trivial group.
class ChainComplex {
 public:
  explicit ChainComplex(const SimplicialComplex& complex);

  std::size_t top_dimension() const { return boundaries_.size() - 1; }
  std::size_t rank(std::size_t k) const { return ranks_.at(k); }
  const IntMatrix& boundary(std::size_t k) const { return boundaries_.at(k); }
  /// Smith form of boundary(k), computed on first use.
  const SmithForm& smith(std::size_t k) const;
  /// True when every composite boundary(k) o boundary(k + 1) vanishes.
  bool squares_to_zero() const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> boundaries_;
  mutable std::vector<std::optional<SmithForm>> smith_;
};

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;
};

/// H_k from exact integer elimination. Needs boundary(k + 1), so k must be
/// below the complex's top dimension.
HomologyGroup homology(const ChainComplex& complex, std::size_t k);
std::size_t betti(const ChainComplex& complex, std::size_t k);

struct UndirectedGraph {
  std::size_t vertex_count = 0;
  /// Pairs (a, b) with a < b, sorted.
  std::vector<std::pair<PointIndex, PointIndex>> edges;

  std::size_t component_count() const;
  std::size_t cycle_rank() const { return edges.size() + component_count() - vertex_count; }
};

UndirectedGraph hasse_undirected(const FinitePoset& poset);

/// Fundamental cycles of the Hasse graph with respect to the breadth-first
/// spanning forest that visits neighbours in index order. Cycle i belongs to
/// the i-th non-tree Hasse edge and is stored as coefficients on Hasse edges,
/// each oriented lower to upper.
struct H1Basis {
  FinitePoset space;
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> cotree_edges;
  std::vector<std::map<std::size_t, std::int64_t>> cycles;
};

H1Basis hasse_h1_basis(const FinitePoset& poset);

/// Expresses the basis cycles as 1-chains of `complex`.
IntMatrix cycle_matrix(const H1Basis& basis, const SimplicialComplex& complex);

/// True when the basis cycles are independent modulo boundaries and there
/// are exactly b1 of them, i.e. they form a basis of H_1 of the complex.
bool basis_spans_h1(const H1Basis& basis, const SimplicialComplex& complex, const ChainComplex& chains);

using IntSquareMatrix = std::vector<std::vector<std::int64_t>>;

/// Matrix of f_* on H_1 in the given basis: column j holds the coordinates of
/// the image of cycle j. Throws InvalidArgument if f is not an automorphism of
/// the basis space.
IntSquareMatrix induced_h1_action(const PosetMap& f, const H1Basis& basis);

IntSquareMatrix multiply(const IntSquareMatrix& a, const IntSquareMatrix& b);

}  // namespace fintop
