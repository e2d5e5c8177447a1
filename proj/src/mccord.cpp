#include "fintop/mccord.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "fintop/errors.hpp"

namespace fintop {

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::size_t dim_cap,
                                     std::vector<std::vector<Simplex>> simplices)
    : vertex_count_(vertex_count), simplices_(std::move(simplices)) {
  simplices_.resize(dim_cap + 1);
  index_.resize(simplices_.size());
  for (std::size_t k = 0; k < simplices_.size(); ++k) {
    std::sort(simplices_[k].begin(), simplices_[k].end());
    for (std::size_t i = 0; i < simplices_[k].size(); ++i) {
      if (simplices_[k][i].size() != k + 1) throw InvalidArgument("simplex stored at the wrong dimension");
      index_[k].emplace(simplices_[k][i], i);
    }
  }
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t k) const {
  static const std::vector<Simplex> none;
  return k < simplices_.size() ? simplices_[k] : none;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > index_.size()) return std::nullopt;
  const auto& table = index_[s.size() - 1];
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

SimplicialComplex order_complex(const FinitePoset& poset, std::size_t dim_cap, std::size_t max_simplices) {
  if (dim_cap == 0) throw InvalidArgument("order complex needs dim_cap >= 1");
  std::vector<std::vector<Simplex>> simplices(dim_cap + 1);
  std::size_t total = 0;
  Simplex chain;
  std::function<void(PointIndex)> descend = [&](PointIndex x) {
    chain.push_back(x);
    if (++total > max_simplices) {
      throw SizeLimitExceeded("order complex exceeds " + std::to_string(max_simplices) + " simplices");
    }
    simplices[chain.size() - 1].push_back(chain);
    if (chain.size() <= dim_cap) {
      const auto& above = poset.up_set(x);
      for (auto y = above.find_first(); y != Bitset::npos; y = above.find_next(y)) {
        if (y != x) descend(y);
      }
    }
    chain.pop_back();
  };
  for (PointIndex x = 0; x < poset.size(); ++x) descend(x);
  return SimplicialComplex(poset.size(), dim_cap, std::move(simplices));
}

ChainComplex::ChainComplex(const SimplicialComplex& complex) {
  const std::size_t top = complex.dim_cap();
  ranks_.resize(top + 1);
  boundaries_.resize(top + 1);
  smith_.resize(top + 1);
  for (std::size_t k = 0; k <= top; ++k) ranks_[k] = complex.count(k);
  boundaries_[0].rows = 0;
  boundaries_[0].cols = ranks_[0];
  for (std::size_t k = 1; k <= top; ++k) {
    auto& m = boundaries_[k];
    m.rows = ranks_[k - 1];
    m.cols = ranks_[k];
    const auto& simplices = complex.simplices(k);
    for (std::size_t c = 0; c < simplices.size(); ++c) {
      for (std::size_t i = 0; i <= k; ++i) {
        Simplex face = simplices[c];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        auto r = complex.index_of(face);
        if (!r) throw InvalidStructure("order complex is missing a face");
        m.add(*r, c, i % 2 == 0 ? 1 : -1);
      }
    }
  }
}

const SmithForm& ChainComplex::smith(std::size_t k) const {
  auto& slot = smith_.at(k);
  if (!slot) slot = smith_normal_form(boundaries_[k]);
  return *slot;
}

bool ChainComplex::squares_to_zero() const {
  for (std::size_t k = 1; k < boundaries_.size() - 1; ++k) {
    const auto& outer = boundaries_[k];
    const auto& inner = boundaries_[k + 1];
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> outer_cols(outer.cols);
    for (const auto& e : outer.entries) outer_cols[e.col].emplace_back(e.row, e.value);
    std::vector<std::map<std::size_t, std::int64_t>> product(inner.cols);
    for (const auto& e : inner.entries) {
      for (const auto& [row, value] : outer_cols[e.row]) product[e.col][row] += value * e.value;
    }
    for (const auto& column : product) {
      for (const auto& [row, value] : column) {
        if (value != 0) return false;
      }
    }
  }
  return true;
}

HomologyGroup homology(const ChainComplex& complex, std::size_t k) {
  if (k >= complex.top_dimension()) {
    throw InvalidArgument("H_" + std::to_string(k) + " needs simplices of dimension " + std::to_string(k + 1));
  }
  HomologyGroup out;
  const std::size_t rank_k = k == 0 ? 0 : complex.smith(k).rank;
  const auto& next = complex.smith(k + 1);
  out.betti = complex.rank(k) - rank_k - next.rank;
  out.torsion = next.torsion;
  return out;
}

std::size_t betti(const ChainComplex& complex, std::size_t k) { return homology(complex, k).betti; }

std::size_t UndirectedGraph::component_count() const {
  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = root(parent[v]);
  };
  std::size_t components = vertex_count;
  for (const auto& [a, b] : edges) {
    auto ra = root(a);
    auto rb = root(b);
    if (ra != rb) {
      parent[std::max(ra, rb)] = std::min(ra, rb);
      --components;
    }
  }
  return components;
}

UndirectedGraph hasse_undirected(const FinitePoset& poset) {
  UndirectedGraph graph;
  graph.vertex_count = poset.size();
  for (const auto& e : poset.hasse_edges()) {
    graph.edges.emplace_back(std::min(e.lower, e.upper), std::max(e.lower, e.upper));
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

H1Basis hasse_h1_basis(const FinitePoset& poset) {
  const auto& edges = poset.hasse_edges();
  const std::size_t n = poset.size();
  std::vector<std::vector<std::pair<PointIndex, std::size_t>>> adjacent(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adjacent[edges[e].lower].emplace_back(edges[e].upper, e);
    adjacent[edges[e].upper].emplace_back(edges[e].lower, e);
  }
  for (auto& list : adjacent) std::sort(list.begin(), list.end());

  constexpr std::size_t none = SIZE_MAX;
  std::vector<std::size_t> parent_edge(n, none);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<bool> in_tree(edges.size(), false);
  for (PointIndex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::deque<PointIndex> queue{start};
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (const auto& [w, e] : adjacent[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        parent_edge[w] = e;
        depth[w] = depth[v] + 1;
        in_tree[e] = true;
        queue.push_back(w);
      }
    }
  }

  auto parent_of = [&](PointIndex v) {
    const auto& e = edges[parent_edge[v]];
    return e.lower == v ? e.upper : e.lower;
  };

  H1Basis basis{poset, {}, {}, {}};
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (in_tree[e]) {
      basis.tree_edges.push_back(e);
      continue;
    }
    basis.cotree_edges.push_back(e);
    std::map<std::size_t, std::int64_t> cycle;
    cycle[e] += 1;
    // The cycle runs lower -> upper along e, then back down the tree.
    PointIndex a = edges[e].upper;
    PointIndex b = edges[e].lower;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        auto t = parent_edge[a];
        cycle[t] += edges[t].lower == a ? 1 : -1;
        a = parent_of(a);
      } else {
        auto t = parent_edge[b];
        cycle[t] += edges[t].upper == b ? 1 : -1;
        b = parent_of(b);
      }
    }
    std::erase_if(cycle, [](const auto& entry) { return entry.second == 0; });
    basis.cycles.push_back(std::move(cycle));
  }
  return basis;
}

IntMatrix cycle_matrix(const H1Basis& basis, const SimplicialComplex& complex) {
  IntMatrix z;
  z.rows = complex.count(1);
  z.cols = basis.cycles.size();
  const auto& edges = basis.space.hasse_edges();
  for (std::size_t j = 0; j < basis.cycles.size(); ++j) {
    for (const auto& [e, c] : basis.cycles[j]) {
      auto row = complex.index_of({edges[e].lower, edges[e].upper});
      if (!row) throw InvalidArgument("basis does not belong to this complex");
      z.add(*row, j, c);
    }
  }
  return z;
}

bool basis_spans_h1(const H1Basis& basis, const SimplicialComplex& complex, const ChainComplex& chains) {
  if (complex.vertex_count() != basis.space.size()) return false;
  if (basis.cycles.size() != homology(chains, 1).betti) return false;
  IntMatrix combined = chains.boundary(2);
  auto z = cycle_matrix(basis, complex);
  combined.cols += z.cols;
  for (auto e : z.entries) {
    e.col += chains.boundary(2).cols;
    combined.entries.push_back(e);
  }
  return integer_rank(combined) == chains.smith(2).rank + basis.cycles.size();
}

IntSquareMatrix induced_h1_action(const PosetMap& f, const H1Basis& basis) {
  const auto& space = basis.space;
  bool on_space = (f.source().same_as(space) || f.source() == space) &&
                  (f.target().same_as(space) || f.target() == space);
  if (!on_space) throw InvalidArgument("map does not act on the basis space");
  if (!f.is_isomorphism()) throw InvalidArgument("map is not an automorphism");
  const auto& edges = space.hasse_edges();
  std::map<std::size_t, std::size_t> cotree_row;
  for (std::size_t i = 0; i < basis.cotree_edges.size(); ++i) cotree_row[basis.cotree_edges[i]] = i;

  const std::size_t m = basis.cycles.size();
  IntSquareMatrix out(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& [e, c] : basis.cycles[j]) {
      HasseEdge image{f(edges[e].lower), f(edges[e].upper)};
      auto it = std::lower_bound(edges.begin(), edges.end(), image);
      if (it == edges.end() || *it != image) throw InvalidArgument("map does not preserve Hasse edges");
      auto row = cotree_row.find(static_cast<std::size_t>(it - edges.begin()));
      if (row != cotree_row.end()) out[row->second][j] += c;
    }
  }
  return out;
}

IntSquareMatrix multiply(const IntSquareMatrix& a, const IntSquareMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t m = b.empty() ? 0 : b.front().size();
  IntSquareMatrix out(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != inner) throw InvalidArgument("matrix dimensions do not match");
    for (std::size_t k = 0; k < inner; ++k) {
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

}  // namespace fintop
