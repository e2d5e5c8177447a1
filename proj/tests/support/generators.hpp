#pragma once

#include <random>
#include <string>
#include <vector>

#include "fintop/poset.hpp"

namespace gen {

using Relations = std::vector<std::pair<fintop::PointIndex, fintop::PointIndex>>;

struct RandomPoset {
  std::vector<fintop::PointLabel> labels;
  Relations relations;
  fintop::FinitePoset poset;
};

inline std::vector<fintop::PointLabel> plain_labels(std::size_t n) {
  std::vector<fintop::PointLabel> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(fintop::Plain{"p" + std::to_string(i)});
  return out;
}

// Relations go from lower to higher rank in a hidden random order, so the
// result is acyclic but the indices carry no order information.
inline RandomPoset random_poset(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<fintop::PointIndex> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = i;
  std::shuffle(rank.begin(), rank.end(), rng);
  std::bernoulli_distribution coin(density);
  Relations relations;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (rank[a] < rank[b] && coin(rng)) relations.emplace_back(a, b);
  auto labels = plain_labels(n);
  auto poset = fintop::FinitePoset::from_relations(labels, relations);
  return {std::move(labels), std::move(relations), std::move(poset)};
}

inline std::vector<fintop::PointIndex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<fintop::PointIndex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace gen
