#include "fintop/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace fintop {

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> cayley, Element identity,
                         std::vector<std::string> labels) {
  const std::size_t n = cayley.size();
  if (n == 0) throw InvalidStructure("a group needs at least one element");
  if (n > kMaxValidatedOrder) {
    throw SizeLimitExceeded("group order " + std::to_string(n) + " exceeds validation limit " +
                            std::to_string(kMaxValidatedOrder));
  }
  if (labels.size() != n) throw InvalidStructure("need one label per element");
  if (identity >= n) throw InvalidStructure("identity index out of range");
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw InvalidStructure("element labels must be distinct");
  }
  for (const auto& row : cayley) {
    if (row.size() != n) throw InvalidStructure("Cayley table is not square");
    std::vector<char> hit(n, 0);
    for (auto x : row) {
      if (x >= n || hit[x]) throw InvalidStructure("Cayley table rows must be permutations");
      hit[x] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<char> hit(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (hit[cayley[r][c]]) throw InvalidStructure("Cayley table columns must be permutations");
      hit[cayley[r][c]] = 1;
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (cayley[identity][a] != a || cayley[a][identity] != a) {
      throw InvalidStructure("identity element does not act as identity");
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const auto ab = cayley[a][b];
      for (Element c = 0; c < n; ++c) {
        if (cayley[ab][c] != cayley[a][cayley[b][c]]) {
          throw InvalidStructure("operation is not associative");
        }
      }
    }
  }
  // Latin square rows give a unique right inverse; associativity makes it two-sided.
  std::vector<Element> inverse(n);
  for (Element a = 0; a < n; ++a) {
    auto it = std::find(cayley[a].begin(), cayley[a].end(), identity);
    inverse[a] = static_cast<Element>(it - cayley[a].begin());
    if (cayley[inverse[a]][a] != identity) throw InvalidStructure("element lacks a two-sided inverse");
  }
  auto data = std::make_shared<Data>();
  data->cayley = std::move(cayley);
  data->identity = identity;
  data->labels = std::move(labels);
  data->inverse = std::move(inverse);
  data_ = std::move(data);
}

std::optional<Element> FiniteGroup::find(const std::string& label) const {
  const auto& labels = data_->labels;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Element>(it - labels.begin());
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::vector<Element> FiniteGroup::closure(const std::vector<Element>& elements) const {
  std::vector<char> in(order(), 0);
  std::vector<Element> members{identity()};
  in[identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : elements) {
      auto y = mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  return data_ == other.data_ || (data_->cayley == other.data_->cayley &&
                                  data_->identity == other.data_->identity &&
                                  data_->labels == other.data_->labels);
}

GeneratingSet GeneratingSet::without_closure_check(const FiniteGroup& group, std::vector<Element> gens) {
  std::set<Element> seen;
  for (auto g : gens) {
    if (g >= group.order()) {
      throw GeneratingSetError(GeneratingSetError::Kind::IndexOutOfRange, "generator index out of range", {g});
    }
    if (g == group.identity()) {
      throw GeneratingSetError(GeneratingSetError::Kind::ContainsIdentity,
                               "the identity element is not a valid generator", {g});
    }
    if (!seen.insert(g).second) {
      throw GeneratingSetError(GeneratingSetError::Kind::DuplicateGenerator,
                               "duplicate generator '" + group.label(g) + "'", {g});
    }
  }
  return GeneratingSet(group, std::move(gens));
}

GeneratingSet validate_generating_set(const FiniteGroup& group, const std::vector<Element>& gens) {
  auto set = GeneratingSet::without_closure_check(group, gens);
  auto generated = group.closure(gens);
  if (generated.size() != group.order()) {
    std::string members;
    for (auto x : generated) members += (members.empty() ? "" : ",") + group.label(x);
    throw GeneratingSetError(GeneratingSetError::Kind::DoesNotGenerate,
                             "generators only generate the subgroup {" + members + "}",
                             std::move(generated));
  }
  return set;
}

std::vector<Element> resolve_labels(const FiniteGroup& group, const std::vector<std::string>& labels) {
  std::vector<Element> out;
  for (const auto& l : labels) {
    auto e = group.find(l);
    if (!e) throw InvalidArgument("unknown group element '" + l + "'");
    out.push_back(*e);
  }
  return out;
}

namespace {

// Builds a group by breadth-first closure from the identity under right
// multiplication by generators; labels are the shortlex-least words.
template <class Value, class Mul>
FiniteGroup group_from_words(Value identity, const std::vector<std::pair<std::string, Value>>& gens,
                             Mul mul) {
  std::vector<Value> elements{identity};
  std::vector<std::string> words{"e"};
  std::map<Value, Element> index{{identity, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& [letter, g] : gens) {
      Value y = mul(elements[i], g);
      if (index.emplace(y, elements.size()).second) {
        elements.push_back(y);
        words.push_back(i == 0 ? letter : words[i] + letter);
      }
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) table[a][b] = index.at(mul(elements[a], elements[b]));
  }
  return FiniteGroup(std::move(table), 0, std::move(words));
}

FiniteGroup cyclic(int n) {
  if (n < 1) throw InvalidArgument("cyclic group needs n >= 1");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "e" : a == 1 ? "a" : "a^" + std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup(std::move(table), 0, std::move(labels));
}

FiniteGroup dihedral(int m) {
  if (m < 2) throw InvalidArgument("dihedral group needs m >= 2");
  // (k, f) is x -> (f ? -x : x) + k on Z_m, composed abstractly so that m = 2 stays faithful.
  using Value = std::pair<int, int>;
  auto mul = [m](const Value& p, const Value& q) {
    int k = (p.first + (p.second ? m - q.first : q.first)) % m;
    return Value{k, p.second ^ q.second};
  };
  return group_from_words(Value{0, 0}, {{"a", Value{0, 1}}, {"b", Value{1, 1}}}, mul);
}

FiniteGroup symmetric(int n) {
  if (n < 1 || n > 5) throw InvalidArgument("symmetric group supported for 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, Element> index;
  std::vector<std::string> labels;
  for (Element i = 0; i < perms.size(); ++i) {
    index[perms[i]] = i;
    std::string label;
    for (int v : perms[i]) label += static_cast<char>('1' + v);
    labels.push_back(label);
  }
  const std::size_t order = perms.size();
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = index.at(c);
    }
  }
  return FiniteGroup(std::move(table), 0, std::move(labels));
}

FiniteGroup klein4() {
  std::vector<std::vector<Element>> table(4, std::vector<Element>(4));
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) table[a][b] = a ^ b;
  }
  return FiniteGroup(std::move(table), 0, {"e", "a", "b", "ab"});
}

FiniteGroup quaternion8() {
  // Element s*4 + u is (-1)^s times unit u in {1, i, j, k}.
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<Element>> table(8, std::vector<Element>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int ua = a % 4, ub = b % 4;
      int sign = (a / 4) ^ (b / 4) ^ unit_sign[ua][ub];
      table[a][b] = static_cast<Element>(sign * 4 + unit_product[ua][ub]);
    }
  }
  return FiniteGroup(std::move(table), 0, {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

}  // namespace

FiniteGroup builtin_group(const std::string& family, std::optional<int> parameter) {
  auto need = [&](const char* what) {
    if (!parameter) throw InvalidArgument(family + " needs a parameter (" + what + ")");
    return *parameter;
  };
  auto fixed = [&](int order) {
    if (parameter && *parameter != order) {
      throw InvalidArgument(family + " has order " + std::to_string(order) + "; got parameter " +
                            std::to_string(*parameter));
    }
  };
  if (family == "cyclic") return cyclic(need("order"));
  if (family == "dihedral") return dihedral(need("polygon size m; order is 2m"));
  if (family == "symmetric") return symmetric(need("degree"));
  if (family == "klein4") {
    fixed(4);
    return klein4();
  }
  if (family == "quaternion8") {
    fixed(8);
    return quaternion8();
  }
  throw InvalidArgument("unknown group family '" + family + "'");
}

FiniteGroup builtin_group_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return builtin_group(spec);
  std::string family = spec.substr(0, colon);
  std::string param = spec.substr(colon + 1);
  try {
    std::size_t used = 0;
    int value = std::stoi(param, &used);
    if (used != param.size()) throw std::invalid_argument("trailing");
    return builtin_group(family, value);
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad group parameter '" + param + "'");
  }
}

std::vector<Element> standard_generators(const std::string& family, const FiniteGroup& group) {
  std::vector<std::string> labels;
  if (family == "cyclic") {
    if (group.order() > 1) labels = {"a"};
  } else if (family == "dihedral" || family == "klein4") {
    labels = {"a", "b"};
  } else if (family == "quaternion8") {
    labels = {"i", "j"};
  } else if (family == "symmetric") {
    const auto& identity = group.label(group.identity());
    for (std::size_t i = 0; i + 1 < identity.size(); ++i) {
      std::string t = identity;
      std::swap(t[i], t[i + 1]);
      labels.push_back(t);
    }
  } else {
    throw InvalidArgument("unknown group family '" + family + "'");
  }
  return resolve_labels(group, labels);
}

bool groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h, std::size_t size_limit) {
  if (g.order() != h.order()) return false;
  const std::size_t n = g.order();
  if (n > size_limit) {
    throw SizeLimitExceeded("groups_isomorphic limited to order " + std::to_string(size_limit) +
                            "; got " + std::to_string(n));
  }
  std::vector<std::size_t> g_orders(n), h_orders(n);
  for (Element x = 0; x < n; ++x) {
    g_orders[x] = g.element_order(x);
    h_orders[x] = h.element_order(x);
  }
  {
    auto a = g_orders, b = h_orders;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }

  // Greedy generating set of g.
  std::vector<Element> gens;
  for (Element x = 0; x < n && g.closure(gens).size() < n; ++x) {
    auto with = gens;
    with.push_back(x);
    if (g.closure(with).size() > g.closure(gens).size()) gens = std::move(with);
  }

  std::vector<Element> images(gens.size());
  // Extends a generator assignment to a map by closure; checks it is a bijective homomorphism.
  auto try_assignment = [&]() {
    constexpr Element unset = static_cast<Element>(-1);
    std::vector<Element> phi(n, unset);
    phi[g.identity()] = h.identity();
    std::vector<Element> queue{g.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto x = queue[i];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        auto y = g.mul(x, gens[k]);
        auto image = h.mul(phi[x], images[k]);
        if (phi[y] == unset) {
          phi[y] = image;
          queue.push_back(y);
        } else if (phi[y] != image) {
          return false;
        }
      }
    }
    std::vector<char> hit(n, 0);
    for (auto y : phi) {
      if (hit[y]) return false;
      hit[y] = 1;
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> assign = [&](std::size_t k) {
    if (k == gens.size()) return try_assignment();
    for (Element y = 0; y < n; ++y) {
      if (h_orders[y] != g_orders[gens[k]]) continue;
      images[k] = y;
      if (assign(k + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

}  // namespace fintop
