#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fintop/errors.hpp"

namespace fintop {

using Element = std::size_t;

/// Finite group given by its Cayley table. Immutable; copies share storage.
///
/// The table is validated exhaustively on construction (Latin square, two-sided
/// identity, inverses, associativity), so construction is O(n^3).
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxValidatedOrder = 256;

  FiniteGroup(std::vector<std::vector<Element>> cayley, Element identity,
              std::vector<std::string> labels);

  std::size_t order() const { return data_->cayley.size(); }
  Element identity() const { return data_->identity; }
  Element mul(Element a, Element b) const { return data_->cayley[a][b]; }
  Element inverse(Element a) const { return data_->inverse[a]; }
  const std::string& label(Element a) const { return data_->labels.at(a); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::vector<std::vector<Element>>& cayley() const { return data_->cayley; }
  std::optional<Element> find(const std::string& label) const;

  std::size_t element_order(Element a) const;
  /// Subgroup generated by `elements`, ascending.
  std::vector<Element> closure(const std::vector<Element>& elements) const;

  bool operator==(const FiniteGroup& other) const;

 private:
  struct Data {
    std::vector<std::vector<Element>> cayley;
    Element identity = 0;
    std::vector<std::string> labels;
    std::vector<Element> inverse;
  };
  std::shared_ptr<const Data> data_;
};

/// Why a generator list was rejected.
class GeneratingSetError : public Error {
 public:
  enum class Kind { ContainsIdentity, DuplicateGenerator, DoesNotGenerate, IndexOutOfRange };

  GeneratingSetError(Kind kind, std::string message, std::vector<Element> witness = {})
      : Error(std::move(message)), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const { return kind_; }
  /// For DoesNotGenerate: the proper subgroup that is generated. For the
  /// other kinds: the offending entries.
  const std::vector<Element>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<Element> witness_;
};

/// Ordered list h_1..h_r of distinct non-identity generators.
class GeneratingSet {
 public:
  const FiniteGroup& group() const { return group_; }
  const std::vector<Element>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  /// h_beta with beta 1-based.
  Element h(std::size_t beta) const { return gens_.at(beta - 1); }

  /// Skips the closure check (identity and duplicate checks still apply).
  /// For building spaces from deliberately non-generating sets in tests.
  static GeneratingSet without_closure_check(const FiniteGroup& group, std::vector<Element> gens);

 private:
  friend GeneratingSet validate_generating_set(const FiniteGroup&, const std::vector<Element>&);
  GeneratingSet(FiniteGroup group, std::vector<Element> gens)
      : group_(std::move(group)), gens_(std::move(gens)) {}

  FiniteGroup group_;
  std::vector<Element> gens_;
};

/// Checks the list and keeps its order (it fixes the generator-to-level assignment).
/// Throws GeneratingSetError.
GeneratingSet validate_generating_set(const FiniteGroup& group, const std::vector<Element>& gens);

/// Resolves generator labels against the group. Throws InvalidArgument on unknown labels.
std::vector<Element> resolve_labels(const FiniteGroup& group, const std::vector<std::string>& labels);

/// Families: cyclic(n >= 1), dihedral(m >= 2, order 2m, generated by the two
/// reflections a, b with (ab)^m = e), symmetric(1 <= n <= 5), klein4, quaternion8.
FiniteGroup builtin_group(const std::string& family, std::optional<int> parameter = std::nullopt);

/// Parses "family:param" or "family".
FiniteGroup builtin_group_from_spec(const std::string& spec);

/// Standard generating set used by the test zoo and the CLI when --gens is omitted.
std::vector<Element> standard_generators(const std::string& family, const FiniteGroup& group);

/// Brute force over images of a small generating set, pruned by element
/// orders. Throws SizeLimitExceeded when |G| > size_limit.
bool groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h, std::size_t size_limit = 16);

}  // namespace fintop
