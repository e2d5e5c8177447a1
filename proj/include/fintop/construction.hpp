#pragma once

#include <string>

#include "fintop/group.hpp"
#include "fintop/poset.hpp"

namespace fintop {

enum class GadgetMode {
  None,   ///< bare X_G
  SOnly,  ///< S gadgets only
  SAndT,  ///< S gadgets plus T^n gadgets (n = t_length)
};

struct ConstructionSpec {
  GeneratingSet gens;
  GadgetMode mode = GadgetMode::SAndT;
  /// n of the T^n gadget; 1 gives the six-point T gadget with letters E..J.
  int t_length = 1;
  bool pointed = false;

  const FiniteGroup& group() const { return gens.group(); }
  std::size_t rank() const { return gens.size(); }
};

/// Parses "none", "sonly", "sandt:N" (also "sandt" for N = 1).
void parse_mode(const std::string& text, GadgetMode& mode, int& t_length);
std::string mode_name(GadgetMode mode, int t_length);

/// Expected point counts for a spec (gadgets at every (g, i) with 0 <= i <= r-1).
std::size_t expected_base_size(std::size_t order, std::size_t rank);
std::size_t expected_size(const ConstructionSpec& spec);

/// X_G on n(r+2) points Base(g, i), i in -1..r. Relations
/// (g, b) < (g, c) for b < c and (g h_b, -1) < (g, c) for 1 <= b <= c.
/// Points are ordered element-major, then by level.
FinitePoset build_base(const ConstructionSpec& spec);

/// Adds the S gadget and (mode SAndT) the T^n gadget at every Base(g, i) with
/// 0 <= i <= r-1. Throws InvalidArgument for mode None or a base that does
/// not match the spec.
FinitePoset attach_gadgets(const FinitePoset& base, const ConstructionSpec& spec);

/// Adds Star above exactly the level -1 Base points. Throws InvalidArgument
/// if Star is already present or there are no level -1 points.
FinitePoset add_basepoint(const FinitePoset& space);

/// build_base, then attach_gadgets unless mode is None, then add_basepoint if pointed.
FinitePoset build_space(const ConstructionSpec& spec);

/// The T^n gadget's Hasse fence around its anchor, as the cyclic sequence of
/// labels x_1, y_2, x_3, ... , x_2, y_1 (anchor < first, last < anchor).
/// For n = 1 the labels are E..J.
std::vector<PointLabel> t_gadget_fence(BasePoint anchor, int n);

/// Left translation by `element` on labels: Base(s, b) -> Base(element * s, b),
/// gadget labels transported along their anchor, Star fixed.
PosetMap translation_map(const FinitePoset& space, const FiniteGroup& group, Element element);

/// Collapse f^n from X^n (SAndT(n)) to X^1 (SAndT(1)): identity off the T^n
/// gadgets; x_i -> x_i and y_i -> y_i for i <= 3, x_i -> x_3 and y_i -> y_3 for i >= 4.
PosetMap collapse_map(int n, const ConstructionSpec& spec);

/// Same map between two given spaces. Throws InvalidArgument when some source
/// label has no counterpart in the target (spaces built from different specs).
PosetMap collapse_map(const FinitePoset& source, const FinitePoset& target);

}  // namespace fintop
