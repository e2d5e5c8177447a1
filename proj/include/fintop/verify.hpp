#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fintop/construction.hpp"
#include "fintop/report.hpp"

namespace fintop {

struct VerifyOptions {
  /// Gadgets used for the rigid space X̄ checks. Mode None skips them.
  GadgetMode mode = GadgetMode::SAndT;
  int t_length = 1;
  /// Values of n for the T^n family checks.
  std::vector<int> family_range{1, 2, 3};
  std::uint64_t aut_budget = 1'000'000;
  /// Checks reported as skipped without running.
  std::set<std::string> skip;
  /// When set, only this check runs; everything else is left out of the report.
  std::optional<std::string> only;
};

/// Check names in report order.
const std::vector<std::string>& check_names();

/// b1 predicted for a space built with `mode`: n(r-1)+1 for the bare space,
/// 2nr-n+1 with S gadgets only, 3nr-n+1 with S and T gadgets.
long long expected_b1(GadgetMode mode, std::size_t order, std::size_t rank);

/// Runs every registered check for the group and generator list. A failing
/// generating set marks all later checks skipped. Exceptions from the
/// checks become Fail records and never escape. Throws InvalidArgument only
/// for an unknown name in `only` or `skip`.
VerificationReport verify_all(const FiniteGroup& group, const std::vector<Element>& gens,
                              const VerifyOptions& options = {});

}  // namespace fintop
