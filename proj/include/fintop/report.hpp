#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace fintop {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus status);

/// Outcome of one named check. A Fail always carries a non-null witness.
struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
  nlohmann::json witness;  // null when absent
  double millis = 0.0;
};

class VerificationReport {
 public:
  void add(CheckRecord record);
  void pass(std::string name, std::string detail, nlohmann::json witness = nullptr, double millis = 0.0);
  void fail(std::string name, std::string detail, nlohmann::json witness, double millis = 0.0);
  void skip(std::string name, std::string detail);

  const std::vector<CheckRecord>& checks() const { return checks_; }
  const CheckRecord* find(const std::string& name) const;
  bool passed() const;
  std::size_t count(CheckStatus status) const;

  /// One record per line:
  ///   <status> <name> | <detail> [| witness=<json>] [| time_ms=<t>]
  /// followed by a summary line. Timing fields are omitted when
  /// `with_timings` is false, which makes reports byte-comparable.
  std::string to_text(bool with_timings = true) const;
  nlohmann::json to_json(bool with_timings = true) const;

 private:
  std::vector<CheckRecord> checks_;
};

}  // namespace fintop
