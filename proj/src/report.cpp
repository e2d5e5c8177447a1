#include "fintop/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "fintop/errors.hpp"

namespace fintop {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skipped:
      return "SKIP";
  }
  return "?";
}

void VerificationReport::add(CheckRecord record) {
  if (record.status == CheckStatus::Fail && record.witness.is_null()) {
    throw InvalidArgument("failed check '" + record.name + "' must carry a witness");
  }
  checks_.push_back(std::move(record));
}

void VerificationReport::pass(std::string name, std::string detail, nlohmann::json witness, double millis) {
  add({std::move(name), CheckStatus::Pass, std::move(detail), std::move(witness), millis});
}

void VerificationReport::fail(std::string name, std::string detail, nlohmann::json witness, double millis) {
  add({std::move(name), CheckStatus::Fail, std::move(detail), std::move(witness), millis});
}

void VerificationReport::skip(std::string name, std::string detail) {
  add({std::move(name), CheckStatus::Skipped, std::move(detail), nullptr, 0.0});
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const auto& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

bool VerificationReport::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t VerificationReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [&](const auto& c) { return c.status == status; }));
}

std::string VerificationReport::to_text(bool with_timings) const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    out << to_string(c.status) << ' ' << c.name << " | " << c.detail;
    if (!c.witness.is_null()) out << " | witness=" << c.witness.dump();
    if (with_timings) out << " | time_ms=" << std::fixed << std::setprecision(3) << c.millis;
    out << '\n';
  }
  out << "summary: pass=" << count(CheckStatus::Pass) << " fail=" << count(CheckStatus::Fail)
      << " skip=" << count(CheckStatus::Skipped) << '\n';
  return out.str();
}

nlohmann::json VerificationReport::to_json(bool with_timings) const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json entry{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail},
                         {"witness", c.witness}};
    if (with_timings) entry["time_ms"] = c.millis;
    checks.push_back(std::move(entry));
  }
  return {{"checks", std::move(checks)}, {"passed", passed()}};
}

}  // namespace fintop
