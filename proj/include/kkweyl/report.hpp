#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace kkweyl {

/// Outcome of one verification suite. Both sides of every failed identity are
/// kept in full so a failure can be reproduced from the report alone.
struct WeylReport {
  struct Failure {
    std::string check;
    nlohmann::json input;
    nlohmann::json lhs;
    nlohmann::json rhs;
  };

  std::string type;
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t checks = 0;  ///< identities evaluated
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }

  void fail(std::string check, nlohmann::json input, nlohmann::json lhs, nlohmann::json rhs) {
    failures.push_back({std::move(check), std::move(input), std::move(lhs), std::move(rhs)});
  }

  /// Records one check; on mismatch stores both sides via `dump`.
  template <typename T, typename Dump>
  bool expect_equal(const std::string& check, const nlohmann::json& input, const T& lhs,
                    const T& rhs, Dump&& dump) {
    ++checks;
    if (lhs == rhs) return true;
    fail(check, input, dump(lhs), dump(rhs));
    return false;
  }

  /// Appends another report's checks and failures.
  void merge(const WeylReport& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

nlohmann::json to_json(const WeylReport& report);

}  // namespace kkweyl
