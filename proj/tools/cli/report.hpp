#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace lring::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Status { Pass, Fail, SkippedHeavy };

std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Fail;
  std::string expected;
  std::string actual;
  std::int64_t time_ms = 0;
};

struct Report {
  std::string scenario;
  std::uint64_t seed = 42;
  std::vector<std::string> caveats{"contraction_assumed", "dimension_assumed"};
  std::vector<Check> checks;

  bool ok() const;
  nlohmann::ordered_json to_json(bool with_timing = true) const;
  /// One line per check, for terminals.
  std::string summary() const;
};

/// Runs body, which fills expected/actual and returns the verdict. An
/// exception becomes FAIL with the diagnostic as the actual value.
Check timed_check(const std::string& name, const std::function<Status(Check&)>& body);

}  // namespace lring::cli
