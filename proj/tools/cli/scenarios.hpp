#pragma once

#include <cstdint>
#include <string>

#include "cli/report.hpp"

namespace lring::cli {

struct ScenarioOptions {
  std::uint64_t seed = 42;
  /// Time allowed for the ex2 kernel before it is reported SKIPPED_HEAVY.
  double budget_seconds = 600;
  /// Random draws for the order search in scenario main; 0 skips it.
  int search_samples = 500;
};

/// "main", "ex1" or "ex2". Unknown names throw InvalidArgument.
Report run_scenario(const std::string& name, const ScenarioOptions& opts = {});

}  // namespace lring::cli
