#include "cli/report.hpp"

#include <algorithm>
#include <exception>


namespace lring::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::SkippedHeavy: return "SKIPPED_HEAVY";
  }
  return "FAIL";
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status != Status::Fail; });
}

nlohmann::ordered_json Report::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["scenario"] = scenario;
  j["seed"] = seed;
  j["version"] = kVersion;
  j["caveats"] = caveats;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json o;
    o["name"] = c.name;
    o["status"] = to_string(c.status);
    o["expected"] = c.expected;
    o["actual"] = c.actual;
    o["time_ms"] = with_timing ? c.time_ms : 0;
    j["checks"].push_back(std::move(o));
  }
  return j;
}

std::string Report::summary() const {
  std::string s;
  for (const auto& c : checks) {
    s += to_string(c.status) + "  " + c.name + ": " + c.actual;
    if (c.status == Status::Fail) s += " (expected " + c.expected + ")";
    s += "\n";
  }
  return s;
}

Check timed_check(const std::string& name, const std::function<Status(Check&)>& body) {
  Check c;
  c.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    c.status = body(c);
  } catch (const std::exception& e) {
    c.status = Status::Fail;
    c.actual = e.what();
  }
  c.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

}  // namespace lring::cli
