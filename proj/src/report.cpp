#include "qdeform/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace qdeform {

void VerifyReport::add(std::string name, bool pass, std::string witness) {
  if (!pass && witness.empty()) witness = "check failed";
  checks.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
}

void VerifyReport::merge(const VerifyReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.witness});
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

std::string VerifyReport::to_json_line() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["status"] = all_pass() ? "pass" : "fail";
  j["elapsed_ms"] = elapsed_ms;
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
  }
  j["checks"] = std::move(arr);
  return j.dump();
}

std::string VerifyReport::to_pretty() const {
  std::ostringstream os;
  os << "== " << suite << " (" << checks.size() << " checks, " << failures() << " failed, " << elapsed_ms
     << " ms)\n";
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.pass) os << "  -- " << c.witness;
    os << '\n';
  }
  return os.str();
}

}  // namespace qdeform
