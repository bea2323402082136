#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace qdeform {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // nonempty whenever pass is false
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::int64_t elapsed_ms = 0;

  explicit VerifyReport(std::string suite_name) : suite(std::move(suite_name)) {}

  void add(std::string name, bool pass, std::string witness = {});
  // Appends the checks of another report, prefixing their names.
  void merge(const VerifyReport& other, const std::string& prefix = {});
  bool all_pass() const;
  std::size_t failures() const;

  std::string to_json_line() const;
  std::string to_pretty() const;
};

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace qdeform
