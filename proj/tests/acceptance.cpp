#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qdeform/flows.hpp"
#include "qdeform/lieverify.hpp"
#include "qdeform/moebius.hpp"
#include "qdeform/opalg.hpp"
#include "qdeform/qrationals.hpp"
#include "qdeform/series.hpp"

using namespace qdeform;

namespace {

struct Criterion {
  std::string label;
  std::int64_t limit_ms;  // 0 = no limit
  std::function<std::vector<VerifyReport>()> run;
};

bool report(int index, const Criterion& c) {
  Stopwatch sw;
  std::vector<VerifyReport> reports;
  std::string error;
  try {
    reports = c.run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const std::int64_t ms = sw.elapsed_ms();
  std::size_t checks = 0;
  std::string first_failure;
  for (const auto& r : reports) {
    checks += r.checks.size();
    for (const auto& ch : r.checks) {
      if (!ch.pass && first_failure.empty()) first_failure = r.suite + ": " + ch.name + " (" + ch.witness + ")";
    }
  }
  const bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
  const bool pass = error.empty() && checks > 0 && first_failure.empty() && in_time;
  std::cout << (pass ? "PASS" : "FAIL") << "  " << index << ". " << c.label << "  [" << checks << " checks, " << ms
            << " ms";
  if (c.limit_ms > 0) std::cout << " < " << c.limit_ms << " ms";
  std::cout << "]";
  if (!error.empty()) std::cout << "  error: " << error;
  if (!first_failure.empty()) std::cout << "  first failure: " << first_failure;
  if (!in_time) std::cout << "  over time limit";
  std::cout << '\n';
  return pass;
}

}  // namespace

int main() {
  const FlowTolerances tol{1e-9, 1e-6, 1e-10, 1e-12};
  const std::vector<Criterion> criteria = {
      {"deformed sl2 brackets as exact operator identities", 1000,
       [] { return std::vector<VerifyReport>{sl2_theorem_check()}; }},
      {"deformed Witt families on [-8,8] and q=1 collapse", 30000,
       [] { return std::vector<VerifyReport>{witt_theorem_check(8, 0)}; }},
      {"abstract Jacobi identity on [-6,6]", 120000,
       [] { return std::vector<VerifyReport>{jacobi_abstract(6, 0)}; }},
      {"tables over Q[q]/((q-1)^2)", 0, [] { return std::vector<VerifyReport>{mod_square_experiments(3)}; }},
      {"q-rationals for |r|, s <= 40", 60000, [] { return std::vector<VerifyReport>{qrationals_suite(40)}; }},
      {"modular group and transition matrix identities", 1000,
       [] { return std::vector<VerifyReport>{identity_suite(0)}; }},
      {"operator propositions with r <= 8", 5000, [] { return std::vector<VerifyReport>{opalg_suite(8, 0)}; }},
      {"Tsallis series through order 50", 0, [] { return std::vector<VerifyReport>{series_suite(50)}; }},
      {"numeric flows, jets and fixed points", 5000,
       [tol] { return std::vector<VerifyReport>{flows_suite(tol, 0)}; }},
      {"isomorphism relations and 2x2 representation over Q(s)", 1000,
       [] { return std::vector<VerifyReport>{iso_and_rep2_check()}; }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!report(static_cast<int>(i + 1), criteria[i])) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << '\n';
  return failed == 0 ? 0 : 1;
}
