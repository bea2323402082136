#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdeform/flows.hpp"
#include "qdeform/report.hpp"

namespace qdeform {

struct SuiteOptions {
  int window = 6;
  int order = 50;
  long corpus_bound = 40;
  std::uint64_t seed = 0;
  unsigned jobs = 0;  // 0 = hardware concurrency
  FlowTolerances tol;
};

// moebius, qrationals, opalg, sl2, witt, jacobi, heisenberg, modsquare,
// rep2, series, flows
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown name. Exceptions raised by a
// suite are turned into a failing check.
VerifyReport run_suite(const std::string& name, const SuiteOptions& opts);

// All suites, in the order of suite_names().
std::vector<VerifyReport> run_all(const SuiteOptions& opts);

}  // namespace qdeform
