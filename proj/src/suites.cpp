#include "qdeform/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "qdeform/lieverify.hpp"
#include "qdeform/moebius.hpp"
#include "qdeform/opalg.hpp"
#include "qdeform/parallel.hpp"
#include "qdeform/qrationals.hpp"
#include "qdeform/series.hpp"

namespace qdeform {

namespace {

using Runner = std::function<VerifyReport(const SuiteOptions&)>;

const std::map<std::string, Runner>& registry() {
  static const std::map<std::string, Runner> r{
      {"moebius", [](const SuiteOptions& o) { return identity_suite(o.seed); }},
      {"qrationals", [](const SuiteOptions& o) { return qrationals_suite(o.corpus_bound); }},
      {"opalg", [](const SuiteOptions& o) { return opalg_suite(o.window, o.seed); }},
      {"sl2", [](const SuiteOptions&) { return sl2_theorem_check(); }},
      {"witt", [](const SuiteOptions& o) { return witt_theorem_check(o.window, o.jobs); }},
      {"jacobi", [](const SuiteOptions& o) { return jacobi_abstract(o.window, o.jobs); }},
      {"heisenberg", [](const SuiteOptions&) { return heisenberg_check(); }},
      {"modsquare", [](const SuiteOptions& o) { return mod_square_experiments(std::max(3, o.window)); }},
      {"rep2", [](const SuiteOptions&) { return iso_and_rep2_check(); }},
      {"series", [](const SuiteOptions& o) { return series_suite(o.order); }},
      {"flows", [](const SuiteOptions& o) { return flows_suite(o.tol, o.seed); }},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"moebius", "qrationals", "opalg",     "sl2",  "witt",  "jacobi",
                                              "heisenberg", "modsquare", "rep2", "series", "flows"};
  return names;
}

VerifyReport run_suite(const std::string& name, const SuiteOptions& opts) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite: " + name);
  try {
    return it->second(opts);
  } catch (const std::exception& e) {
    VerifyReport rep(name);
    rep.add("suite completed", false, std::string("exception: ") + e.what());
    return rep;
  }
}

std::vector<VerifyReport> run_all(const SuiteOptions& opts) {
  const auto& names = suite_names();
  std::vector<VerifyReport> out;
  out.reserve(names.size());
  for (const auto& n : names) out.emplace_back(n);
  // Fill the shared generator cache before the suites race for it.
  for (int n = -opts.window - 1; n <= opts.window + 1; ++n) generator(n);
  parallel_for(names.size(), opts.jobs, [&](std::size_t i) { out[i] = run_suite(names[i], opts); });
  return out;
}

}  // namespace qdeform
