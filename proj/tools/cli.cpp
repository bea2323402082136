#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdeform/flows.hpp"
#include "qdeform/lieverify.hpp"
#include "qdeform/opalg.hpp"
#include "qdeform/parse.hpp"
#include "qdeform/qrationals.hpp"
#include "qdeform/series.hpp"
#include "qdeform/suites.hpp"

namespace qdeform {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational to_rational(const RationalInput& r) {
  Rational v(r.num, r.den);
  v.canonicalize();
  return v;
}

double parse_real(const std::string& text) {
  const RationalInput r = parse_rational(text);
  return to_rational(r).get_d();
}

double parse_time(const std::string& text) {
  // Accept decimals as well as r/s.
  if (text.find('/') == std::string::npos) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed number: " + text);
    }
    if (used != text.size()) throw UsageError("malformed number: " + text);
    return v;
  }
  return parse_real(text);
}

cdouble parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_time(text), 0.0};
  return {parse_time(text.substr(0, comma)), parse_time(text.substr(comma + 1))};
}

nlohmann::json complex_json(cdouble z) { return nlohmann::json::array({z.real(), z.imag()}); }

unsigned env_jobs() {
  if (const char* v = std::getenv("QDEFORM_JOBS")) {
    try {
      return static_cast<unsigned>(std::stoul(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("QDEFORM_JOBS is not a number: ") + v);
    }
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-deformed modular group computations and verification suites", "qdeform"};
  app.require_subcommand(1);

  // qrat
  auto* qrat = app.add_subcommand("qrat", "right (sharp) or left (flat) q-rational of r/s");
  std::string qrat_in;
  std::string flavor = "sharp";
  std::string qrat_at;
  qrat->add_option("r/s", qrat_in, "rational number, or inf")->required();
  qrat->add_option("--flavor", flavor, "sharp or flat")->check(CLI::IsMember({"sharp", "flat"}));
  qrat->add_option("--at", qrat_at, "evaluate at this rational q");

  // cf
  auto* cf = app.add_subcommand("cf", "even continued fraction of r/s");
  std::string cf_in;
  cf->add_option("r/s", cf_in, "rational number")->required();

  // op
  auto* op = app.add_subcommand("op", "operator computations");
  op->require_subcommand(1);
  auto* op_bracket = op->add_subcommand("bracket", "[D_i, D_j] as (mult, vec)");
  int op_i = 0;
  int op_j = 0;
  int op_window = 6;
  op_bracket->add_option("i", op_i)->required();
  op_bracket->add_option("j", op_j)->required();
  op_bracket->add_option("--window", op_window, "largest admissible |index|");

  // series
  auto* series = app.add_subcommand("series", "power series");
  series->require_subcommand(1);
  auto* tsallis = series->add_subcommand("tsallis", "coefficients of the Tsallis exponential");
  int order = 50;
  std::string at_q;
  tsallis->add_option("--order", order, "truncation order")->check(CLI::PositiveNumber);
  tsallis->add_option("--at-q", at_q, "specialize at a rational q");

  // flow
  auto* flow = app.add_subcommand("flow", "numeric flows of D-1, D0, D1");
  std::string which;
  std::string flow_q;
  std::string flow_t;
  std::string flow_x;
  flow->add_option("field", which, "dm1, d0 or d1")->required()->check(CLI::IsMember({"dm1", "d0", "d1"}));
  flow->add_option("--q", flow_q, "deformation parameter a/b")->required();
  flow->add_option("--t", flow_t, "time")->required();
  flow->add_option("--x", flow_x, "point re,im; without it the matrix is printed");

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite;
  SuiteOptions opts;
  bool pretty = false;
  int jobs = -1;
  std::vector<std::string> allowed = suite_names();
  allowed.push_back("all");
  verify->add_option("suite", suite, "suite name or all")->required()->check(CLI::IsMember(allowed));
  verify->add_option("--window", opts.window, "index window (default 6)");
  verify->add_option("--order", opts.order, "series order (default 50)")->check(CLI::PositiveNumber);
  verify->add_option("--bound", opts.corpus_bound, "q-rational corpus bound (default 40)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", opts.seed, "seed for randomized checks (default 0)");
  verify->add_option("--jobs", jobs, "worker threads, 1 = sequential (default: QDEFORM_JOBS or all cores)");
  verify->add_flag("--pretty", pretty, "human-readable table");
  verify->add_option("--tol-group", opts.tol.group_law, "group law tolerance");
  verify->add_option("--tol-fd", opts.tol.finite_difference, "finite-difference tolerance");
  verify->add_option("--tol-jet", opts.tol.jet, "dual-number jet tolerance");
  verify->add_option("--tol-geometry", opts.tol.geometry, "fixed point tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (qrat->parsed()) {
      const RationalInput r = parse_rational(qrat_in, true);
      const QRatPair p = flavor == "flat" ? q_flat(r.num, r.den) : q_sharp(r.num, r.den);
      nlohmann::json j{{"input", qrat_in}, {"flavor", flavor}, {"text", p.str()}, {"num", p.num.str()}, {"den", p.den.str()}};
      if (!qrat_at.empty()) {
        const Rational q0 = to_rational(parse_rational(qrat_at));
        const Rational d = p.den.eval(q0);
        j["at"] = qrat_at;
        j["value"] = d == 0 ? std::string("inf") : Rational(p.num.eval(q0) / d).get_str();
      }
      out << j.dump() << '\n';
      return 0;
    }
    if (cf->parsed()) {
      const RationalInput r = parse_rational(cf_in);
      out << even_cf(r.num, r.den).to_json() << '\n';
      return 0;
    }
    if (op_bracket->parsed()) {
      if (op_window < 1) throw UsageError("--window must be positive");
      if (std::abs(op_i) > op_window || std::abs(op_j) > op_window) {
        throw UsageError("indices must satisfy |i|, |j| <= " + std::to_string(op_window));
      }
      const FirstOrderOp b = bracket(generator(op_i), generator(op_j));
      nlohmann::json j{{"bracket", "[D" + std::to_string(op_i) + ",D" + std::to_string(op_j) + "]"},
                       {"mult", b.mult().str()},
                       {"vec", b.vec().str()},
                       {"basis", combination_str(witt_bracket(op_i, op_j))}};
      out << j.dump() << '\n';
      return 0;
    }
    if (tsallis->parsed()) {
      const TruncSeries e = tsallis_series(order);
      if (at_q.empty()) {
        for (int k = 0; k <= order; ++k) out << e[k].str() << '\n';
      } else {
        const Rational q0 = to_rational(parse_rational(at_q));
        for (const auto& v : e.specialize(q0)) out << v.get_str() << '\n';
      }
      return 0;
    }
    if (flow->parsed()) {
      const cdouble q(parse_real(flow_q));
      const double t = parse_time(flow_t);
      const NumMobius m = which == "dm1" ? flow_dm1_matrix(t, q) : which == "d0" ? flow_d0_matrix(t, q)
                                                                               : flow_d1_matrix(t, q);
      if (flow_x.empty()) {
        out << "{\"matrix\":" << to_json(m) << "}\n";
      } else {
        const cdouble x = parse_point(flow_x);
        nlohmann::json j{{"x", complex_json(x)}, {"image", complex_json(m.apply(x))}};
        out << j.dump() << '\n';
      }
      return 0;
    }
    if (verify->parsed()) {
      opts.jobs = jobs >= 0 ? static_cast<unsigned>(jobs) : env_jobs();
      if (opts.window < 2) throw UsageError("--window must be at least 2");
      std::vector<VerifyReport> reports;
      if (suite == "all") {
        reports = run_all(opts);
      } else {
        reports.push_back(run_suite(suite, opts));
      }
      bool ok = true;
      for (const auto& r : reports) {
        out << (pretty ? r.to_pretty() : r.to_json_line() + "\n");
        ok = ok && r.all_pass();
      }
      out.flush();
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace qdeform
