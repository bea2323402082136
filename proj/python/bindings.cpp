#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdeform/flows.hpp"
#include "qdeform/lieverify.hpp"
#include "qdeform/opalg.hpp"
#include "qdeform/parse.hpp"
#include "qdeform/qrationals.hpp"
#include "qdeform/series.hpp"
#include "qdeform/suites.hpp"

namespace py = pybind11;
using namespace qdeform;

namespace {

py::object to_pyint(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

BigInt to_bigint(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

Rational to_rational(const std::string& text) {
  const RationalInput r = parse_rational(text);
  Rational v(r.num, r.den);
  v.canonicalize();
  return v;
}

py::tuple pair_of(const QRatPair& p) { return py::make_tuple(p.num.str(), p.den.str()); }

py::object report_dict(const VerifyReport& rep) {
  return py::module_::import("json").attr("loads")(rep.to_json_line());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-deformed modular group computations";

  py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<RatFuncQ>(m, "RatFunc", "Element of Q(q), kept reduced with monic denominator")
      .def(py::init([](const std::string& text) { return parse_ratfunc(text); }), py::arg("text"))
      .def(py::init([](long c) { return RatFuncQ(c); }), py::arg("value"))
      .def_static("q", &RatFuncQ::q)
      .def_property_readonly("num", [](const RatFuncQ& f) { return f.num().str(); })
      .def_property_readonly("den", [](const RatFuncQ& f) { return f.den().str(); })
      .def("eval", [](const RatFuncQ& f, const std::string& q0) { return f.eval(to_rational(q0)).get_str(); },
           py::arg("q0"))
      .def("derivative", &RatFuncQ::derivative)
      .def("inverse", &RatFuncQ::inverse)
      .def("__pow__", [](const RatFuncQ& f, int n) { return f.pow(n); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self + long())
      .def(py::self - long())
      .def(py::self * long())
      .def(py::self / long())
      .def(long() + py::self)
      .def(long() - py::self)
      .def(long() * py::self)
      .def(long() / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", [](const RatFuncQ& f) { return f.str(); })
      .def("__repr__", [](const RatFuncQ& f) { return "RatFunc('" + f.str() + "')"; });

  m.def("even_cf", [](const py::int_& r, const py::int_& s) {
    py::list out;
    for (const auto& t : even_cf(to_bigint(r), to_bigint(s)).terms) out.append(to_pyint(t));
    return out;
  }, py::arg("r"), py::arg("s") = 1, "Even continued fraction of r/s; empty for s = 0");
  m.def("q_sharp", [](const py::int_& r, const py::int_& s) { return pair_of(q_sharp(to_bigint(r), to_bigint(s))); },
        py::arg("r"), py::arg("s") = 1, "Right q-rational as (numerator, denominator) strings");
  m.def("q_flat", [](const py::int_& r, const py::int_& s) { return pair_of(q_flat(to_bigint(r), to_bigint(s))); },
        py::arg("r"), py::arg("s") = 1, "Left q-rational as (numerator, denominator) strings");
  m.def("transition_check", [](const py::int_& r, const py::int_& s) {
    return transition_check(to_bigint(r), to_bigint(s));
  }, py::arg("r"), py::arg("s") = 1);
  m.def("positivity_check", [](const py::int_& r, const py::int_& s) {
    return positivity_check(to_bigint(r), to_bigint(s));
  }, py::arg("r"), py::arg("s") = 1);

  m.def("bracket", [](int i, int j) {
    const FirstOrderOp b = bracket(generator(i), generator(j));
    return py::make_tuple(b.mult().str(), b.vec().str());
  }, py::arg("i"), py::arg("j"), "[D_i, D_j] as (multiplication part, vector-field part)");
  m.def("generator", [](int n) { return generator(n).vec().str(); }, py::arg("n"),
        "Vector-field coefficient of D_n");
  m.def("witt_bracket", [](int i, int j) {
    std::map<int, std::string> out;
    for (const auto& [k, c] : witt_bracket(i, j)) out[k] = c.str();
    return out;
  }, py::arg("i"), py::arg("j"), "Structure constants {k: c(i, j, k)}");

  m.def("tsallis_series", [](int order) {
    const TruncSeries e = tsallis_series(order);
    std::vector<std::string> out;
    for (const auto& c : e.coeffs()) out.push_back(c.str());
    return out;
  }, py::arg("order"));
  m.def("tsallis_at", [](int order, const std::string& q0) {
    std::vector<std::string> out;
    for (const auto& c : tsallis_series(order).specialize(to_rational(q0))) out.push_back(c.get_str());
    return out;
  }, py::arg("order"), py::arg("q0"));

  auto as_lists = [](const NumMobius& mat) {
    return std::vector<std::vector<cdouble>>{{mat.a, mat.b}, {mat.c, mat.d}};
  };
  m.def("flow_dm1", &flow_dm1, py::arg("t"), py::arg("q"), py::arg("x"));
  m.def("flow_d0", &flow_d0, py::arg("t"), py::arg("q"), py::arg("x"));
  m.def("flow_d1", &flow_d1, py::arg("t"), py::arg("q"), py::arg("x"));
  m.def("flow_d0_matrix", [as_lists](double t, cdouble q) { return as_lists(flow_d0_matrix(t, q)); },
        py::arg("t"), py::arg("q"));
  m.def("classical_witt_flow", &classical_witt_flow, py::arg("n"), py::arg("t"), py::arg("x"));

  m.def("suite_names", &suite_names);
  m.def("verify", [](const std::string& suite, int window, int order, std::uint64_t seed, unsigned jobs) {
    SuiteOptions opts;
    opts.window = window;
    opts.order = order;
    opts.seed = seed;
    opts.jobs = jobs;
    VerifyReport rep = [&] {
      py::gil_scoped_release release;
      return run_suite(suite, opts);
    }();
    return report_dict(rep);
  }, py::arg("suite"), py::arg("window") = 6, py::arg("order") = 50, py::arg("seed") = 0, py::arg("jobs") = 1,
     "Run one verification suite and return its report as a dict");
}
