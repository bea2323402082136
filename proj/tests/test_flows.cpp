#include "doctest.h"

#include <cmath>

#include "qdeform/flows.hpp"

using namespace qdeform;

namespace {

constexpr double kTol = 1e-12;

bool close(cdouble a, cdouble b, double tol = kTol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("dual numbers") {
  const CDual e = CDual::epsilon();
  const CDual x{2.0, 3.0};
  CHECK((x * x).d == cdouble(12.0));
  CHECK((e * e).v == cdouble(0.0));
  CHECK((e * e).d == cdouble(0.0));
  CHECK(close(exp(x).d, 3.0 * std::exp(2.0)));
  CHECK(close(sqrt(CDual{4.0, 1.0}).d, 0.25));
  CHECK(close((CDual(1.0) / x).d, -3.0 / 4.0));
}

TEST_CASE("phi1") {
  CHECK(close(phi1(cdouble(0.0)), 1.0));
  CHECK(close(phi1(cdouble(1.0)), std::exp(1.0) - 1.0));
  CHECK(close(phi1(cdouble(1e-9)), 1.0 + 0.5e-9));
  // phi1'(0) = 1/2
  CHECK(close(phi1(CDual(0.0, 1.0)).d, 0.5));
}

TEST_CASE("flow of D-1") {
  const double t = 0.5;
  CHECK(close(flow_dm1(t, 2.0, 1.0), 2.0 * std::exp(0.5) - 1.0));
  CHECK(close(flow_dm1(t, 1.0, 3.0), 3.5));
  CHECK(close(flow_dm1(0.0, 2.5, cdouble(1.0, 2.0)), cdouble(1.0, 2.0)));
  const DualMobius jet = flow_dm1_jet(t);
  CHECK(close(jet.a.v, 1.0));
  CHECK(close(jet.a.d, t));
  CHECK(close(jet.b.v, t));
  CHECK(close(jet.b.d, 0.0));
  CHECK(close(jet.c.v, 0.0));
  CHECK(close(jet.d.v, 1.0));
}

TEST_CASE("flows solve their vector fields") {
  const double h = 1e-5;
  for (double q : {0.5, 1.5, 2.5}) {
    const cdouble x(0.3, 0.2);
    CHECK(close((flow_dm1(h, q, x) - flow_dm1(-h, q, x)) / (2 * h), field_dm1(q, x), 1e-8));
    CHECK(close((flow_d0(h, q, x) - flow_d0(-h, q, x)) / (2 * h), field_d0(q, x), 1e-8));
    CHECK(close((flow_d1(h, q, x) - flow_d1(-h, q, x)) / (2 * h), field_d1(q, x), 1e-8));
    CHECK(close(flow_d0(0.0, q, x), x));
    CHECK(close(flow_d0(0.4, q, flow_d0(0.3, q, x)), flow_d0(0.7, q, x), 1e-10));
  }
  CHECK(close(field_dm1(2.0, 3.0), 4.0));
  CHECK(close(field_d1(1.0, 3.0), 9.0));
}

TEST_CASE("matrices and distances") {
  const NumMobius t = translation_matrix(cdouble(2.0));
  CHECK(close(t.apply(1.0), 3.0));
  CHECK(close(inversion_matrix(cdouble(2.0)).apply(1.0), -0.5));
  CHECK(close(transition_matrix_num(cdouble(2.0)).det(), 3.0));
  const NumMobius scaled{-2.0 * t.a, -2.0 * t.b, -2.0 * t.c, -2.0 * t.d};
  CHECK(projective_distance(t, scaled) < kTol);
  CHECK(projective_distance(t, inversion_matrix(cdouble(2.0))) > 0.1);
  CHECK(projective_distance(flow_d0_matrix(0.0, cdouble(2.0)), NumMobius{1.0, 0.0, 0.0, 1.0}) < kTol);
}

TEST_CASE("classical Witt flows") {
  CHECK(close(*classical_witt_flow(1, 1.0, 2.0), 2.0 * std::exp(1.0)));
  CHECK(close(*classical_witt_flow(2, 0.25, 2.0), 4.0));
  CHECK(close(*classical_witt_flow(0, 0.25, 2.0), 2.25));
  CHECK(!classical_witt_flow(2, 1.0, 1.0).has_value());
}

TEST_CASE("flow suites") {
  for (const VerifyReport& r : {geometry_suite(default_q_samples()), flows_suite({}, 5)}) {
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.pass);
    }
  }
}
