#include "doctest.h"

#include "qdeform/moebius.hpp"
#include "qdeform/parse.hpp"

using namespace qdeform;

TEST_CASE("modular group relations") {
  const ProjMap t = q_translation(), s = q_inversion();
  CHECK(projective_eq(s * s, ProjMap::identity()));
  CHECK(projective_eq((s * t).pow(3), ProjMap::identity()));
  CHECK(!projective_eq(t, ProjMap::identity()));
  const ProjMap s1 = burau_sigma1(), s2 = burau_sigma2();
  CHECK(projective_eq(s1 * s2 * s1, s2 * s1 * s2));
  CHECK(projective_eq(s2, s * t * s));
}

TEST_CASE("named matrices") {
  const RatFuncQ q = RatFuncQ::q();
  CHECK(q_u_map() == ProjMap(q * q, 0, q * q, q));
  CHECK(transition_matrix().det() == q * q - q + 1);
  CHECK(q_inverted(q_translation()) == ProjMap(1 / q, 1, 0, 1));
  CHECK(transition_matrix().as_function() == transition_map());
  CHECK_THROWS_AS(ProjMap(1, 1, 1, 1), MathError);
}

TEST_CASE("action on points") {
  const RatFuncQ q = RatFuncQ::q();
  CHECK(apply(q_translation(), ProjPoint(1 / (1 - q))) == ProjPoint(1 / (1 - q)));
  CHECK(apply(q_inversion(), ProjPoint(RatFuncQ(1))) == ProjPoint(-1 / q));
  CHECK(apply(q_inversion(), ProjPoint(RatFuncQ(0))).is_infinity());
  CHECK(apply(q_inversion(), ProjPoint::infinity()) == ProjPoint(RatFuncQ(0)));
  CHECK(apply(q_translation(), ProjPoint::infinity()).is_infinity());
  CHECK(apply(transition_matrix(), ProjPoint::infinity()) == ProjPoint(q / (q - 1)));
  CHECK_THROWS_AS(ProjPoint::infinity().value(), MathError);
}

TEST_CASE("precomposition") {
  const RatFuncQX x = RatFuncQX::x();
  const RatFuncQX q = RatFuncQX::q();
  CHECK(apply_fn(q_translation(), x * x) == (q * x + 1) * (q * x + 1));
  CHECK(apply_fn(q_inversion(), x) == -1 / (q * x));
  const ProjMap g = transition_matrix();
  CHECK(apply_fn(g * q_inversion(), x) == apply_fn(q_inversion(), apply_fn(g, x)));
}

TEST_CASE("powers and adjugate") {
  const ProjMap t = q_translation();
  CHECK(projective_eq(t.pow(-2) * t.pow(2), ProjMap::identity()));
  CHECK(projective_eq(t * t.adjugate(), ProjMap::identity()));
  CHECK(t.pow(0) == ProjMap::identity());
  CHECK(entry_difference(t, t).empty());
  CHECK(!entry_difference(t, q_inversion()).empty());
}

TEST_CASE("identity suite") {
  const VerifyReport r = identity_suite(3);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.witness);
    CHECK(c.pass);
  }
}
