#include "doctest.h"

#include "qdeform/lieverify.hpp"
#include "qdeform/moebius.hpp"
#include "qdeform/opalg.hpp"
#include "qdeform/parse.hpp"

using namespace qdeform;

namespace {

RatFuncQX fx(const char* text) { return parse_ratfunc_qx(text); }

}  // namespace

TEST_CASE("generators") {
  CHECK(generator(-1) == FirstOrderOp::vector_field(fx("1+(q-1)x")));
  CHECK(generator(0) == FirstOrderOp::vector_field(fx("(1+(x-1)q)(1+(q-1)x)")));
  CHECK(generator(1) == FirstOrderOp::vector_field(fx("(1+(x-1)q)x")));
  CHECK(generator(2) == FirstOrderOp::vector_field(fx("x(qx-q+1)^2/(qx-x+1)")));
  CHECK(generator(-2) == FirstOrderOp::vector_field(fx("q(qx-x+1)^2/(qx-q+1)")));
  for (int n = -4; n <= 4; ++n) {
    const FirstOrderOp classical = FirstOrderOp::vector_field(RatFuncQX::x().pow(n + 1));
    CHECK(generator(n).specialize_q(1) == classical);
  }
}

TEST_CASE("application and brackets") {
  const RatFuncQX x = RatFuncQX::x();
  CHECK(generator(-1).apply(x * x) == fx("2x(1+(q-1)x)"));
  const FirstOrderOp a{x, x * x};
  const FirstOrderOp b{RatFuncQX(1), x};
  CHECK(a.apply(x) == x * x + x * x);
  // [x + x^2 d, 1 + x d] = (x^2 * 0 - x * 1) + (x^2 * 1 - x * 2x) d
  CHECK(bracket(a, b) == FirstOrderOp(-x, -(x * x)));
  CHECK(bracket(a, a).is_zero());
}

TEST_CASE("brackets of generators match the independent oracle") {
  const RatFuncQ q = RatFuncQ::q();
  const auto check = [](int i, int j, const Combination& expected) {
    CAPTURE(i);
    CAPTURE(j);
    CHECK(bracket(generator(i), generator(j)) == realize(expected));
    CHECK(realize(witt_bracket(i, j)) == realize(expected));
  };
  check(-1, 0, {{-1, q * q - q + 1}, {0, q - 1}});
  check(-1, 1, {{-1, q - 1}, {0, RatFuncQ(2)}, {1, 1 - q}});
  check(0, 1, {{0, 1 - q}, {1, q * q - q + 1}});
  check(1, 2, {{2, q - 1}, {3, RatFuncQ(1)}});
  check(-2, 1, {{-2, 2 * (q - 1)}, {-1, q * q + q + 1}, {0, q - 1}});
  check(2, -2, {{-1, -3 * q * (q - 1)}, {0, -4 * q}, {1, 3 * q * (q - 1)}});
  check(-1, 3, {{0, (q - 1) * (q - 1)}, {1, -(q - 1) * (q * q - q + 1)}, {2, (q + 1) * (q + 1)}, {3, -3 * (q - 1)}});
  check(0, 3,
        {{0, -(q - 1) * (q - 1) * (q - 1)},
         {1, (q - 1) * (q - 1) * (q * q - q + 1)},
         {2, -(q - 1) * (q * q - q + 1)},
         {3, 3 * (q * q - q + 1)}});
}

TEST_CASE("combination text") {
  const RatFuncQ q = RatFuncQ::q();
  CHECK(combination_str({{3, RatFuncQ(1)}, {2, q - 1}}) == "(1)*D3 + (q-1)*D2");
  CHECK(combination_str({}) == "0");
}

TEST_CASE("eigenfunctions") {
  const RatFuncQ q = RatFuncQ::q();
  const RatFuncQX g = transition_map();
  CHECK(eigencheck(generator(0), g, q * q - q + 1));
  CHECK(!eigencheck(generator(0), g, q));
}

TEST_CASE("conjugation") {
  const FirstOrderOp d1 = conjugate_by(generator(-1), q_inversion());
  const RatFuncQX f = fx("(x^2+q)/(x+3)");
  const ProjMap s = q_inversion();
  const ProjMap s_inv = s.adjugate();
  CHECK(d1.apply(f) == apply_fn(s, generator(-1).apply(apply_fn(s_inv, f))));
}

TEST_CASE("anti-commuting family and discriminant") {
  const RatFuncQ q = RatFuncQ::q();
  CHECK(anticommuting_family_check({RatFuncQ(1), RatFuncQ(0)}));
  CHECK(anticommuting_family_check({q + 2, 1 - q}));
  CHECK(AntiCommFamily{RatFuncQ(1), RatFuncQ(0)}.op() == FirstOrderOp::vector_field(fx("1-qx^2")));
  CHECK(discriminant_identity());
}

TEST_CASE("reparametrization") {
  const RatFuncQ q = RatFuncQ::q();
  const FirstOrderOp r = reparametrize(generator(-1), ProjMap::identity());
  CHECK(r == generator(-1));
  CHECK_THROWS_AS(reparametrize(FirstOrderOp::multiplication(RatFuncQX(1)), q_translation()), MathError);
  // d in the coordinate xi = q x + 1 is q d/dxi.
  CHECK(reparametrize(FirstOrderOp::vector_field(RatFuncQX(1)), q_translation()) ==
        FirstOrderOp::vector_field(RatFuncQX(q)));
}

TEST_CASE("operator suites") {
  for (const VerifyReport& r : {gq_action_suite(4), opalg_suite(4, 1)}) {
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.pass);
    }
  }
}
