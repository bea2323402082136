#include "doctest.h"

#include <random>

#include "qdeform/moebius.hpp"
#include "qdeform/parse.hpp"
#include "qdeform/rings.hpp"

using namespace qdeform;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 17);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

RatFuncQ random_ratfunc(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-5, 5);
  std::vector<Rational> n, d;
  for (int i = 0; i < 3; ++i) n.emplace_back(c(rng));
  for (int i = 0; i < 2; ++i) d.emplace_back(c(rng));
  d.emplace_back(1);
  return RatFuncQ(PolyQ(n), PolyQ(d));
}

}  // namespace

TEST_CASE("polynomial arithmetic and gcd") {
  const PolyQ q = PolyQ::variable();
  CHECK((q + 1) * (q - 1) == q.pow(2) - 1);
  CHECK(gcd(q.pow(2) - 1, q.pow(2) + 2 * q + 1) == q + 1);
  CHECK(gcd(2 * q + 2, PolyQ(3)) == PolyQ(1));
  const auto [quo, rem] = divmod(q.pow(3) + 1, q + 1);
  CHECK(quo == q.pow(2) - q + 1);
  CHECK(rem.is_zero());
  CHECK((q.pow(3) - 2 * q + 5).str() == "q^3-2*q+5");
  CHECK(PolyQ(std::vector<Rational>{Rational(1), Rational(0), Rational(-3, 2)}).str() == "-3/2*q^2+1");
  CHECK((q.pow(2) + q).eval(Rational(1, 2)) == Rational(3, 4));
}

TEST_CASE("rational functions are stored in canonical form") {
  const RatFuncQ q = RatFuncQ::q();
  const RatFuncQ f = (q * q - 1) / (2 * q + 2);
  CHECK(f.num() == PolyQ(std::vector<Rational>{Rational(-1, 2), Rational(1, 2)}));
  CHECK(f.den() == PolyQ(1));
  CHECK(((1 + q) / (1 - q)).str() == "(-q-1)/(q-1)");
  CHECK_THROWS_AS(RatFuncQ(1) / RatFuncQ(0), DivisionByZero);
  CHECK_THROWS_AS(((q - 1).inverse()).eval(1), MathError);
}

TEST_CASE("equal expressions built in different association orders coincide") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const RatFuncQ a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(11);
  int tested = 0;
  for (int t = 0; t < 200; ++t) {
    const RatFuncQ a = random_ratfunc(rng), b = random_ratfunc(rng);
    const Rational q0 = random_rational(rng);
    if (a.den().eval(q0) == 0 || b.den().eval(q0) == 0) continue;
    const Rational av = a.eval(q0), bv = b.eval(q0);
    CHECK((a + b).eval(q0) == av + bv);
    CHECK((a - b).eval(q0) == av - bv);
    CHECK((a * b).eval(q0) == av * bv);
    if (bv != 0) CHECK((a / b).eval(q0) == av / bv);
    ++tested;
  }
  CHECK(tested > 150);
}

TEST_CASE("q -> 1/q substitution") {
  const RatFuncQ q = RatFuncQ::q();
  CHECK(q_inverse(1 + q * q) == (q * q + 1) / (q * q));
  CHECK(substitute_q(q * q - q + 1, q) == q * q - q + 1);
  for (const RatFuncQ& f : {q, q * q - q + 1, 1 - q, q - 1, RatFuncQ(-1), (q + 1) / (q * q - q + 1)}) {
    CHECK(q_inverse(q_inverse(f)) == f);
  }
}

TEST_CASE("arithmetic dispatch") {
  const RatFuncQ q = RatFuncQ::q();
  CHECK(ratfunc_arith(q, 1 - q, ArithOp::add) == RatFuncQ(1));
  CHECK(ratfunc_arith(q, q, ArithOp::div) == RatFuncQ(1));
  CHECK_THROWS_AS(ratfunc_arith(q, RatFuncQ(0), ArithOp::div), MathError);
}

TEST_CASE("reduction modulo (q-1)^2") {
  const RatFuncQ q = RatFuncQ::q();
  CHECK(mod_square_reduce(q * q - q + 1) == ModSquareElem(1, 1));
  CHECK(mod_square_reduce((q - 1) * (q - 1)).is_zero());
  CHECK(mod_square_reduce(q * q) == ModSquareElem(1, 2));
  CHECK(mod_square_reduce(1 / (q + 1)) == ModSquareElem(Rational(1, 2), Rational(-1, 4)));
  CHECK_THROWS_AS(mod_square_reduce(1 / (q - 1)), MathError);
  CHECK_THROWS_AS(ModSquareElem(1, 1) / ModSquareElem(0, 1), MathError);
  const ModSquareElem a(2, 3), b(5, -1);
  CHECK((a * b) / b == a);
  CHECK(mod_square_reduce(a.lift() * b.lift()) == a * b);
}

TEST_CASE("bivariate functions") {
  const RatFuncQX g = transition_map();
  const RatFuncQX x = RatFuncQX::x();
  const RatFuncQ q = RatFuncQ::q();
  CHECK(g * g.swap_qx() == RatFuncQX(RatFuncQ(1)));
  CHECK(g.compose(RatFuncQX(RatFuncQ(0))) == RatFuncQX(1 - q));
  const RatFuncQX s = q_inversion().as_function();
  CHECK(g.compose(s) == RatFuncQX(-q) / g);
  CHECK_THROWS_AS((1 / x).compose(RatFuncQX(RatFuncQ(0))), MathError);
  CHECK(g.eval(2, 3) == Rational(5, 4));
  CHECK(g.specialize_q(1) == x);
}

TEST_CASE("bivariate derivative rules") {
  std::mt19937_64 rng(3);
  const RatFuncQX x = RatFuncQX::x();
  const RatFuncQX q = RatFuncQX::q();
  const RatFuncQX f = (x * x + q) / (x - q + 3);
  const RatFuncQX h = (q * x + 1) / (x * x + 1);
  CHECK((f * h).derivative() == f.derivative() * h + f * h.derivative());
  const RatFuncQX phi = transition_map();
  CHECK(f.compose(phi).derivative() == f.derivative().compose(phi) * phi.derivative());
  for (int t = 0; t < 100; ++t) {
    const Rational q0 = random_rational(rng), x0 = random_rational(rng);
    Rational inner;
    try {
      inner = h.eval(q0, x0);
    } catch (const MathError&) {
      continue;
    }
    Rational outer;
    try {
      outer = f.eval(q0, inner);
    } catch (const MathError&) {
      continue;
    }
    CHECK(f.compose(h).eval(q0, x0) == outer);
  }
}

TEST_CASE("parsing") {
  const RatFuncQ q = RatFuncQ::q();
  CHECK(parse_ratfunc("(q^3+q^2+2*q+1)/(q+1)") == (q * q * q + q * q + 2 * q + 1) / (q + 1));
  CHECK(parse_ratfunc("1+2q+q^2") == (q + 1) * (q + 1));
  CHECK(parse_ratfunc("(q+1)(q-1)") == q * q - 1);
  CHECK(parse_ratfunc("-q^-1") == -1 / q);
  CHECK(parse_ratfunc_qx("(1+(x-1)q)/(1+(q-1)x)") == transition_map());
  CHECK_THROWS_AS(parse_ratfunc("x+1"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("(q+1"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("q/0"), ParseError);
  try {
    parse_ratfunc("q+*2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
  const RationalInput r = parse_rational("-6/4");
  CHECK(r.num == -3);
  CHECK(r.den == 2);
  CHECK(parse_rational("1/0", true).den == 0);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}
