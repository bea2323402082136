#include "doctest.h"

#include "qdeform/series.hpp"

using namespace qdeform;

TEST_CASE("Tsallis coefficients") {
  const RatFuncQ q = RatFuncQ::q();
  const TruncSeries e = tsallis_series(5);
  CHECK(e.order() == 5);
  CHECK(e[0] == RatFuncQ(1));
  CHECK(e[1] == RatFuncQ(1));
  CHECK(e[2] == (2 - q) / 2);
  CHECK(e[3] == (2 - q) * (3 - 2 * q) / 6);
  CHECK(e[4] == (2 - q) * (3 - 2 * q) * (4 - 3 * q) / 24);
  CHECK(tsallis_binomial(5) == e);
  CHECK_THROWS_AS(tsallis_series(0), std::invalid_argument);
}

TEST_CASE("differential equation") {
  CHECK(ode_residual(tsallis_series(20)).is_zero());
  TruncSeries one(4);
  one[0] = 1;
  const TruncSeries r = ode_residual(one);
  CHECK(r.order() == 3);
  CHECK(r[0] == RatFuncQ(-1));
}

TEST_CASE("specializations") {
  const std::vector<Rational> at_one = tsallis_series(6).specialize(1);
  CHECK(at_one[4] == Rational(1, 24));
  CHECK(at_one[6] == Rational(1, 720));
  // q = 2: (1+x)^1
  const std::vector<Rational> at_two = tsallis_series(4).specialize(2);
  CHECK(at_two == std::vector<Rational>{1, 1, 0, 0, 0});
  // q = 3/2: (1+x/2)^2
  CHECK(tsallis_series(4).specialize(Rational(3, 2)) ==
        std::vector<Rational>{1, 1, Rational(1, 4), 0, 0});
  CHECK(tsallis_polynomial(2).coeffs() == std::vector<Rational>{1, 1, Rational(1, 4)});
}

TEST_CASE("series arithmetic") {
  const RatFuncQ q = RatFuncQ::q();
  TruncSeries a(3, {1, 1});
  TruncSeries b(3, {1, -1});
  const TruncSeries p = a * b;
  CHECK(p[0] == RatFuncQ(1));
  CHECK(p[1].is_zero());
  CHECK(p[2] == RatFuncQ(-1));
  CHECK((a + b)[0] == RatFuncQ(2));
  CHECK((a - b)[1] == RatFuncQ(2));
  CHECK((q * a)[1] == q);
  CHECK(a.derivative().order() == 2);
  CHECK(a.truncated(1).order() == 1);
}

TEST_CASE("series suite") {
  const VerifyReport r = series_suite(20);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
}
