#include "doctest.h"

#include "qdeform/parse.hpp"
#include "qdeform/qrationals.hpp"

using namespace qdeform;

namespace {

std::vector<long> terms(const EvenCF& cf) {
  std::vector<long> out;
  for (const auto& t : cf.terms) out.push_back(t.get_si());
  return out;
}

struct Expected {
  long r, s;
  const char* sharp;
  const char* flat;
};

// Independent oracle: symbolic evaluation of the nested continued fraction
// [a1]_q + q^a1/([a2]_{1/q} + q^-a2/(...)) for sharp, and of the matrix word
// T^a1 U^a2 ... applied to 1/(1-q) for flat.
const Expected kCorpus[] = {
    {5, 2, "(q^3+q^2+2*q+1)/(q+1)", "(q^4+q^3+q^2+q+1)/(q^2+1)"},
    {7, 3, "(q^4+q^3+2*q^2+2*q+1)/(q^2+q+1)", "(q^5+q^4+2*q^3+q^2+q+1)/(q^3+q^2+1)"},
    {3, 1, "q^2+q+1", "q^3+q+1"},
    {-1, 1, "-1/q", "-1/q^2"},
    {1, 2, "q/(q+1)", "q^2/(q^2+1)"},
    {-5, 3, "(-q^3-q^2-2*q-1)/(q^4+q^3+q^2)", "(-q^4-q^3-q^2-q-1)/(q^5+q^4+q^2)"},
    {13, 5, "(q^5+2*q^4+3*q^3+3*q^2+3*q+1)/(q^3+q^2+2*q+1)",
     "(q^6+2*q^5+2*q^4+3*q^3+2*q^2+2*q+1)/(q^4+q^3+q^2+q+1)"},
    {2, 7, "(q^4+q^3)/(q^4+2*q^3+2*q^2+q+1)", "(q^5+q^3)/(q^5+q^4+2*q^3+q^2+q+1)"},
};

}  // namespace

TEST_CASE("even continued fractions") {
  CHECK(terms(even_cf(5, 2)) == std::vector<long>{2, 2});
  CHECK(terms(even_cf(7, 3)) == std::vector<long>{2, 3});
  CHECK(terms(even_cf(13, 5)) == std::vector<long>{2, 1, 1, 2});
  CHECK(terms(even_cf(2, 7)) == std::vector<long>{0, 3, 1, 1});
  CHECK(terms(even_cf(0, 1)) == std::vector<long>{-1, 1});
  CHECK(terms(even_cf(2, 1)) == std::vector<long>{1, 1});
  CHECK(terms(even_cf(-5, 3)) == std::vector<long>{-2, 3});
  CHECK(even_cf(1, 0).is_infinity());
  CHECK(even_cf(5, 2).to_json() == "[2,2]");
  CHECK_THROWS_AS(even_cf(0, 0), PreconditionError);
  for (long r = -12; r <= 12; ++r) {
    for (long s = 1; s <= 12; ++s) {
      const EvenCF cf = even_cf(r, s);
      CHECK(cf.terms.size() % 2 == 0);
      for (std::size_t i = 1; i < cf.terms.size(); ++i) CHECK(cf.terms[i] >= 1);
      BigInt g = gcd(BigInt(r), BigInt(s));
      const auto [n, d] = cf_value(cf);
      CHECK(n == r / g);
      CHECK(d == s / g);
    }
  }
}

TEST_CASE("special values") {
  CHECK(q_sharp(0, 1).str() == "0");
  CHECK(q_sharp(1, 1).str() == "1");
  CHECK(q_sharp(2, 1).str() == "q+1");
  CHECK(q_flat(0, 1).str() == "(q-1)/(q)");
  CHECK(q_flat(1, 1).str() == "q");
  CHECK(q_flat(2, 1).str() == "q^2+1");
  CHECK(q_sharp(1, 0).is_infinity());
  CHECK(q_flat(1, 0).value().value() == parse_ratfunc("-1/(q-1)"));
}

TEST_CASE("q-rationals match the independent oracle") {
  for (const auto& e : kCorpus) {
    CAPTURE(e.r);
    CAPTURE(e.s);
    CHECK(q_sharp(e.r, e.s).value().value() == parse_ratfunc(e.sharp));
    CHECK(q_flat(e.r, e.s).value().value() == parse_ratfunc(e.flat));
    CHECK(q_sharp(e.r, e.s).value().value().eval(1) == Rational(e.r, e.s));
    CHECK(transition_check(e.r, e.s));
    if (e.r > e.s) CHECK(positivity_check(e.r, e.s));
  }
}

TEST_CASE("integral normal form") {
  const QRatPair p = q_sharp(-5, 3);
  CHECK(p.num.str() == "-q^3-q^2-2*q-1");
  CHECK(p.den.str() == "q^4+q^3+q^2");
  CHECK(q_sharp(6, 4).str() == q_sharp(3, 2).str());
}

TEST_CASE("q-integers") {
  const RatFuncQ q = RatFuncQ::q();
  CHECK(q_integer(3) == 1 + q + q * q);
  CHECK(q_integer(0) == RatFuncQ(0));
  CHECK(q_integer(-2) == -(1 + q) / (q * q));
  for (long n = -5; n <= 5; ++n) CHECK(q_integer(n + 1) == q * q_integer(n) + 1);
}

TEST_CASE("positivity precondition") {
  CHECK_THROWS_AS(positivity_check(1, 2), PreconditionError);
  CHECK_THROWS_AS(positivity_check(1, 1), PreconditionError);
}

TEST_CASE("corpus sweep") {
  const VerifyReport r = qrationals_suite(10);
  CHECK(r.all_pass());
  CHECK(r.checks.size() >= 5);
}
