#include "doctest.h"

#include "qdeform/lieverify.hpp"
#include "qdeform/opalg.hpp"

using namespace qdeform;

namespace {

bool is_zero(const Combination& c) {
  for (const auto& [k, v] : c) {
    if (!v.is_zero()) return false;
  }
  return true;
}

void require_pass(const VerifyReport& r) {
  CHECK(!r.checks.empty());
  for (const auto& c : r.checks) {
    CAPTURE(r.suite);
    CAPTURE(c.name);
    CAPTURE(c.witness);
    CHECK(c.pass);
  }
}

Mat2Q rep_of(const Combination& comb, const std::array<Mat2Q, 3>& m) {
  Mat2Q out{0, 0, 0, 0};
  for (const auto& [k, c] : comb) {
    REQUIRE(k >= -1);
    REQUIRE(k <= 1);
    const RatFuncQ s = RatFuncQ::q();
    out = out + c.substitute(s * s) * m[static_cast<std::size_t>(k + 1)];
  }
  return out;
}

}  // namespace

TEST_CASE("bracket family names") {
  CHECK(witt_family(0, 3) == "[D0,Dn]");
  CHECK(witt_family(0, -3) == "[D0,D-n]");
  CHECK(witt_family(2, 5) == "[Dn,D(n+r)]");
  CHECK(witt_family(-2, -5) == "[D-n,D(-n-r)]");
  CHECK(witt_family(-2, 2) == "[D-n,Dn]");
  CHECK(witt_family(4, -2) == "[D(n+r),D-n]");
}

TEST_CASE("structure table agrees with operator brackets") {
  const StructTable t(2);
  CHECK(t.bound() == 6);
  for (int i = -3; i <= 3; ++i) {
    for (int j = -3; j <= 3; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(realize(t.bracket(i, j)) == bracket(generator(i), generator(j)));
    }
  }
  const RatFuncQ q = RatFuncQ::q();
  CHECK(t.coeff(1, 2, 3) == RatFuncQ(1));
  CHECK(t.coeff(1, 2, 2) == q - 1);
  CHECK(t.coeff(1, 2, 7).is_zero());
  CHECK_THROWS(t.bracket(7, 0));
  CHECK_THROWS_AS(StructTable(0), std::invalid_argument);
}

TEST_CASE("Jacobi residuals") {
  const StructTable t(3);
  CHECK(is_zero(jacobi_residual(t, -1, 0, 1)));
  CHECK(is_zero(jacobi_residual(t, 1, 2, -2)));
  CHECK(is_zero(jacobi_residual(t, -3, 2, 3)));
  Combination acc;
  add_to(acc, 2, RatFuncQ(1));
  add_to(acc, 2, RatFuncQ(-1));
  CHECK(is_zero(acc));
}

TEST_CASE("reduction modulo (q-1)^2 breaks Jacobi") {
  const RatFuncQ q = RatFuncQ::q();
  const StructTable reduced = StructTable(3).transformed([](const RatFuncQ& c) { return mod_square_reduce(c).lift(); });
  const Combination r = jacobi_residual(reduced, -3, -2, 0);
  CHECK(!is_zero(r));
  for (const auto& [k, c] : r) {
    CAPTURE(k);
    CHECK(mod_square_reduce(c).is_zero());
  }
  CHECK(r.at(-3) == (q - 1) * (q - 1));
}

TEST_CASE("two-dimensional representation") {
  const auto m = rep2_matrices();
  const StructTable t(1);
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      const Mat2Q lhs = commutator(m[static_cast<std::size_t>(i + 1)], m[static_cast<std::size_t>(j + 1)]);
      CHECK(lhs == rep_of(t.bracket(i, j), m));
    }
  }
}

TEST_CASE("window preconditions") {
  CHECK_THROWS_AS(witt_theorem_check(1), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_abstract(0), std::invalid_argument);
  CHECK_THROWS_AS(mod_square_experiments(2), std::invalid_argument);
}

TEST_CASE("Lie algebra suites") {
  require_pass(sl2_theorem_check());
  require_pass(witt_theorem_check(3, 2));
  require_pass(jacobi_abstract(3, 2));
  require_pass(heisenberg_check());
  require_pass(mod_square_experiments(3));
  require_pass(iso_and_rep2_check());
}
