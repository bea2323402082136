#pragma once

// Structure constants of the deformed Witt algebra and the Lie-theoretic
// checks built on them.

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "qdeform/opalg.hpp"
#include "qdeform/report.hpp"
#include "qdeform/rings.hpp"

namespace qdeform {

// [D_i, D_j] expanded in the D basis from the closed-form bracket families.
Combination witt_bracket(int i, int j);

// Name of the bracket family that produces [D_i, D_j] (possibly after
// antisymmetry), e.g. "[D0,Dn]" or "[D(n+r),D-n]".
std::string witt_family(int i, int j);

// c(i, j, k) for |i|, |j| <= 3W, filled once and read-only afterwards.
class StructTable {
public:
  explicit StructTable(int window);

  int window() const { return window_; }
  int bound() const { return bound_; }
  const Combination& bracket(int i, int j) const;
  RatFuncQ coeff(int i, int j, int k) const;

  // The same table with every coefficient replaced by f(coefficient).
  StructTable transformed(const std::function<RatFuncQ(const RatFuncQ&)>& f) const;

private:
  StructTable() = default;
  int window_ = 0;
  int bound_ = 0;
  std::map<std::pair<int, int>, Combination> rows_;
};

// Linear algebra on combinations.
void add_to(Combination& acc, int k, const RatFuncQ& c);
Combination bracket_comb(const Combination& a, const Combination& b, const StructTable& table);

// sum_cyc [[D_i, D_j], D_k] computed from the table alone.
Combination jacobi_residual(const StructTable& table, int i, int j, int k);

// 2x2 matrices over Q(s), used for the representation with q = s^2.
struct Mat2Q {
  RatFuncQ a, b, c, d;

  RatFuncQ trace() const { return a + d; }
  friend Mat2Q operator+(const Mat2Q& x, const Mat2Q& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
  friend Mat2Q operator-(const Mat2Q& x, const Mat2Q& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  friend Mat2Q operator*(const Mat2Q& x, const Mat2Q& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2Q operator*(const RatFuncQ& s, const Mat2Q& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
  friend bool operator==(const Mat2Q& x, const Mat2Q& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  std::string str() const;
};

Mat2Q commutator(const Mat2Q& x, const Mat2Q& y);

// The matrices of D_{-1}, D_0, D_1 in the 2-dimensional representation; the
// variable of the returned rational functions is s = q^{1/2}.
std::array<Mat2Q, 3> rep2_matrices();

VerifyReport sl2_theorem_check();
VerifyReport witt_theorem_check(int window, unsigned jobs = 1);
VerifyReport jacobi_abstract(int window, unsigned jobs = 1);
VerifyReport heisenberg_check();
VerifyReport mod_square_experiments(int window = 3);
VerifyReport iso_and_rep2_check();

}  // namespace qdeform
