#pragma once

// First-order differential operators m(x) + v(x) d/dx with coefficients in
// Q(q)(x), and the deformed generators D_n.

#include <cstdint>
#include <map>
#include <string>

#include "qdeform/moebius.hpp"
#include "qdeform/report.hpp"
#include "qdeform/rings.hpp"

namespace qdeform {

class FirstOrderOp {
public:
  FirstOrderOp() = default;
  FirstOrderOp(RatFuncQX mult, RatFuncQX vec) : mult_(std::move(mult)), vec_(std::move(vec)) {}

  static FirstOrderOp vector_field(RatFuncQX v) { return {RatFuncQX(), std::move(v)}; }
  static FirstOrderOp multiplication(RatFuncQX m) { return {std::move(m), RatFuncQX()}; }

  const RatFuncQX& mult() const { return mult_; }
  const RatFuncQX& vec() const { return vec_; }
  bool is_zero() const { return mult_.is_zero() && vec_.is_zero(); }

  // m f + v f'
  RatFuncQX apply(const RatFuncQX& f) const;

  FirstOrderOp operator-() const { return {-mult_, -vec_}; }
  friend FirstOrderOp operator+(const FirstOrderOp& a, const FirstOrderOp& b) {
    return {a.mult_ + b.mult_, a.vec_ + b.vec_};
  }
  friend FirstOrderOp operator-(const FirstOrderOp& a, const FirstOrderOp& b) {
    return {a.mult_ - b.mult_, a.vec_ - b.vec_};
  }
  // Left multiplication by a function: f (m + v d) = f m + f v d.
  friend FirstOrderOp operator*(const RatFuncQX& f, const FirstOrderOp& a) {
    return {f * a.mult_, f * a.vec_};
  }
  friend bool operator==(const FirstOrderOp& a, const FirstOrderOp& b) {
    return a.mult_ == b.mult_ && a.vec_ == b.vec_;
  }

  FirstOrderOp specialize_q(const Rational& q0) const;
  FirstOrderOp substitute_q(const RatFuncQ& image) const;
  std::string str() const;

private:
  RatFuncQX mult_;
  RatFuncQX vec_;
};

// [m1 + v1 d, m2 + v2 d] = (v1 m2' - v2 m1') + (v1 v2' - v2 v1') d
FirstOrderOp bracket(const FirstOrderOp& a, const FirstOrderOp& b);

// C_phi o A o C_phi^{-1}, where C_phi f = f o phi.
FirstOrderOp conjugate_by(const FirstOrderOp& a, const ProjMap& phi);

// D_{-1} = (1+(q-1)x) d, D_0 = (1+(x-1)q)(1+(q-1)x) d, D_1 = (1+(x-1)q) x d,
// D_n = g_q D_{n-1} and D_{-n} = (q/g_q) D_{-n+1} for n > 1.
FirstOrderOp generator(int n);

// Linear combination sum_k c_k D_k.
using Combination = std::map<int, RatFuncQ>;
FirstOrderOp realize(const Combination& comb);
std::string combination_str(const Combination& comb);

bool eigencheck(const FirstOrderOp& a, const RatFuncQX& f, const RatFuncQ& alpha);

// p(x) d with p = p0 + p1 x - q p0 x^2.
struct AntiCommFamily {
  RatFuncQ p0;
  RatFuncQ p1;
  FirstOrderOp op() const;
};

bool anticommuting_family_check(const AntiCommFamily& fam);

// (-1+3q-q^2)^2 + 4q(1-q)^2 = (q^2-q+1)^2
bool discriminant_identity();

// The vector field A written in the coordinate xi = phi(x): the result's
// coefficient, as a function of xi, is (v phi') o phi^{-1}. Throws
// MathError when A has a multiplication part.
FirstOrderOp reparametrize(const FirstOrderOp& a, const ProjMap& phi);

// Exact identities for g_q under D_{-1}, D_0, D_1 and multiplication of the
// generators by g_q and q/g_q; window bounds the induction checks.
VerifyReport gq_action_suite(int window = 8);

// All operator-level identities, plus seeded randomized checks.
VerifyReport opalg_suite(int window = 8, std::uint64_t seed = 0);

}  // namespace qdeform
