#pragma once

// Exact arithmetic over Q: univariate polynomials and rational functions in
// the deformation parameter q, bivariate rational functions in (q, x), and the
// quotient ring Q[q]/((q-1)^2).

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdeform {

using BigInt = mpz_class;
using Rational = mpq_class;

// Raised for division by zero, evaluation at a pole, non-invertible elements
// of a quotient ring, and similar domain violations.
struct MathError : public std::domain_error {
  using std::domain_error::domain_error;
};

struct DivisionByZero : public MathError {
  DivisionByZero() : MathError("division by zero") {}
};

// ---------------------------------------------------------------------------
// PolyQ: dense polynomial over Q, ascending coefficients, no trailing zeros.

class PolyQ {
public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);
  PolyQ(long c);  // NOLINT(google-explicit-constructor)
  PolyQ(const Rational& c);  // NOLINT(google-explicit-constructor)

  static PolyQ monomial(const Rational& c, int degree);
  static PolyQ variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(int i) const;
  const Rational& leading() const;

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  PolyQ& operator*=(const Rational& s);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

  PolyQ pow(unsigned n) const;
  PolyQ derivative() const;
  PolyQ monic() const;
  Rational eval(const Rational& at) const;
  // p(inner)
  PolyQ compose(const PolyQ& inner) const;
  // Largest k with q^k | p (0 for the zero polynomial).
  int low_order() const;

  // Descending-power text, e.g. "q^3+q^2+2*q+1".
  std::string str(char var = 'q') const;

private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
// Exact quotient; throws MathError when b does not divide a.
PolyQ exact_div(const PolyQ& a, const PolyQ& b);
// Monic gcd; gcd(0, 0) = 0.
PolyQ gcd(PolyQ a, PolyQ b);

// ---------------------------------------------------------------------------
// RatFuncQ: element of Q(q) in canonical form (coprime, monic denominator).

class RatFuncQ {
public:
  RatFuncQ() : den_(1) {}
  RatFuncQ(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFuncQ(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFuncQ(PolyQ p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFuncQ(PolyQ num, PolyQ den);

  static RatFuncQ q() { return RatFuncQ(PolyQ::variable()); }

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFuncQ operator-() const;
  RatFuncQ& operator+=(const RatFuncQ& o);
  RatFuncQ& operator-=(const RatFuncQ& o);
  RatFuncQ& operator*=(const RatFuncQ& o);
  RatFuncQ& operator/=(const RatFuncQ& o);
  friend RatFuncQ operator+(RatFuncQ a, const RatFuncQ& b) { return a += b; }
  friend RatFuncQ operator-(RatFuncQ a, const RatFuncQ& b) { return a -= b; }
  friend RatFuncQ operator*(RatFuncQ a, const RatFuncQ& b) { return a *= b; }
  friend RatFuncQ operator/(RatFuncQ a, const RatFuncQ& b) { return a /= b; }
  friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFuncQ inverse() const;
  RatFuncQ pow(int n) const;
  Rational eval(const Rational& at) const;  // throws at a pole
  RatFuncQ derivative() const;
  // f(image(q)); throws when the denominator vanishes identically.
  RatFuncQ substitute(const RatFuncQ& image) const;

  std::string str(char var = 'q') const;

private:
  PolyQ num_;
  PolyQ den_;
};

enum class ArithOp { add, sub, mul, div };

RatFuncQ ratfunc_arith(const RatFuncQ& lhs, const RatFuncQ& rhs, ArithOp op);
RatFuncQ substitute_q(const RatFuncQ& f, const RatFuncQ& image);
RatFuncQ q_inverse(const RatFuncQ& f);  // q -> 1/q

// ---------------------------------------------------------------------------
// ModSquareElem: a + b(q-1) in Q[q]/((q-1)^2).

class ModSquareElem {
public:
  ModSquareElem() = default;
  ModSquareElem(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  ModSquareElem(long c) : a_(c) {}  // NOLINT(google-explicit-constructor)

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_unit() const { return a_ != 0; }

  ModSquareElem operator-() const { return {-a_, -b_}; }
  friend ModSquareElem operator+(const ModSquareElem& x, const ModSquareElem& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend ModSquareElem operator-(const ModSquareElem& x, const ModSquareElem& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend ModSquareElem operator*(const ModSquareElem& x, const ModSquareElem& y) {
    return {x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend ModSquareElem operator/(const ModSquareElem& x, const ModSquareElem& y);
  friend bool operator==(const ModSquareElem& x, const ModSquareElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  // The polynomial a + b(q-1).
  RatFuncQ lift() const;
  std::string str() const;

private:
  Rational a_;
  Rational b_;
};

// Reduction Q(q) -> Q[q]/((q-1)^2); throws when (q-1) divides the denominator.
ModSquareElem mod_square_reduce(const RatFuncQ& f);

// ---------------------------------------------------------------------------
// PolyQX: polynomial in x with coefficients in Q[q] (recursive dense).

class PolyQX {
public:
  PolyQX() = default;
  explicit PolyQX(std::vector<PolyQ> coeffs);
  PolyQX(PolyQ c);  // NOLINT(google-explicit-constructor)
  PolyQX(long c) : PolyQX(PolyQ(c)) {}  // NOLINT(google-explicit-constructor)

  static PolyQX x() { return PolyQX(std::vector<PolyQ>{PolyQ(), PolyQ(1)}); }
  static PolyQX q() { return PolyQX(PolyQ::variable()); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int q_degree() const;
  bool is_zero() const { return c_.empty(); }
  const std::vector<PolyQ>& coeffs() const { return c_; }
  const PolyQ& coeff(int i) const;
  const PolyQ& leading() const { return c_.back(); }

  PolyQX operator-() const;
  PolyQX& operator+=(const PolyQX& o);
  PolyQX& operator-=(const PolyQX& o);
  friend PolyQX operator+(PolyQX a, const PolyQX& b) { return a += b; }
  friend PolyQX operator-(PolyQX a, const PolyQX& b) { return a -= b; }
  friend PolyQX operator*(const PolyQX& a, const PolyQX& b);
  friend PolyQX operator*(const PolyQ& s, const PolyQX& a);
  friend bool operator==(const PolyQX& a, const PolyQX& b) { return a.c_ == b.c_; }

  PolyQX pow(unsigned n) const;
  PolyQX derivative_x() const;
  PolyQ content() const;  // monic gcd of the coefficients
  PolyQ eval_x(const PolyQ& x_value) const;
  std::vector<Rational> eval_q(const Rational& q0) const;  // ascending in x
  Rational eval(const Rational& q0, const Rational& x0) const;
  PolyQX transpose() const;  // swap the roles of q and x

  std::string str() const;

private:
  void trim();
  std::vector<PolyQ> c_;
};

PolyQX exact_div(const PolyQX& a, const PolyQX& b);
PolyQX exact_div(const PolyQX& a, const PolyQ& s);
// gcd in Q[q, x], normalized so that the leading q-coefficient of the
// leading x-coefficient is 1.
PolyQX gcd(const PolyQX& a, const PolyQX& b);

// ---------------------------------------------------------------------------
// RatFuncQX: element of Q(q)(x) = Frac(Q[q, x]), canonical: numerator and
// denominator coprime in Q[q, x]; the denominator's leading coefficient in x
// is a monic polynomial in q.

class RatFuncQX {
public:
  RatFuncQX() : den_(1) {}
  RatFuncQX(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFuncQX(const RatFuncQ& c);  // NOLINT(google-explicit-constructor)
  RatFuncQX(PolyQX p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFuncQX(PolyQX num, PolyQX den);

  static RatFuncQX x() { return RatFuncQX(PolyQX::x()); }
  static RatFuncQX q() { return RatFuncQX(PolyQX::q()); }

  const PolyQX& num() const { return num_; }
  const PolyQX& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // True when the value does not depend on x.
  bool is_constant_in_x() const { return num_.degree() <= 0 && den_.degree() == 0; }
  RatFuncQ as_ratfunc_q() const;  // throws unless constant in x

  // Coefficients of the numerator and denominator over Q(q) with the
  // denominator made monic in x.
  std::vector<RatFuncQ> num_coeffs() const;
  std::vector<RatFuncQ> den_coeffs() const;

  RatFuncQX operator-() const;
  RatFuncQX& operator+=(const RatFuncQX& o);
  RatFuncQX& operator-=(const RatFuncQX& o);
  RatFuncQX& operator*=(const RatFuncQX& o);
  RatFuncQX& operator/=(const RatFuncQX& o);
  friend RatFuncQX operator+(RatFuncQX a, const RatFuncQX& b) { return a += b; }
  friend RatFuncQX operator-(RatFuncQX a, const RatFuncQX& b) { return a -= b; }
  friend RatFuncQX operator*(RatFuncQX a, const RatFuncQX& b) { return a *= b; }
  friend RatFuncQX operator/(RatFuncQX a, const RatFuncQX& b) { return a /= b; }
  friend bool operator==(const RatFuncQX& a, const RatFuncQX& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFuncQX inverse() const;
  RatFuncQX pow(int n) const;
  RatFuncQX derivative() const;  // d/dx
  // f(q, g(q, x)); throws MathError when g lands on a pole of f identically.
  RatFuncQX compose(const RatFuncQX& g) const;
  // f(image(q), x)
  RatFuncQX substitute_q(const RatFuncQ& image) const;
  // f(x, q)
  RatFuncQX swap_qx() const;
  // Specialize q = q0; the result is constant in q. Throws at a pole.
  RatFuncQX specialize_q(const Rational& q0) const;
  Rational eval(const Rational& q0, const Rational& x0) const;

  std::string str() const;

private:
  struct Canonical {};
  RatFuncQX(PolyQX num, PolyQX den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_unit();
  PolyQX num_;
  PolyQX den_;
};

// The q-rational transition map (1+(x-1)q)/(1+(q-1)x).
RatFuncQX transition_map();

}  // namespace qdeform
