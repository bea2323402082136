#pragma once

// Truncated power series in x over Q(q) and the Tsallis exponential
// E_q(x) = (1+(q-1)x)^{1/(q-1)}.

#include <string>
#include <vector>

#include "qdeform/report.hpp"
#include "qdeform/rings.hpp"

namespace qdeform {

// c_0 + c_1 x + ... + c_N x^N modulo x^{N+1}.
class TruncSeries {
public:
  explicit TruncSeries(int order);
  TruncSeries(int order, std::vector<RatFuncQ> coeffs);  // pads or truncates to order

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<RatFuncQ>& coeffs() const { return c_; }
  const RatFuncQ& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  RatFuncQ& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  bool is_zero() const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const RatFuncQ& s, const TruncSeries& a);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

  // d/dx; the result has order N-1.
  TruncSeries derivative() const;
  TruncSeries truncated(int order) const { return TruncSeries(order, c_); }
  // Coefficients at q = q0 (throws at a pole).
  std::vector<Rational> specialize(const Rational& q0) const;
  std::string str() const;

private:
  std::vector<RatFuncQ> c_;
};

// Coefficients from c_0 = 1, c_{k+1} = c_k (1 - k(q-1))/(k+1).
TruncSeries tsallis_series(int order);

// Coefficients binom(alpha, k) (q-1)^k with alpha = 1/(q-1).
TruncSeries tsallis_binomial(int order);

// (1+(q-1)x) E' - E, of order N-1.
TruncSeries ode_residual(const TruncSeries& e);

// Coefficients of (1+x/m)^m, the value of E_q at q = 1+1/m.
PolyQ tsallis_polynomial(int m);

VerifyReport series_suite(int order = 50);

}  // namespace qdeform
