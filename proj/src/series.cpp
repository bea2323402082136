#include "qdeform/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qdeform/opalg.hpp"

namespace qdeform {

TruncSeries::TruncSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries::TruncSeries(int order, std::vector<RatFuncQ> coeffs) : TruncSeries(order) {
  const std::size_t n = std::min(coeffs.size(), c_.size());
  for (std::size_t i = 0; i < n; ++i) c_[i] = std::move(coeffs[i]);
}

bool TruncSeries::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

TruncSeries operator*(const RatFuncQ& s, const TruncSeries& a) {
  TruncSeries r(a);
  for (auto& c : r.c_) c *= s;
  return r;
}

TruncSeries TruncSeries::derivative() const {
  TruncSeries r(std::max(order() - 1, 0));
  for (int k = 1; k <= order(); ++k) r[k - 1] = k * c_[static_cast<std::size_t>(k)];
  return r;
}

std::vector<Rational> TruncSeries::specialize(const Rational& q0) const {
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.eval(q0));
  return out;
}

std::string TruncSeries::str() const {
  std::ostringstream os;
  for (int k = 0; k <= order(); ++k) os << "c" << k << " = " << c_[static_cast<std::size_t>(k)].str() << "\n";
  return os.str();
}

TruncSeries tsallis_series(int order) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  const RatFuncQ q = RatFuncQ::q();
  TruncSeries e(order);
  e[0] = 1;
  for (int k = 0; k < order; ++k) e[k + 1] = e[k] * (1 - k * (q - 1)) / (k + 1);
  return e;
}

TruncSeries tsallis_binomial(int order) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  const RatFuncQ q = RatFuncQ::q();
  const RatFuncQ alpha = (q - 1).inverse();
  TruncSeries e(order);
  RatFuncQ binom(1);
  RatFuncQ power(1);
  for (int k = 0; k <= order; ++k) {
    e[k] = binom * power;
    binom = binom * (alpha - k) / (k + 1);
    power *= q - 1;
  }
  return e;
}

TruncSeries ode_residual(const TruncSeries& e) {
  const RatFuncQ q = RatFuncQ::q();
  const TruncSeries d = e.derivative();
  TruncSeries r(d.order());
  for (int k = 0; k <= r.order(); ++k) {
    r[k] = d[k] - e[k];
    if (k >= 1) r[k] += (q - 1) * d[k - 1];
  }
  return r;
}

PolyQ tsallis_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  return PolyQ(std::vector<Rational>{Rational(1), Rational(1, m)}).pow(static_cast<unsigned>(m));
}

VerifyReport series_suite(int order) {
  Stopwatch sw;
  VerifyReport rep("series");
  const RatFuncQ q = RatFuncQ::q();
  const int n = std::max(order, 60);
  const TruncSeries e = tsallis_series(n);
  const TruncSeries b = tsallis_binomial(n);

  rep.add("c0 = c1 = 1", e[0] == RatFuncQ(1) && e[1] == RatFuncQ(1));
  rep.add("c2 = (2-q)/2", e[2] == (2 - q) / 2, "got " + e[2].str());

  std::string agree_w;
  for (int k = 0; k <= n; ++k) {
    if (!(e[k] == b[k])) {
      agree_w = "k=" + std::to_string(k);
      break;
    }
  }
  rep.add("recurrence and binomial coefficients agree for k <= " + std::to_string(n), agree_w.empty(),
          "differ at " + agree_w);

  const TruncSeries res = ode_residual(tsallis_series(order));
  rep.add("(1+(q-1)x) E' - E vanishes through order " + std::to_string(order - 1), res.is_zero());
  TruncSeries one(order);
  one[0] = 1;
  rep.add("constant 1 is not a solution", !ode_residual(one).is_zero());

  std::string fact_w;
  Rational fact(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact /= k;
    if (e[k].eval(1) != fact) fact_w = "k=" + std::to_string(k);
  }
  rep.add("q=1 gives c_k = 1/k!", fact_w.empty(), "fails at " + fact_w);
  {
    TruncSeries exp_series(order);
    Rational f(1);
    for (int k = 0; k <= order; ++k) {
      if (k > 0) f /= k;
      exp_series[k] = f;
    }
    const std::vector<Rational> r = ode_residual(exp_series).specialize(1);
    bool zero = true;
    for (const auto& v : r) zero = zero && v == 0;
    rep.add("q=1 residual of sum x^k/k! is zero", zero);
  }

  for (int m = 1; m <= 6; ++m) {
    const Rational q0 = 1 + Rational(1, m);
    const std::string tag = " at q = 1+1/" + std::to_string(m);
    const std::vector<Rational> coeffs = e.specialize(q0);
    const PolyQ poly(coeffs);
    const PolyQ expected = tsallis_polynomial(m);
    rep.add("series is (1+x/m)^m" + tag, poly == expected, "got " + poly.str('x'));
    // E(qx+1) = E(1) E(x)
    const PolyQ affine(std::vector<Rational>{Rational(1), q0});
    rep.add("E(qx+1) = E(1) E(x)" + tag, expected.compose(affine) == expected.eval(1) * expected);
    // D-1 E = E as an operator identity on the polynomial.
    std::vector<PolyQ> as_qx;
    for (const auto& c : expected.coeffs()) as_qx.emplace_back(c);
    const RatFuncQX f{PolyQX(as_qx)};
    rep.add("D-1 E = E" + tag, generator(-1).specialize_q(q0).apply(f) == f);
  }

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace qdeform
