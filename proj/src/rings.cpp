#include "qdeform/rings.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <utility>

namespace qdeform {

namespace {

const Rational& zero_rational() {
  static const Rational z(0);
  return z;
}

// "c*v^k" pieces joined with explicit signs, highest power first.
void append_term(std::ostringstream& os, bool& first, const Rational& c, const std::string& mono) {
  if (c == 0) return;
  Rational mag = abs(c);
  if (c < 0) {
    os << '-';
  } else if (!first) {
    os << '+';
  }
  if (mono.empty()) {
    os << mag.get_str();
  } else if (mag == 1) {
    os << mono;
  } else {
    os << mag.get_str() << '*' << mono;
  }
  first = false;
}

std::string power_str(char var, int k) {
  if (k == 0) return {};
  if (k == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(k);
}

std::optional<PolyQ> try_div(const PolyQ& a, const PolyQ& b) {
  auto [quo, rem] = divmod(a, b);
  if (!rem.is_zero()) return std::nullopt;
  return quo;
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyQ

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(long c) {
  if (c != 0) c_.emplace_back(c);
}

PolyQ::PolyQ(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

PolyQ PolyQ::monomial(const Rational& c, int degree) {
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& PolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero_rational();
  return c_[static_cast<std::size_t>(i)];
}

const Rational& PolyQ::leading() const { return c_.empty() ? zero_rational() : c_.back(); }

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) { return *this = *this * o; }

PolyQ& PolyQ::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyQ(std::move(r));
}

PolyQ PolyQ::pow(unsigned n) const {
  PolyQ result(1);
  PolyQ base = *this;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

PolyQ PolyQ::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return PolyQ(std::move(r));
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return {};
  PolyQ r = *this;
  r *= Rational(1) / leading();
  return r;
}

Rational PolyQ::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

PolyQ PolyQ::compose(const PolyQ& inner) const {
  PolyQ acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + PolyQ(*it);
  return acc;
}

int PolyQ::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<int>(i);
  }
  return 0;
}

std::string PolyQ::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) append_term(os, first, coeff(k), power_str(var, k));
  return os.str();
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {PolyQ(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv_lead = Rational(1) / b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational f = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quo[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.coeff(j);
  }
  return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ exact_div(const PolyQ& a, const PolyQ& b) {
  auto quo = try_div(a, b);
  if (!quo) throw MathError("inexact polynomial division");
  return *std::move(quo);
}

PolyQ gcd(PolyQ a, PolyQ b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return PolyQ(1);
    PolyQ r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------------------
// RatFuncQ

RatFuncQ::RatFuncQ(PolyQ num, PolyQ den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den_ = PolyQ(1);
    return;
  }
  if (den.degree() > 0 && num.degree() > 0) {
    PolyQ g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  const Rational inv = Rational(1) / den.leading();
  num *= inv;
  den *= inv;
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFuncQ RatFuncQ::operator-() const {
  RatFuncQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFuncQ& RatFuncQ::operator+=(const RatFuncQ& o) {
  if (den_ == o.den_) {
    if (den_.degree() == 0) {
      num_ += o.num_;
      return *this;
    }
    return *this = RatFuncQ(num_ + o.num_, den_);
  }
  PolyQ g = gcd(den_, o.den_);
  if (g.degree() == 0) return *this = RatFuncQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  PolyQ d1 = exact_div(den_, g);
  PolyQ d2 = exact_div(o.den_, g);
  return *this = RatFuncQ(num_ * d2 + o.num_ * d1, d1 * o.den_);
}

RatFuncQ& RatFuncQ::operator-=(const RatFuncQ& o) { return *this += -o; }

RatFuncQ& RatFuncQ::operator*=(const RatFuncQ& o) {
  if (is_zero() || o.is_zero()) return *this = RatFuncQ();
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ = num_ * o.num_;
    return *this;
  }
  PolyQ g1 = gcd(num_, o.den_);
  PolyQ g2 = gcd(o.num_, den_);
  PolyQ n = exact_div(num_, g1) * exact_div(o.num_, g2);
  PolyQ d = exact_div(den_, g2) * exact_div(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RatFuncQ& RatFuncQ::operator/=(const RatFuncQ& o) { return *this *= o.inverse(); }

RatFuncQ RatFuncQ::inverse() const {
  if (is_zero()) throw DivisionByZero();
  RatFuncQ r;
  const Rational inv = Rational(1) / num_.leading();
  r.num_ = den_;
  r.num_ *= inv;
  r.den_ = num_;
  r.den_ *= inv;
  return r;
}

RatFuncQ RatFuncQ::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFuncQ r;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  return r;
}

Rational RatFuncQ::eval(const Rational& at) const {
  Rational d = den_.eval(at);
  if (d == 0) throw MathError("evaluation at a pole");
  return num_.eval(at) / d;
}

RatFuncQ RatFuncQ::derivative() const {
  return RatFuncQ(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFuncQ RatFuncQ::substitute(const RatFuncQ& image) const {
  const int d = std::max(num_.degree(), den_.degree());
  std::vector<PolyQ> apow{PolyQ(1)};
  std::vector<PolyQ> bpow{PolyQ(1)};
  for (int i = 1; i <= d; ++i) {
    apow.push_back(apow.back() * image.num());
    bpow.push_back(bpow.back() * image.den());
  }
  auto homogenize = [&](const PolyQ& p) {
    PolyQ acc;
    for (int i = 0; i <= p.degree(); ++i) {
      if (p.coeff(i) == 0) continue;
      PolyQ term = apow[static_cast<std::size_t>(i)] * bpow[static_cast<std::size_t>(d - i)];
      term *= p.coeff(i);
      acc += term;
    }
    return acc;
  };
  PolyQ den = homogenize(den_);
  if (den.is_zero()) throw MathError("substitution makes the denominator vanish");
  return RatFuncQ(homogenize(num_), std::move(den));
}

std::string RatFuncQ::str(char var) const {
  if (den_.degree() == 0) return num_.str(var);
  std::string n = num_.str(var);
  if (num_.coeffs().size() > 1 || num_.leading() < 0 || num_.leading().get_den() != 1) {
    n = "(" + n + ")";
  }
  return n + "/(" + den_.str(var) + ")";
}

RatFuncQ ratfunc_arith(const RatFuncQ& lhs, const RatFuncQ& rhs, ArithOp op) {
  switch (op) {
    case ArithOp::add: return lhs + rhs;
    case ArithOp::sub: return lhs - rhs;
    case ArithOp::mul: return lhs * rhs;
    case ArithOp::div: return lhs / rhs;
  }
  throw MathError("unknown arithmetic operation");
}

RatFuncQ substitute_q(const RatFuncQ& f, const RatFuncQ& image) { return f.substitute(image); }

RatFuncQ q_inverse(const RatFuncQ& f) { return f.substitute(RatFuncQ::q().inverse()); }

// ---------------------------------------------------------------------------
// ModSquareElem

ModSquareElem operator/(const ModSquareElem& x, const ModSquareElem& y) {
  if (!y.is_unit()) throw MathError("element is not a unit modulo (q-1)^2");
  // (a + b e) / (c + d e) = a/c + (b c - a d)/c^2 e
  return {x.a_ / y.a_, (x.b_ * y.a_ - x.a_ * y.b_) / (y.a_ * y.a_)};
}

RatFuncQ ModSquareElem::lift() const {
  return RatFuncQ(PolyQ(std::vector<Rational>{a_ - b_, b_}));
}

std::string ModSquareElem::str() const {
  std::ostringstream os;
  os << a_.get_str();
  if (b_ != 0) os << (b_ > 0 ? "+" : "-") << Rational(abs(b_)).get_str() << "*(q-1)";
  return os.str();
}

ModSquareElem mod_square_reduce(const RatFuncQ& f) {
  const Rational one(1);
  ModSquareElem n(f.num().eval(one), f.num().derivative().eval(one));
  ModSquareElem d(f.den().eval(one), f.den().derivative().eval(one));
  if (!d.is_unit()) throw MathError("denominator is divisible by (q-1)");
  return n / d;
}

// ---------------------------------------------------------------------------
// PolyQX

namespace {

const PolyQ& zero_polyq() {
  static const PolyQ z;
  return z;
}

std::optional<PolyQX> try_div(const PolyQX& a, const PolyQX& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return PolyQX();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<PolyQ> rem = a.coeffs();
  std::vector<PolyQ> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const PolyQ& top = rem[static_cast<std::size_t>(k + db)];
    if (top.is_zero()) continue;
    auto f = try_div(top, b.leading());
    if (!f) return std::nullopt;
    for (int j = 0; j <= db; ++j) {
      if (!b.coeff(j).is_zero()) rem[static_cast<std::size_t>(k + j)] -= *f * b.coeff(j);
    }
    quo[static_cast<std::size_t>(k)] = *std::move(f);
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) return std::nullopt;
  }
  return PolyQX(std::move(quo));
}

// Pseudo-remainder of a by b in Q[q][x].
PolyQX prem(const PolyQX& a, const PolyQX& b) {
  std::vector<PolyQ> r = a.coeffs();
  const int db = b.degree();
  const PolyQ& lb = b.leading();
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const int dr = static_cast<int>(r.size()) - 1;
    const PolyQ lr = r.back();
    const int shift = dr - db;
    for (auto& c : r) c = lb * c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(shift + j)] -= lr * b.coeff(j);
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return PolyQX(std::move(r));
}

PolyQX primitive_part(const PolyQX& p, PolyQ* content_out = nullptr) {
  PolyQ c = p.content();
  if (content_out != nullptr) *content_out = c;
  if (c.degree() == 0 && c.leading() == 1) return p;
  return exact_div(p, c);
}

// Divide by the leading q-coefficient of the leading x-coefficient.
PolyQX unit_normal(PolyQX p) {
  if (p.is_zero()) return p;
  const Rational l = p.leading().leading();
  if (l == 1) return p;
  return exact_div(p, PolyQ(l));
}

// Degree of gcd(a(q0, x), b(q0, x)) at some q0 where neither leading
// coefficient vanishes; an upper bound for the degree in x of gcd(a, b).
int specialized_gcd_degree(const PolyQX& a, const PolyQX& b) {
  static const std::array<long, 8> points{2, 3, -2, 5, 7, -3, 11, 13};
  for (long p : points) {
    const Rational q0(p);
    if (a.leading().eval(q0) == 0 || b.leading().eval(q0) == 0) continue;
    return gcd(PolyQ(a.eval_q(q0)), PolyQ(b.eval_q(q0))).degree();
  }
  return std::min(a.degree(), b.degree());
}

}  // namespace

PolyQX::PolyQX(std::vector<PolyQ> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQX::PolyQX(PolyQ c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

void PolyQX::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int PolyQX::q_degree() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

const PolyQ& PolyQX::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero_polyq();
  return c_[static_cast<std::size_t>(i)];
}

PolyQX PolyQX::operator-() const {
  PolyQX r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyQX& PolyQX::operator+=(const PolyQX& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQX& PolyQX::operator-=(const PolyQX& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQX operator*(const PolyQX& a, const PolyQX& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<PolyQ> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return PolyQX(std::move(r));
}

PolyQX operator*(const PolyQ& s, const PolyQX& a) {
  if (s.is_zero()) return {};
  std::vector<PolyQ> r = a.c_;
  for (auto& c : r) c = s * c;
  return PolyQX(std::move(r));
}

PolyQX PolyQX::pow(unsigned n) const {
  PolyQX result(1);
  PolyQX base = *this;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

PolyQX PolyQX::derivative_x() const {
  if (c_.size() <= 1) return {};
  std::vector<PolyQ> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    r[i - 1] = c_[i];
    r[i - 1] *= Rational(static_cast<long>(i));
  }
  return PolyQX(std::move(r));
}

PolyQ PolyQX::content() const {
  PolyQ g;
  for (const auto& c : c_) {
    g = gcd(g, c);
    if (g.degree() == 0) return PolyQ(1);
  }
  return g;
}

PolyQ PolyQX::eval_x(const PolyQ& x_value) const {
  PolyQ acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x_value + *it;
  return acc;
}

std::vector<Rational> PolyQX::eval_q(const Rational& q0) const {
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.eval(q0));
  return r;
}

Rational PolyQX::eval(const Rational& q0, const Rational& x0) const {
  return PolyQ(eval_q(q0)).eval(x0);
}

PolyQX PolyQX::transpose() const {
  const int dq = q_degree();
  if (dq < 0) return {};
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(dq) + 1,
                                          std::vector<Rational>(c_.size()));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    for (int i = 0; i <= c_[j].degree(); ++i) rows[static_cast<std::size_t>(i)][j] = c_[j].coeff(i);
  }
  std::vector<PolyQ> r;
  r.reserve(rows.size());
  for (auto& row : rows) r.emplace_back(std::move(row));
  return PolyQX(std::move(r));
}

std::string PolyQX::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = degree(); j >= 0; --j) {
    const PolyQ& c = coeff(j);
    for (int i = c.degree(); i >= 0; --i) {
      std::string qm = power_str('q', i);
      std::string xm = power_str('x', j);
      std::string mono = qm.empty() ? xm : (xm.empty() ? qm : qm + "*" + xm);
      append_term(os, first, c.coeff(i), mono);
    }
  }
  return os.str();
}

PolyQX exact_div(const PolyQX& a, const PolyQX& b) {
  auto quo = try_div(a, b);
  if (!quo) throw MathError("inexact bivariate division");
  return *std::move(quo);
}

PolyQX exact_div(const PolyQX& a, const PolyQ& s) {
  if (s.is_zero()) throw DivisionByZero();
  std::vector<PolyQ> r;
  r.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) r.push_back(exact_div(c, s));
  return PolyQX(std::move(r));
}

PolyQX gcd(const PolyQX& a, const PolyQX& b) {
  if (a.is_zero()) return unit_normal(b);
  if (b.is_zero()) return unit_normal(a);
  PolyQ ca;
  PolyQ cb;
  PolyQX pa = primitive_part(a, &ca);
  PolyQX pb = primitive_part(b, &cb);
  const PolyQ c = gcd(ca, cb);
  if (pa.degree() == 0 || pb.degree() == 0) return PolyQX(c);

  const int bound = specialized_gcd_degree(pa, pb);
  if (bound == 0) return PolyQX(c);
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  if (bound == pb.degree()) {
    if (try_div(pa, pb)) return unit_normal(c * pb);
  }

  // Primitive polynomial remainder sequence.
  while (true) {
    PolyQX r = prem(pa, pb);
    if (r.is_zero()) break;
    if (r.degree() == 0) return PolyQX(c);
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  return unit_normal(c * pb);
}

// ---------------------------------------------------------------------------
// RatFuncQX

RatFuncQX::RatFuncQX(const RatFuncQ& c) : num_(PolyQX(c.num())), den_(PolyQX(c.den())) {}

RatFuncQX::RatFuncQX(PolyQX num, PolyQX den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den_ = PolyQX(1);
    return;
  }
  PolyQX g = gcd(num, den);
  if (g.degree() > 0 || g.leading().degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  num_ = std::move(num);
  den_ = std::move(den);
  normalize_unit();
}

void RatFuncQX::normalize_unit() {
  const Rational l = den_.leading().leading();
  if (l == 1) return;
  const PolyQ inv(Rational(1) / l);
  num_ = inv * num_;
  den_ = inv * den_;
}

RatFuncQ RatFuncQX::as_ratfunc_q() const {
  if (!is_constant_in_x()) throw MathError("function depends on x");
  return RatFuncQ(num_.coeff(0), den_.coeff(0));
}

std::vector<RatFuncQ> RatFuncQX::num_coeffs() const {
  std::vector<RatFuncQ> r;
  for (const auto& c : num_.coeffs()) r.emplace_back(c, den_.leading());
  return r;
}

std::vector<RatFuncQ> RatFuncQX::den_coeffs() const {
  std::vector<RatFuncQ> r;
  for (const auto& c : den_.coeffs()) r.emplace_back(c, den_.leading());
  return r;
}

RatFuncQX RatFuncQX::operator-() const { return {-num_, den_, Canonical{}}; }

RatFuncQX& RatFuncQX::operator+=(const RatFuncQX& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.degree() == 0 && den_.leading().degree() == 0) {
      num_ += o.num_;
      return *this;
    }
    return *this = RatFuncQX(num_ + o.num_, den_);
  }
  PolyQX g = gcd(den_, o.den_);
  if (g.degree() == 0 && g.leading().degree() == 0) {
    RatFuncQX r(num_ * o.den_ + o.num_ * den_, den_ * o.den_, Canonical{});
    if (r.num_.is_zero()) return *this = RatFuncQX();
    r.normalize_unit();
    return *this = std::move(r);
  }
  PolyQX d1 = exact_div(den_, g);
  PolyQX d2 = exact_div(o.den_, g);
  PolyQX n = num_ * d2 + o.num_ * d1;
  if (n.is_zero()) return *this = RatFuncQX();
  PolyQX g2 = gcd(n, g);
  PolyQX d = d1 * o.den_;
  if (g2.degree() > 0 || g2.leading().degree() > 0) {
    n = exact_div(n, g2);
    d = exact_div(d, g2);
  }
  num_ = std::move(n);
  den_ = std::move(d);
  normalize_unit();
  return *this;
}

RatFuncQX& RatFuncQX::operator-=(const RatFuncQX& o) { return *this += -o; }

RatFuncQX& RatFuncQX::operator*=(const RatFuncQX& o) {
  if (is_zero() || o.is_zero()) return *this = RatFuncQX();
  auto nontrivial = [](const PolyQX& g) { return g.degree() > 0 || g.leading().degree() > 0; };
  PolyQX n1 = num_;
  PolyQX n2 = o.num_;
  PolyQX d1 = den_;
  PolyQX d2 = o.den_;
  if (!(d2.degree() == 0 && d2.leading().degree() == 0)) {
    PolyQX g1 = gcd(n1, d2);
    if (nontrivial(g1)) {
      n1 = exact_div(n1, g1);
      d2 = exact_div(d2, g1);
    }
  }
  if (!(d1.degree() == 0 && d1.leading().degree() == 0)) {
    PolyQX g2 = gcd(n2, d1);
    if (nontrivial(g2)) {
      n2 = exact_div(n2, g2);
      d1 = exact_div(d1, g2);
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  normalize_unit();
  return *this;
}

RatFuncQX& RatFuncQX::operator/=(const RatFuncQX& o) { return *this *= o.inverse(); }

RatFuncQX RatFuncQX::inverse() const {
  if (is_zero()) throw DivisionByZero();
  RatFuncQX r(den_, num_, Canonical{});
  r.normalize_unit();
  return r;
}

RatFuncQX RatFuncQX::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFuncQX r(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)), Canonical{});
  r.normalize_unit();
  return r;
}

RatFuncQX RatFuncQX::derivative() const {
  if (den_.degree() == 0) {
    RatFuncQX r(num_.derivative_x(), den_, Canonical{});
    if (r.num_.is_zero()) return RatFuncQX();
    return r;
  }
  // (N'D - ND')/D^2; any common factor of the numerator with D^2 divides D.
  PolyQX n = num_.derivative_x() * den_ - num_ * den_.derivative_x();
  if (n.is_zero()) return RatFuncQX();
  PolyQX g = gcd(n, den_);
  PolyQX d = den_ * den_;
  if (g.degree() > 0 || g.leading().degree() > 0) {
    n = exact_div(n, g);
    d = exact_div(d, g);
  }
  RatFuncQX r(std::move(n), std::move(d), Canonical{});
  r.normalize_unit();
  return r;
}

RatFuncQX RatFuncQX::compose(const RatFuncQX& g) const {
  // N(P/Q)/D(P/Q) = (sum n_j P^j Q^(dN-j)) / (sum d_j P^j Q^(dD-j)) * Q^(dD-dN)
  const int dn = num_.degree();
  const int dd = den_.degree();
  const int top = std::max(dn, dd);
  std::vector<PolyQX> ppow{PolyQX(1)};
  std::vector<PolyQX> qpow{PolyQX(1)};
  for (int i = 1; i <= top; ++i) {
    ppow.push_back(ppow.back() * g.num());
    qpow.push_back(qpow.back() * g.den());
  }
  auto homogenize = [&](const PolyQX& p, int d) {
    PolyQX acc;
    for (int j = 0; j <= p.degree(); ++j) {
      if (p.coeff(j).is_zero()) continue;
      acc += p.coeff(j) * (ppow[static_cast<std::size_t>(j)] * qpow[static_cast<std::size_t>(d - j)]);
    }
    return acc;
  };
  PolyQX nh = homogenize(num_, std::max(dn, 0));
  PolyQX dh = homogenize(den_, dd);
  if (dh.is_zero()) throw MathError("composition lands on a pole");
  if (dd > dn) {
    nh = nh * qpow[static_cast<std::size_t>(dd - std::max(dn, 0))];
  } else if (dn > dd) {
    dh = dh * qpow[static_cast<std::size_t>(dn - dd)];
  }
  return RatFuncQX(std::move(nh), std::move(dh));
}

RatFuncQX RatFuncQX::substitute_q(const RatFuncQ& image) const {
  const int d = std::max(num_.q_degree(), den_.q_degree());
  std::vector<PolyQ> apow{PolyQ(1)};
  std::vector<PolyQ> bpow{PolyQ(1)};
  for (int i = 1; i <= d; ++i) {
    apow.push_back(apow.back() * image.num());
    bpow.push_back(bpow.back() * image.den());
  }
  auto homogenize = [&](const PolyQX& p) {
    std::vector<PolyQ> out;
    for (const auto& c : p.coeffs()) {
      PolyQ acc;
      for (int i = 0; i <= c.degree(); ++i) {
        if (c.coeff(i) == 0) continue;
        PolyQ term = apow[static_cast<std::size_t>(i)] * bpow[static_cast<std::size_t>(d - i)];
        term *= c.coeff(i);
        acc += term;
      }
      out.push_back(std::move(acc));
    }
    return PolyQX(std::move(out));
  };
  PolyQX den = homogenize(den_);
  if (den.is_zero()) throw MathError("substitution makes the denominator vanish");
  return RatFuncQX(homogenize(num_), std::move(den));
}

RatFuncQX RatFuncQX::swap_qx() const { return RatFuncQX(num_.transpose(), den_.transpose()); }

RatFuncQX RatFuncQX::specialize_q(const Rational& q0) const {
  auto at_q0 = [&](const PolyQX& p) {
    std::vector<PolyQ> out;
    for (const auto& v : p.eval_q(q0)) out.emplace_back(v);
    return PolyQX(std::move(out));
  };
  PolyQX den = at_q0(den_);
  if (den.is_zero()) throw MathError("evaluation at a pole");
  return RatFuncQX(at_q0(num_), std::move(den));
}

Rational RatFuncQX::eval(const Rational& q0, const Rational& x0) const {
  Rational d = den_.eval(q0, x0);
  if (d == 0) throw MathError("evaluation at a pole");
  return num_.eval(q0, x0) / d;
}

std::string RatFuncQX::str() const {
  if (den_.degree() == 0 && den_.leading().degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFuncQX transition_map() {
  const PolyQ q = PolyQ::variable();
  PolyQX num(std::vector<PolyQ>{PolyQ(1) - q, q});
  PolyQX den(std::vector<PolyQ>{PolyQ(1), q - PolyQ(1)});
  return {std::move(num), std::move(den)};
}

}  // namespace qdeform
