#include "qdeform/qrationals.hpp"

#include <algorithm>
#include <sstream>

namespace qdeform {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

int small_exponent(const BigInt& a) {
  if (!a.fits_sint_p()) throw MathError("continued fraction term too large");
  return static_cast<int>(a.get_si());
}

// Scale a pair of polynomials over Q to coprime integer content.
void clear_content(PolyQ& num, PolyQ& den) {
  BigInt l(1);
  for (const PolyQ* p : {&num, &den}) {
    for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  num *= Rational(l);
  den *= Rational(l);
  BigInt g(0);
  for (const PolyQ* p : {&num, &den}) {
    for (const auto& c : p->coeffs()) g = big_gcd(g, c.get_num());
  }
  if (g != 0 && g != 1) {
    num *= Rational(BigInt(1), g);
    den *= Rational(BigInt(1), g);
  }
}

}  // namespace

std::string EvenCF::to_json() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? "," : "") << terms[i].get_str();
  os << ']';
  return os.str();
}

EvenCF even_cf(const BigInt& r, const BigInt& s) {
  if (r == 0 && s == 0) throw PreconditionError("0/0 is not a rational number");
  if (s == 0) return {};
  BigInt num = s < 0 ? BigInt(-r) : r;
  BigInt den = s < 0 ? BigInt(-s) : s;
  EvenCF cf;
  while (den != 0) {
    BigInt a = floor_div(num, den);
    BigInt rem = num - a * den;
    cf.terms.push_back(a);
    num = den;
    den = rem;
  }
  auto& t = cf.terms;
  if (t.size() % 2 == 1) {
    if (t.size() == 1) {
      t = {t[0] - 1, BigInt(1)};
    } else if (t.back() >= 2) {
      t.back() -= 1;
      t.emplace_back(1);
    } else {
      t.pop_back();
      t.back() += 1;
    }
  }
  return cf;
}

std::pair<BigInt, BigInt> cf_value(const EvenCF& cf) {
  // Integer matrices at q = 1: T^a = [[1, a], [0, 1]], U^a = [[1, 0], [a, 1]].
  BigInt m11(1), m12(0), m21(0), m22(1);
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    const BigInt& a = cf.terms[i];
    if (i % 2 == 0) {
      m12 += m11 * a;
      m22 += m21 * a;
    } else {
      m11 += m12 * a;
      m21 += m22 * a;
    }
  }
  BigInt num = m11;
  BigInt den = m21;
  if (den < 0 || (den == 0 && num < 0)) {
    num = -num;
    den = -den;
  }
  BigInt g = big_gcd(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

ProjMap cf_word(const EvenCF& cf) {
  const ProjMap T = q_translation();
  const ProjMap U = q_u_map();
  ProjMap w = ProjMap::identity();
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    w = w * (i % 2 == 0 ? T : U).pow(small_exponent(cf.terms[i]));
  }
  return w;
}

ProjPoint QRatPair::value() const {
  if (is_infinity()) return ProjPoint::infinity();
  return RatFuncQ(num, den);
}

std::string QRatPair::str() const {
  if (is_infinity()) return "inf";
  return RatFuncQ(num, den).str();
}

QRatPair to_qrat_pair(const ProjPoint& p, Flavor flavor) {
  if (p.is_infinity()) return {PolyQ(1), PolyQ(), flavor};
  PolyQ num = p.value().num();
  PolyQ den = p.value().den();
  clear_content(num, den);
  return {std::move(num), std::move(den), flavor};
}

QRatPair q_sharp(const BigInt& r, const BigInt& s) {
  return to_qrat_pair(apply(cf_word(even_cf(r, s)), ProjPoint::infinity()), Flavor::sharp);
}

QRatPair q_flat(const BigInt& r, const BigInt& s) {
  const RatFuncQ seed = RatFuncQ(1) / (1 - RatFuncQ::q());
  return to_qrat_pair(apply(cf_word(even_cf(r, s)), seed), Flavor::flat);
}

bool transition_check(const BigInt& r, const BigInt& s) {
  const ProjPoint lhs = apply(transition_matrix(), q_sharp(r, s).value());
  const ProjPoint flat = q_flat(r, s).value();
  const ProjPoint rhs = flat.is_infinity() ? flat : ProjPoint(q_inverse(flat.value()));
  return lhs == rhs;
}

bool positivity_check(const BigInt& r, const BigInt& s) {
  if (s <= 0 || r <= s) throw PreconditionError("positivity requires r/s > 1 with s > 0");
  QRatPair p = q_flat(r, s);
  const int k = std::min(p.num.low_order(), p.den.low_order());
  if (k > 0) {
    const PolyQ qk = PolyQ::monomial(1, k);
    p.num = exact_div(p.num, qk);
    p.den = exact_div(p.den, qk);
  }
  if (p.den.coeff(p.den.low_order()) < 0) {
    p.num = -p.num;
    p.den = -p.den;
  }
  auto nonneg = [](const PolyQ& f) {
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const Rational& c) { return c >= 0; });
  };
  return nonneg(p.num) && nonneg(p.den);
}

RatFuncQ q_integer(long n) {
  const RatFuncQ q = RatFuncQ::q();
  return (1 - q.pow(static_cast<int>(n))) / (1 - q);
}

VerifyReport qrationals_suite(long bound) {
  Stopwatch sw;
  VerifyReport rep("qrationals");
  const RatFuncQ q = RatFuncQ::q();
  const Rational one(1);

  auto expect_pair = [&](const std::string& name, const QRatPair& got, const ProjPoint& want) {
    rep.add(name, got.value() == want, "got " + got.str() + ", expected " + want.str());
  };
  expect_pair("[0]sharp = 0", q_sharp(0, 1), RatFuncQ(0));
  expect_pair("[0]flat = (q-1)/q", q_flat(0, 1), (q - 1) / q);
  expect_pair("[1]sharp = 1", q_sharp(1, 1), RatFuncQ(1));
  expect_pair("[1]flat = q", q_flat(1, 1), q);
  expect_pair("[2]sharp = 1+q", q_sharp(2, 1), 1 + q);
  expect_pair("[2]flat = 1+q^2", q_flat(2, 1), 1 + q * q);
  expect_pair("[inf]sharp = inf", q_sharp(1, 0), ProjPoint::infinity());
  expect_pair("[inf]flat = 1/(1-q)", q_flat(1, 0), RatFuncQ(1) / (1 - q));

  std::size_t corpus = 0;
  std::string recon_w, parity_w, sharp_w, flat_w, trans_w, pos_w;
  for (long s = 1; s <= bound; ++s) {
    for (long r = -bound; r <= bound; ++r) {
      if (big_gcd(BigInt(r), BigInt(s)) != 1) continue;
      ++corpus;
      const BigInt R(r), S(s);
      const std::string tag = std::to_string(r) + "/" + std::to_string(s);
      const EvenCF cf = even_cf(R, S);
      if (cf.terms.size() % 2 != 0) parity_w = tag;
      if (cf_value(cf) != std::make_pair(R, S)) recon_w = tag;
      const Rational at_one(R, S);
      const QRatPair sh = q_sharp(R, S);
      const QRatPair fl = q_flat(R, S);
      if (sh.den.eval(one) == 0 || sh.num.eval(one) / sh.den.eval(one) != at_one) sharp_w = tag;
      if (fl.den.eval(one) == 0 || fl.num.eval(one) / fl.den.eval(one) != at_one) flat_w = tag;
      if (!transition_check(R, S)) trans_w = tag;
      if (r > s && !positivity_check(R, S)) pos_w = tag;
    }
  }
  if (!transition_check(1, 0)) trans_w = "inf";
  const std::string n = " (" + std::to_string(corpus) + " rationals)";
  rep.add("even CF has even length" + n, parity_w.empty(), "odd length at " + parity_w);
  rep.add("even CF reconstructs r/s" + n, recon_w.empty(), "mismatch at " + recon_w);
  rep.add("sharp specializes to r/s at q=1" + n, sharp_w.empty(), "mismatch at " + sharp_w);
  rep.add("flat specializes to r/s at q=1" + n, flat_w.empty(), "mismatch at " + flat_w);
  rep.add("g_q([r/s]sharp) = [r/s]flat(1/q)" + n, trans_w.empty(), "fails at " + trans_w);
  rep.add("flat numerator and denominator in N[q] for r/s > 1", pos_w.empty(), "fails at " + pos_w);

  std::string rec_w;
  for (long k = 0; k <= 20; ++k) {
    const QRatPair next = q_sharp(k + 1, 1);
    const RatFuncQ step = q * q_sharp(k, 1).value().value() + 1;
    if (!(next.value() == ProjPoint(step))) rec_w = std::to_string(k);
    if (!(q_integer(k + 1) == q * q_integer(k) + 1)) rec_w = "q_integer " + std::to_string(k);
    if (!(q_integer(k + 1) == next.value().value())) rec_w = "[n]_q vs sharp " + std::to_string(k + 1);
  }
  rep.add("[n+1]sharp = q[n]sharp + 1 for 0 <= n <= 20", rec_w.empty(), "fails at " + rec_w);

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace qdeform
