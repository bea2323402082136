#include "qdeform/parse.hpp"

#include <cctype>

namespace qdeform {

namespace {

class Parser {
public:
  Parser(std::string_view text, bool allow_x) : s_(text), allow_x_(allow_x) {}

  RatFuncQX parse() {
    RatFuncQX v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_primary(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == 'q' || c == 'x' || c == '(';
  }

  RatFuncQX expr() {
    RatFuncQX acc = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFuncQX term() {
    RatFuncQX acc = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        RatFuncQX d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc /= d;
      } else if (starts_primary(c)) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RatFuncQX unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RatFuncQX power() {
    RatFuncQX base = primary();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    skip_ws();
    const std::size_t at = pos_;
    BigInt e = integer();
    if (!e.fits_sint_p() || abs(e) > 4096) throw ParseError("exponent out of range", at);
    const int n = static_cast<int>(e.get_si());
    if (negative && base.is_zero()) throw ParseError("division by zero", at);
    return base.pow(negative ? -n : n);
  }

  BigInt integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  RatFuncQX primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatFuncQX v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return RatFuncQX::q();
    }
    if (c == 'x') {
      if (!allow_x_) fail("unexpected variable 'x'");
      ++pos_;
      return RatFuncQX::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      return RatFuncQX(RatFuncQ(Rational(integer())));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  bool allow_x_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFuncQX parse_ratfunc_qx(std::string_view text) { return Parser(text, true).parse(); }

RatFuncQ parse_ratfunc(std::string_view text) { return Parser(text, false).parse().as_ratfunc_q(); }

RationalInput parse_rational(std::string_view text, bool allow_infinity) {
  if (allow_infinity && (text == "inf" || text == "oo" || text == "infinity")) return {BigInt(1), BigInt(0)};
  auto parse_int = [&](std::string_view part, std::size_t offset) {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw ParseError("expected integer", offset + i);
    for (std::size_t k = i; k < part.size(); ++k) {
      if (std::isdigit(static_cast<unsigned char>(part[k])) == 0) {
        throw ParseError("unexpected character '" + std::string(1, part[k]) + "'", offset + k);
      }
    }
    std::string digits(part.substr(part[0] == '+' ? 1 : 0));
    return BigInt(digits);
  };
  const auto slash = text.find('/');
  BigInt r = parse_int(text.substr(0, slash), 0);
  BigInt s = slash == std::string_view::npos ? BigInt(1) : parse_int(text.substr(slash + 1), slash + 1);
  if (s == 0) {
    if (!allow_infinity || r == 0) throw ParseError("zero denominator", slash + 1);
    return {BigInt(1), BigInt(0)};
  }
  if (s < 0) {
    r = -r;
    s = -s;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
  return {BigInt(r / g), BigInt(s / g)};
}

}  // namespace qdeform
