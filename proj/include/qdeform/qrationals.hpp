#pragma once

// Even continued fractions and the right (sharp) and left (flat)
// q-deformations of rational numbers.

#include <stdexcept>
#include <string>
#include <vector>

#include "qdeform/moebius.hpp"
#include "qdeform/report.hpp"
#include "qdeform/rings.hpp"

namespace qdeform {

struct PreconditionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// [a1, ..., a2n] with a1 in Z and ai >= 1 for i >= 2; empty means infinity.
struct EvenCF {
  std::vector<BigInt> terms;

  bool is_infinity() const { return terms.empty(); }
  std::string to_json() const;
};

// Throws PreconditionError for 0/0. s = 0 gives the empty expansion.
EvenCF even_cf(const BigInt& r, const BigInt& s);

// Value of T^a1 U^a2 ... U^a2n (infinity) at q = 1, reduced, den >= 0.
std::pair<BigInt, BigInt> cf_value(const EvenCF& cf);

// T_q^a1 U_q^a2 T_q^a3 ... U_q^a2n
ProjMap cf_word(const EvenCF& cf);

enum class Flavor { sharp, flat };

// R/S with R, S in Z[q] coprime and without common integer content; the
// denominator has positive leading coefficient. Infinity is 1/0.
struct QRatPair {
  PolyQ num;
  PolyQ den;
  Flavor flavor = Flavor::sharp;

  bool is_infinity() const { return den.is_zero(); }
  ProjPoint value() const;
  std::string str() const;  // rings text format, "inf" for infinity
};

QRatPair to_qrat_pair(const ProjPoint& p, Flavor flavor);

QRatPair q_sharp(const BigInt& r, const BigInt& s);
QRatPair q_flat(const BigInt& r, const BigInt& s);

// g_q([r/s]_sharp) == [r/s]_flat with q -> 1/q.
bool transition_check(const BigInt& r, const BigInt& s);

// For r/s > 1: numerator and denominator of [r/s]_flat, after removing a
// common power of q and an overall sign, have nonnegative coefficients.
// Throws PreconditionError when r/s <= 1.
bool positivity_check(const BigInt& r, const BigInt& s);

// [n]_q = (1 - q^n)/(1 - q) for every integer n.
RatFuncQ q_integer(long n);

// Corpus sweep over reduced r/s with |r| <= bound, 1 <= s <= bound.
VerifyReport qrationals_suite(long bound = 40);

}  // namespace qdeform
