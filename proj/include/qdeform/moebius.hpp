#pragma once

// 2x2 matrices over Q(q) acting as Moebius transformations on P^1 and, by
// precomposition, on functions of x.

#include <cstdint>
#include <optional>
#include <string>

#include "qdeform/report.hpp"
#include "qdeform/rings.hpp"

namespace qdeform {

// A point of P^1 over Q(q): a rational function or infinity.
class ProjPoint {
public:
  ProjPoint(RatFuncQ v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static ProjPoint infinity() { return ProjPoint(); }

  bool is_infinity() const { return !v_.has_value(); }
  const RatFuncQ& value() const;  // throws MathError at infinity
  std::string str() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.v_ == b.v_; }

private:
  ProjPoint() = default;
  std::optional<RatFuncQ> v_;
};

class ProjMap {
public:
  // Throws MathError when ad - bc = 0.
  ProjMap(RatFuncQ a, RatFuncQ b, RatFuncQ c, RatFuncQ d);
  static ProjMap identity() { return {1, 0, 0, 1}; }

  const RatFuncQ& a() const { return a_; }
  const RatFuncQ& b() const { return b_; }
  const RatFuncQ& c() const { return c_; }
  const RatFuncQ& d() const { return d_; }

  RatFuncQ det() const { return a_ * d_ - b_ * c_; }
  RatFuncQ trace() const { return a_ + d_; }
  // Inverse up to the scalar det.
  ProjMap adjugate() const { return {d_, -b_, -c_, a_}; }
  ProjMap scaled(const RatFuncQ& s) const { return {s * a_, s * b_, s * c_, s * d_}; }
  ProjMap pow(int n) const;  // negative powers through the adjugate
  ProjMap substitute_q(const RatFuncQ& image) const;
  // (a x + b)/(c x + d) as a function of x.
  RatFuncQX as_function() const;

  friend ProjMap operator*(const ProjMap& l, const ProjMap& r);
  // Exact entrywise equality.
  friend bool operator==(const ProjMap& l, const ProjMap& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }

  std::string str() const;

private:
  RatFuncQ a_, b_, c_, d_;
};

// A = lambda B for some nonzero lambda: every 2x2 minor of the stacked
// entries vanishes.
bool projective_eq(const ProjMap& lhs, const ProjMap& rhs);

// Moebius action with the usual conventions at infinity.
ProjPoint apply(const ProjMap& m, const ProjPoint& p);
// f o m
RatFuncQX apply_fn(const ProjMap& m, const RatFuncQX& f);

// Named matrices.
ProjMap q_translation();       // T_q = [[q, 1], [0, 1]], x -> qx + 1
ProjMap q_inversion();         // S_q = [[0, -1], [q, 0]], x -> -1/(qx)
ProjMap q_u_map();             // U_q = T_q S_q T_q
ProjMap transition_matrix();   // g_q = [[q, 1-q], [q-1, 1]]
ProjMap burau_sigma1();        // T_q
ProjMap burau_sigma2();        // [[1, 0], [-q, q]] = S_q T_q S_q up to scalar
ProjMap q_inverted(const ProjMap& m);  // entries with q -> 1/q

// Describes the first entry where the two matrices differ, or "" if equal.
std::string entry_difference(const ProjMap& lhs, const ProjMap& rhs);

// Exact matrix identities of the modular group and the transition map,
// plus seeded randomized properties of the action.
VerifyReport identity_suite(std::uint64_t seed = 0);

}  // namespace qdeform
