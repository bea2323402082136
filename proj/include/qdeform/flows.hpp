#pragma once

// Numeric flows of the vector fields D_{-1}, D_0, D_1 and x^n d as Moebius
// maps, with first-order jets in q-1 computed through dual numbers.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdeform/report.hpp"

namespace qdeform {

using cdouble = std::complex<double>;

// value + deriv * eps with eps^2 = 0.
struct CDual {
  cdouble v{};
  cdouble d{};

  CDual() = default;
  CDual(cdouble value, cdouble deriv = {}) : v(value), d(deriv) {}  // NOLINT(google-explicit-constructor)
  CDual(double value) : v(value) {}  // NOLINT(google-explicit-constructor)

  static CDual epsilon() { return {0.0, 1.0}; }

  CDual operator-() const { return {-v, -d}; }
  friend CDual operator+(const CDual& a, const CDual& b) { return {a.v + b.v, a.d + b.d}; }
  friend CDual operator-(const CDual& a, const CDual& b) { return {a.v - b.v, a.d - b.d}; }
  friend CDual operator*(const CDual& a, const CDual& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
  friend CDual operator/(const CDual& a, const CDual& b) {
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
  }
};

CDual exp(const CDual& a);
CDual sqrt(const CDual& a);
cdouble phi1(cdouble z);  // (e^z - 1)/z, continuous at 0
CDual phi1(const CDual& z);

template <class T>
struct Mat2 {
  T a, b, c, d;

  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }
  T apply(const T& x) const { return (a * x + b) / (c * x + d); }
  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
};

using NumMobius = Mat2<cdouble>;
using DualMobius = Mat2<CDual>;

NumMobius value_part(const DualMobius& m);
std::string to_json(const NumMobius& m);

// Exact flow of D_{-1} = (1+(q-1)x) d: x e^{(q-1)t} + (e^{(q-1)t}-1)/(q-1).
cdouble flow_dm1(double t, cdouble q, cdouble x);
NumMobius flow_dm1_matrix(double t, cdouble q);
DualMobius flow_dm1_matrix(double t, const CDual& q);

// Order-1 jet at q = 1+eps obtained by expanding e^{(q-1)t} to first order
// before cancelling the pole in 1/(q-1): the affine map (1-t+qt)x + t.
DualMobius flow_dm1_jet(double t);

// Flow of D_0; at t = 0 this is (q^2-q+1) times the identity.
NumMobius flow_d0_matrix(double t, cdouble q);
DualMobius flow_d0_matrix(double t, const CDual& q);
cdouble flow_d0(double t, cdouble q, cdouble x);

// Flow of D_1 = S_q D_{-1} S_q.
NumMobius flow_d1_matrix(double t, cdouble q);
DualMobius flow_d1_matrix(double t, const CDual& q);
cdouble flow_d1(double t, cdouble q, cdouble x);

// Vector-field coefficients of D_{-1}, D_0, D_1 at x.
cdouble field_dm1(cdouble q, cdouble x);
cdouble field_d0(cdouble q, cdouble x);
cdouble field_d1(cdouble q, cdouble x);

// Named matrices over doubles or jets.
template <class T>
Mat2<T> translation_matrix(const T& q) {
  return {q, T(1.0), T(0.0), T(1.0)};
}
template <class T>
Mat2<T> inversion_matrix(const T& q) {
  return {T(0.0), T(-1.0), q, T(0.0)};
}
template <class T>
Mat2<T> transition_matrix_num(const T& q) {
  return {q, T(1.0) - q, q - T(1.0), T(1.0)};
}
// W_q^t = [[e^t(t-qt-q), (e^t-1)(q-1)], [(e^t-1)(q-1), -q]]
DualMobius w_matrix(double t, const CDual& q);
NumMobius w_matrix(double t, cdouble q);

// Solution x (1-(n-1)t x^{n-1})^{-1/(n-1)} of y' = y^n, or x e^t for n = 1.
// Empty when the continuation from t = 0 runs through the branch point.
std::optional<cdouble> classical_witt_flow(int n, double t, cdouble x);

// Max entry difference after scaling both matrices by the entry where the
// first is largest, minimized over the two signs.
double projective_distance(const NumMobius& a, const NumMobius& b);
// The same for jets, comparing value and eps parts.
double projective_distance(const DualMobius& a, const DualMobius& b);

struct FlowTolerances {
  double group_law = 1e-9;
  double finite_difference = 1e-6;
  double jet = 1e-10;
  double geometry = 1e-12;
};

std::vector<double> default_q_samples();

VerifyReport geometry_suite(const std::vector<double>& q_samples, const FlowTolerances& tol = {});
VerifyReport flows_suite(const FlowTolerances& tol = {}, std::uint64_t seed = 0);

}  // namespace qdeform
