#include "qdeform/flows.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"

namespace qdeform {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

cdouble phi1_deriv(cdouble z) {
  if (std::abs(z) < 0.5) {
    // sum_k (k+1) z^k / (k+2)!
    cdouble sum = 0.0;
    cdouble power = 1.0;
    double fact = 2.0;
    for (int k = 0; k < 30; ++k) {
      sum += double(k + 1) * power / fact;
      power *= z;
      fact *= double(k + 3);
    }
    return sum;
  }
  const cdouble e = std::exp(z);
  return (z * e - e + 1.0) / (z * z);
}

template <class T>
Mat2<T> dm1_matrix(double t, const T& q) {
  using std::exp;
  const T z = (q - T(1.0)) * T(t);
  return {exp(z), T(t) * phi1(z), T(0.0), T(1.0)};
}

template <class T>
Mat2<T> d0_matrix(double t, const T& q) {
  using std::exp;
  const T one(1.0);
  const T u = one - q;
  const T a = exp(q * T(t));
  const T b = exp(-(u * u) * T(t));
  return {q * a + u * u * b, u * (a - b), q * u * (a - b), u * u * a + q * b};
}

template <class T>
Mat2<T> d1_matrix(double t, const T& q) {
  const Mat2<T> s = inversion_matrix(q);
  return s * dm1_matrix(t, q) * s;
}

template <class T>
Mat2<T> w_matrix_impl(double t, const T& q) {
  const double et = std::exp(t);
  const T one(1.0);
  const T off = T(et - 1.0) * (q - one);
  return {T(et) * (T(t) - q * T(t) - q), off, off, -q};
}

double dual_gap(const CDual& a, const CDual& b) { return std::max(std::abs(a.v - b.v), std::abs(a.d - b.d)); }

template <class T, class Gap>
double proj_distance_impl(const Mat2<T>& a, const Mat2<T>& b, Gap gap, double (*modulus)(const T&)) {
  const std::array<const T*, 4> ea{&a.a, &a.b, &a.c, &a.d};
  const std::array<const T*, 4> eb{&b.a, &b.b, &b.c, &b.d};
  std::size_t p = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (modulus(*ea[i]) > modulus(*ea[p])) p = i;
  }
  if (modulus(*ea[p]) == 0.0 || modulus(*eb[p]) == 0.0) return kInf;
  double best = kInf;
  for (double sign : {1.0, -1.0}) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      const T x = *ea[i] / *ea[p];
      const T y = T(sign) * (*eb[i] / *eb[p]);
      worst = std::max(worst, gap(x, y));
    }
    best = std::min(best, worst);
  }
  return best;
}

double mod_c(const cdouble& z) { return std::abs(z); }
double mod_d(const CDual& z) { return std::abs(z.v); }

bool close(cdouble a, cdouble b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(a)); }

std::string fmt(cdouble z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

std::string fmt_num(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

}  // namespace

CDual exp(const CDual& a) {
  const cdouble e = std::exp(a.v);
  return {e, e * a.d};
}

CDual sqrt(const CDual& a) {
  const cdouble r = std::sqrt(a.v);
  return {r, a.d / (2.0 * r)};
}

cdouble phi1(cdouble z) {
  if (std::abs(z) < 0.5) {
    cdouble sum = 0.0;
    cdouble power = 1.0;
    double fact = 1.0;
    for (int k = 0; k < 30; ++k) {
      sum += power / fact;
      power *= z;
      fact *= double(k + 2);
    }
    return sum;
  }
  return (std::exp(z) - 1.0) / z;
}

CDual phi1(const CDual& z) { return {phi1(z.v), phi1_deriv(z.v) * z.d}; }

NumMobius value_part(const DualMobius& m) { return {m.a.v, m.b.v, m.c.v, m.d.v}; }

std::string to_json(const NumMobius& m) {
  auto entry = [](cdouble z) { return nlohmann::json::array({z.real(), z.imag()}); };
  nlohmann::json j = nlohmann::json::array(
      {nlohmann::json::array({entry(m.a), entry(m.b)}), nlohmann::json::array({entry(m.c), entry(m.d)})});
  return j.dump();
}

cdouble flow_dm1(double t, cdouble q, cdouble x) { return dm1_matrix(t, q).apply(x); }
NumMobius flow_dm1_matrix(double t, cdouble q) { return dm1_matrix(t, q); }
DualMobius flow_dm1_matrix(double t, const CDual& q) { return dm1_matrix(t, q); }

DualMobius flow_dm1_jet(double t) {
  const CDual u = CDual::epsilon();          // q - 1
  const CDual e1 = CDual(1.0) + CDual(t) * u;  // e^{(q-1)t} to first order
  const cdouble shift = (e1 - CDual(1.0)).d / u.d;
  return {e1, CDual(shift), CDual(0.0), CDual(1.0)};
}

NumMobius flow_d0_matrix(double t, cdouble q) { return d0_matrix(t, q); }
DualMobius flow_d0_matrix(double t, const CDual& q) { return d0_matrix(t, q); }
cdouble flow_d0(double t, cdouble q, cdouble x) { return d0_matrix(t, q).apply(x); }

NumMobius flow_d1_matrix(double t, cdouble q) { return d1_matrix(t, q); }
DualMobius flow_d1_matrix(double t, const CDual& q) { return d1_matrix(t, q); }
cdouble flow_d1(double t, cdouble q, cdouble x) { return d1_matrix(t, q).apply(x); }

cdouble field_dm1(cdouble q, cdouble x) { return 1.0 + (q - 1.0) * x; }
cdouble field_d0(cdouble q, cdouble x) { return (1.0 + (x - 1.0) * q) * (1.0 + (q - 1.0) * x); }
cdouble field_d1(cdouble q, cdouble x) { return (1.0 + (x - 1.0) * q) * x; }

DualMobius w_matrix(double t, const CDual& q) { return w_matrix_impl(t, q); }
NumMobius w_matrix(double t, cdouble q) { return w_matrix_impl(t, q); }

std::optional<cdouble> classical_witt_flow(int n, double t, cdouble x) {
  if (n == 1) return x * std::exp(t);
  const int k = n - 1;
  const cdouble w = 1.0 - double(k) * t * std::pow(x, k);
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return std::nullopt;
  if (std::abs(w) < 1e-14) return std::nullopt;
  // The segment from 1 to w meets the cut of the principal power only when
  // w itself lies on the nonpositive real axis.
  if (std::abs(w.imag()) <= 1e-15 * std::abs(w) && w.real() <= 0.0) return std::nullopt;
  return x * std::pow(w, -1.0 / double(k));
}

double projective_distance(const NumMobius& a, const NumMobius& b) {
  return proj_distance_impl(a, b, [](const cdouble& x, const cdouble& y) { return std::abs(x - y); }, mod_c);
}

double projective_distance(const DualMobius& a, const DualMobius& b) {
  return proj_distance_impl(a, b, dual_gap, mod_d);
}

std::vector<double> default_q_samples() {
  std::vector<double> qs;
  for (int k = 1; k <= 9; ++k) qs.push_back(0.1 * k);
  for (int k = 0; k <= 10; ++k) qs.push_back(1.25 + 0.25 * k);
  return qs;
}

VerifyReport geometry_suite(const std::vector<double>& q_samples, const FlowTolerances& tol) {
  Stopwatch sw;
  VerifyReport rep("geometry");
  const cdouble omega(0.5, std::sqrt(3.0) / 2.0);
  std::vector<cdouble> points;
  for (int k = 0; k < 20; ++k) points.emplace_back(-2.5 + 0.25 * k, 0.05 + 0.15 * k);

  std::string s_w, g_w, tr_w, im_w, comm_w, anti_w, dom_w;
  for (double qd : q_samples) {
    if (!(qd > 0.0 && qd < 4.0 && qd != 1.0)) dom_w = std::to_string(qd);
    const cdouble q(qd);
    const cdouble fix = cdouble(0.0, 1.0) / std::sqrt(q);
    const NumMobius S = inversion_matrix(q);
    const NumMobius G = transition_matrix_num(q);
    const NumMobius T = translation_matrix(q);
    if (std::abs(S.apply(fix) - fix) >= tol.geometry) s_w = "q=" + std::to_string(qd);
    if (std::abs(G.apply(omega) - omega) >= tol.geometry) g_w = "q=" + std::to_string(qd);
    if (!((qd + 1.0) / std::sqrt(qd * qd - qd + 1.0) < 2.0)) tr_w = "q=" + std::to_string(qd);
    if (projective_distance(G * (T * S), (T * S) * G) >= tol.geometry) comm_w = "q=" + std::to_string(qd);
    const NumMobius Ginv{G.c, G.d, G.a, G.b};  // x -> 1/g_q(x)
    const NumMobius sum{(Ginv * S).a + (S * Ginv).a, (Ginv * S).b + (S * Ginv).b, (Ginv * S).c + (S * Ginv).c,
                        (Ginv * S).d + (S * Ginv).d};
    if (std::max({std::abs(sum.a), std::abs(sum.b), std::abs(sum.c), std::abs(sum.d)}) >= tol.geometry) {
      anti_w = "q=" + std::to_string(qd);
    }
    for (double t : {-1.0, 0.5, 1.0}) {
      for (const cdouble& z : points) {
        const cdouble images[3] = {flow_dm1(t, q, z), flow_d0(t, q, z), flow_d1(t, q, z)};
        for (const cdouble& w : images) {
          if (!(w.imag() > 0.0)) im_w = "q=" + std::to_string(qd) + ", t=" + fmt_num(t) + ", z=" + fmt(z);
        }
      }
    }
  }
  const std::string n = " (" + std::to_string(q_samples.size()) + " q samples)";
  rep.add("samples lie in (0,1) u (1,4)", dom_w.empty(), "bad sample " + dom_w);
  rep.add("S_q fixes i q^(-1/2)" + n, s_w.empty(), "fails at " + s_w);
  rep.add("g_q fixes (1+i sqrt3)/2" + n, g_w.empty(), "fails at " + g_w);
  rep.add("normalized trace (q+1)/sqrt(q^2-q+1) < 2" + n, tr_w.empty(), "fails at " + tr_w);
  rep.add("g_q commutes with T_q S_q" + n, comm_w.empty(), "fails at " + comm_w);
  rep.add("matrix of 1/g_q anticommutes with S_q" + n, anti_w.empty(), "fails at " + anti_w);
  rep.add("three flows preserve the upper half-plane on 20 points" + n, im_w.empty(), "fails at " + im_w);

  {
    const cdouble img = inversion_matrix(cdouble(4.0)).apply(cdouble(0.0, 0.5));
    rep.add("q=4: S_q fixes i/2", std::abs(img - cdouble(0.0, 0.5)) < tol.geometry, "image " + fmt(img));
  }
  rep.add("q=1: normalized trace equals 2", (1.0 + 1.0) / std::sqrt(1.0) == 2.0);

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerifyReport flows_suite(const FlowTolerances& tol, std::uint64_t seed) {
  Stopwatch sw;
  VerifyReport rep("flows");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> qdist(0.2, 3.0);
  std::uniform_real_distribution<double> re(-1.5, 1.5);
  std::uniform_real_distribution<double> im(0.3, 1.5);
  auto sample_x = [&]() { return cdouble(re(rng), im(rng)); };

  // Initial values and the classical limits.
  {
    const cdouble x(0.3, 0.7);
    const cdouble q(1.7);
    rep.add("D-1 flow at t=0 is the identity", std::abs(flow_dm1(0.0, q, x) - x) < 1e-15);
    rep.add("D1 flow at t=0 is the identity", std::abs(flow_d1(0.0, q, x) - x) < 1e-15);
    const NumMobius m0 = flow_d0_matrix(0.0, q);
    const cdouble R = q * q - q + 1.0;
    rep.add("D0 matrix at t=0 is (q^2-q+1) I",
            std::abs(m0.a - R) < 1e-15 && std::abs(m0.d - R) < 1e-15 && m0.b == 0.0 && m0.c == 0.0);
    rep.add("q=1: D-1 flow at t=1 is x+1", std::abs(flow_dm1(1.0, 1.0, x) - (x + 1.0)) < 1e-15);
  }

  // The D0 flow against the displayed time-1 map and the Riccati solution.
  {
    double worst_display = 0.0;
    double worst_riccati = 0.0;
    for (int s = 0; s < 50; ++s) {
      const double qd = qdist(rng);
      const cdouble q(qd);
      const cdouble x = sample_x();
      const double t = unit(rng);
      const cdouble eq = std::exp(q);
      const cdouble em = std::exp(-(q - 1.0) * (q - 1.0));
      const cdouble display = ((q * eq + (q - 1.0) * (q - 1.0) * em) * x + (1.0 - q) * (eq - em)) /
                              (q * (1.0 - q) * (eq - em) * x + (1.0 - q) * (1.0 - q) * eq + q * em);
      const cdouble got1 = flow_d0(1.0, q, x);
      worst_display = std::max(worst_display, std::abs(got1 - display) / std::max(1.0, std::abs(display)));
      const cdouble c2 = (q * (1.0 - q) * x - q) / (q - 1.0 - q * x);
      const cdouble a = std::exp(q * t);
      const cdouble b = std::exp(-(q - 1.0) * (q - 1.0) * t);
      const cdouble riccati = (a + c2 * (q - 1.0) / q * b) / ((1.0 - q) * a + c2 * b);
      const cdouble got = flow_d0(t, q, x);
      worst_riccati = std::max(worst_riccati, std::abs(got - riccati) / std::max(1.0, std::abs(riccati)));
    }
    rep.add("D0 flow at t=1 matches the displayed Moebius map", worst_display < tol.group_law,
            "max relative error " + fmt_num(worst_display));
    rep.add("D0 flow matches the Riccati solution with constant C2", worst_riccati < tol.group_law,
            "max relative error " + fmt_num(worst_riccati));
  }

  // Group law.
  {
    double w_dm1 = 0.0, w_d0 = 0.0, w_d1 = 0.0;
    for (int s = 0; s < 200; ++s) {
      const double a = unit(rng);
      const double b = unit(rng);
      const cdouble q(qdist(rng));
      const cdouble x = sample_x();
      const cdouble l1 = flow_dm1(a + b, q, x);
      w_dm1 = std::max(w_dm1, std::abs(l1 - flow_dm1(a, q, flow_dm1(b, q, x))) / std::max(1.0, std::abs(l1)));
      const cdouble l2 = flow_d1(a + b, q, x);
      w_d1 = std::max(w_d1, std::abs(l2 - flow_d1(a, q, flow_d1(b, q, x))) / std::max(1.0, std::abs(l2)));
      w_d0 = std::max(w_d0, projective_distance(flow_d0_matrix(a + b, q), flow_d0_matrix(a, q) * flow_d0_matrix(b, q)));
    }
    rep.add("D-1 flow group law on 200 samples", w_dm1 < tol.group_law, "max error " + fmt_num(w_dm1));
    rep.add("D0 matrix group law (projective) on 200 samples", w_d0 < tol.group_law, "max error " + fmt_num(w_d0));
    rep.add("D1 flow group law on 200 samples", w_d1 < tol.group_law, "max error " + fmt_num(w_d1));
  }

  // Generators by central differences.
  {
    const double h = 1e-6;
    double w[3] = {0.0, 0.0, 0.0};
    for (int s = 0; s < 50; ++s) {
      const cdouble q(qdist(rng));
      const cdouble x = sample_x();
      const cdouble fd[3] = {(flow_dm1(h, q, x) - flow_dm1(-h, q, x)) / (2 * h),
                             (flow_d0(h, q, x) - flow_d0(-h, q, x)) / (2 * h),
                             (flow_d1(h, q, x) - flow_d1(-h, q, x)) / (2 * h)};
      const cdouble exact[3] = {field_dm1(q, x), field_d0(q, x), field_d1(q, x)};
      for (int i = 0; i < 3; ++i) w[i] = std::max(w[i], std::abs(fd[i] - exact[i]) / std::max(1.0, std::abs(exact[i])));
    }
    rep.add("finite differences of the D-1 flow give 1+(q-1)x", w[0] < tol.finite_difference, "max error " + fmt_num(w[0]));
    rep.add("finite differences of the D0 flow give (1+(x-1)q)(1+(q-1)x)", w[1] < tol.finite_difference,
            "max error " + fmt_num(w[1]));
    rep.add("finite differences of the D1 flow give (1+(x-1)q)x", w[2] < tol.finite_difference,
            "max error " + fmt_num(w[2]));
    const cdouble q(2.0);
    const cdouble x(1.0, 1.0);
    const cdouble fd = (flow_d1(h, q, x) - flow_d1(-h, q, x)) / (2 * h);
    rep.add("D1 generator at q=2, x=1+i", std::abs(fd - field_d1(q, x)) < tol.finite_difference, "got " + fmt(fd));
  }

  // First-order jets at q = 1+eps.
  {
    const CDual q = CDual(1.0) + CDual::epsilon();
    const DualMobius Tq = translation_matrix(q);
    const DualMobius Sq = inversion_matrix(q);
    const double d_t = projective_distance(flow_dm1_jet(1.0), Tq);
    rep.add("jet of the D-1 flow at t=1 is T_q", d_t < tol.jet, "distance " + fmt_num(d_t));
    const double d_sts = projective_distance(Sq * flow_dm1_jet(1.0) * Sq, Sq * Tq * Sq);
    rep.add("jet of the D1 flow at t=1 is S_q T_q S_q", d_sts < tol.jet, "distance " + fmt_num(d_sts));
    const double d_w = projective_distance(flow_d0_matrix(1.0, q), w_matrix(1.0, q));
    rep.add("jet of the D0 flow at t=1 is W_q", d_w < tol.jet, "distance " + fmt_num(d_w));
    {
      const double e = std::exp(1.0);
      const DualMobius wq{CDual(e) * (CDual(1.0) - CDual(2.0) * q), CDual(e - 1.0) * (q - CDual(1.0)),
                          CDual(e - 1.0) * (q - CDual(1.0)), -q};
      rep.add("W_q^1 equals [[e(1-2q), (e-1)(q-1)], [(e-1)(q-1), -q]] to first order",
              projective_distance(w_matrix(1.0, q), wq) < tol.jet);
    }
    double worst_w = 0.0, worst_affine = 0.0, worst_gap = 0.0, worst_dil = 0.0;
    for (int s = 0; s < 20; ++s) {
      const double t = 2.0 * unit(rng);
      worst_w = std::max(worst_w, projective_distance(flow_d0_matrix(t, q), w_matrix(t, q)));
      const DualMobius affine{CDual(1.0 - t) + CDual(t) * q, CDual(t), CDual(0.0), CDual(1.0)};
      worst_affine = std::max(worst_affine, projective_distance(flow_dm1_jet(t), affine));
      // The exact flow carries an extra eps t^2/2 in the translation part.
      const DualMobius exact = flow_dm1_matrix(t, q);
      const DualMobius jet = flow_dm1_jet(t);
      const double gap = std::max({dual_gap(exact.a, jet.a), dual_gap(exact.c, jet.c), dual_gap(exact.d, jet.d),
                                   dual_gap(exact.b, CDual(t, t * t / 2.0))});
      worst_gap = std::max(worst_gap, gap);
      const NumMobius dil{std::exp(t / 2.0), 0.0, 0.0, std::exp(-t / 2.0)};
      worst_dil = std::max(worst_dil, projective_distance(w_matrix(t, cdouble(1.0)), dil));
    }
    rep.add("jet of the D0 flow is W_q^t for 20 sampled t", worst_w < tol.jet, "distance " + fmt_num(worst_w));
    rep.add("jet of the D-1 flow is x -> (1-t+qt)x + t for 20 sampled t", worst_affine < tol.jet,
            "distance " + fmt_num(worst_affine));
    rep.add("exact D-1 flow jet differs from the affine map by eps t^2/2 in the translation", worst_gap < tol.jet,
            "max error " + fmt_num(worst_gap));
    rep.add("W_q^t at q=1 is the dilation diag(e^(t/2), e^(-t/2))", worst_dil < tol.jet,
            "distance " + fmt_num(worst_dil));
  }

  // Classical flows of x^n d.
  {
    const cdouble x(0.5, 0.5);
    const auto n0 = classical_witt_flow(0, 1.0, x);
    rep.add("n=0, t=1 gives x+1", n0 && std::abs(*n0 - (x + 1.0)) < 1e-14);
    bool mob = true;
    for (double t : {-0.7, 0.3, 1.1}) {
      const auto v = classical_witt_flow(2, t, x);
      mob = mob && v && std::abs(*v - x / (1.0 - t * x)) < 1e-14;
    }
    rep.add("n=2 gives x/(1-tx)", mob);
    const auto n1 = classical_witt_flow(1, 0.8, x);
    rep.add("n=1 gives x e^t", n1 && std::abs(*n1 - x * std::exp(0.8)) < 1e-14);

    const double h = 1e-6;
    std::string gen_w, init_w, cover_w;
    for (int n = -2; n <= 4; ++n) {
      for (int s = 0; s < 10; ++s) {
        const cdouble z = sample_x();
        const auto p = classical_witt_flow(n, h, z);
        const auto m = classical_witt_flow(n, -h, z);
        const auto z0 = classical_witt_flow(n, 0.0, z);
        if (!z0 || std::abs(*z0 - z) > 1e-14) init_w = "n=" + std::to_string(n);
        const cdouble field = std::pow(z, n);
        if (!p || !m || !close(field, (*p - *m) / (2 * h), tol.finite_difference)) {
          gen_w = "n=" + std::to_string(n) + ", x=" + fmt(z);
        }
        if (n != 1) {
          const double t = 0.2 * unit(rng);
          const auto g = classical_witt_flow(n, t, z);
          const cdouble y = std::pow(z, n - 1);
          if (!g || !close(y / (1.0 - double(n - 1) * t * y), std::pow(*g, n - 1), 1e-10)) {
            cover_w = "n=" + std::to_string(n) + ", x=" + fmt(z);
          }
        }
      }
    }
    rep.add("classical flows start at x", init_w.empty(), "fails at " + init_w);
    rep.add("classical flows have generator x^n (finite differences)", gen_w.empty(), "fails at " + gen_w);
    rep.add("y = x^(n-1) turns the flow into y/(1-(n-1)ty)", cover_w.empty(), "fails at " + cover_w);
    const auto p3 = classical_witt_flow(3, 1e-6, x);
    const auto m3 = classical_witt_flow(3, -1e-6, x);
    const cdouble fd3 = (*p3 - *m3) / 2e-6;
    rep.add("n=3 generator at x=0.5+0.5i is x^3", std::abs(fd3 - x * x * x) < tol.finite_difference, "got " + fmt(fd3));
    rep.add("a flow through the branch point is flagged",
            !classical_witt_flow(3, 1.0, cdouble(1.0)) && !classical_witt_flow(2, 1.0, cdouble(1.0)));
  }

  rep.merge(geometry_suite(default_q_samples(), tol));
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace qdeform
