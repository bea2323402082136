#include "qdeform/moebius.hpp"

#include <array>
#include <random>
#include <utility>
#include <vector>

namespace qdeform {

const RatFuncQ& ProjPoint::value() const {
  if (!v_) throw MathError("point at infinity has no finite value");
  return *v_;
}

std::string ProjPoint::str() const { return v_ ? v_->str() : "inf"; }

ProjMap::ProjMap(RatFuncQ a, RatFuncQ b, RatFuncQ c, RatFuncQ d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().is_zero()) throw MathError("degenerate Moebius matrix");
}

ProjMap operator*(const ProjMap& l, const ProjMap& r) {
  return {l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_, l.c_ * r.a_ + l.d_ * r.c_,
          l.c_ * r.b_ + l.d_ * r.d_};
}

ProjMap ProjMap::pow(int n) const {
  ProjMap base = n < 0 ? adjugate() : *this;
  unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
  ProjMap result = identity();
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

ProjMap ProjMap::substitute_q(const RatFuncQ& image) const {
  return {a_.substitute(image), b_.substitute(image), c_.substitute(image), d_.substitute(image)};
}

RatFuncQX ProjMap::as_function() const {
  const RatFuncQX x = RatFuncQX::x();
  return (RatFuncQX(a_) * x + RatFuncQX(b_)) / (RatFuncQX(c_) * x + RatFuncQX(d_));
}

std::string ProjMap::str() const {
  return "[[" + a_.str() + ", " + b_.str() + "], [" + c_.str() + ", " + d_.str() + "]]";
}

bool projective_eq(const ProjMap& lhs, const ProjMap& rhs) {
  const std::array<const RatFuncQ*, 4> u{&lhs.a(), &lhs.b(), &lhs.c(), &lhs.d()};
  const std::array<const RatFuncQ*, 4> v{&rhs.a(), &rhs.b(), &rhs.c(), &rhs.d()};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (!(*u[i] * *v[j] - *u[j] * *v[i]).is_zero()) return false;
    }
  }
  return true;
}

ProjPoint apply(const ProjMap& m, const ProjPoint& p) {
  if (p.is_infinity()) {
    if (m.c().is_zero()) return ProjPoint::infinity();
    return m.a() / m.c();
  }
  const RatFuncQ den = m.c() * p.value() + m.d();
  if (den.is_zero()) return ProjPoint::infinity();
  return (m.a() * p.value() + m.b()) / den;
}

RatFuncQX apply_fn(const ProjMap& m, const RatFuncQX& f) { return f.compose(m.as_function()); }

ProjMap q_translation() { return {RatFuncQ::q(), 1, 0, 1}; }

ProjMap q_inversion() { return {0, -1, RatFuncQ::q(), 0}; }

ProjMap q_u_map() { return q_translation() * q_inversion() * q_translation(); }

ProjMap transition_matrix() {
  const RatFuncQ q = RatFuncQ::q();
  return {q, 1 - q, q - 1, 1};
}

ProjMap burau_sigma1() { return q_translation(); }

ProjMap burau_sigma2() {
  const RatFuncQ q = RatFuncQ::q();
  return {1, 0, -q, q};
}

ProjMap q_inverted(const ProjMap& m) { return m.substitute_q(RatFuncQ::q().inverse()); }

std::string entry_difference(const ProjMap& lhs, const ProjMap& rhs) {
  const std::array<std::pair<const char*, RatFuncQ>, 4> diffs{{{"(1,1)", lhs.a() - rhs.a()},
                                                               {"(1,2)", lhs.b() - rhs.b()},
                                                               {"(2,1)", lhs.c() - rhs.c()},
                                                               {"(2,2)", lhs.d() - rhs.d()}}};
  for (const auto& [where, diff] : diffs) {
    if (!diff.is_zero()) return std::string("entry ") + where + " differs by " + diff.str();
  }
  return {};
}

VerifyReport identity_suite(std::uint64_t seed) {
  Stopwatch sw;
  VerifyReport rep("moebius");
  const RatFuncQ q = RatFuncQ::q();
  const ProjMap T = q_translation();
  const ProjMap S = q_inversion();
  const ProjMap G = transition_matrix();
  const ProjMap I = ProjMap::identity();

  auto projective = [&](const std::string& name, const ProjMap& l, const ProjMap& r) {
    const bool ok = projective_eq(l, r);
    rep.add(name, ok, ok ? "" : "not proportional: " + l.str() + " vs " + r.str());
  };
  auto exact = [&](const std::string& name, const ProjMap& l, const ProjMap& r) {
    const std::string diff = entry_difference(l, r);
    rep.add(name, diff.empty(), diff);
  };

  projective("S_q^2 = id", S * S, I);
  projective("(S_q T_q)^3 = id", (S * T).pow(3), I);
  const ProjMap s1 = burau_sigma1();
  const ProjMap s2 = burau_sigma2();
  projective("sigma2 = S_q T_q S_q", s2, S * T * S);
  projective("braid relation", s1 * s2 * s1, s2 * s1 * s2);
  exact("g_q T_q = q T_{1/q} g_q", G * T, q_inverted(T).scaled(q) * G);
  exact("g_q S_q = q S_{1/q} g_q", G * S, q_inverted(S).scaled(q) * G);
  {
    const RatFuncQ e11 = (G * T).a();
    rep.add("(g_q T_q)_{11} = q^2", e11 == q * q, "got " + e11.str());
  }
  {
    const RatFuncQ d = G.det();
    rep.add("det g_q = q^2-q+1", d == q * q - q + 1, "got " + d.str());
  }
  projective("g_q commutes with T_q S_q", G * (T * S), (T * S) * G);
  {
    // x -> 1/g_q(x)
    const ProjMap recip(G.c(), G.d(), G.a(), G.b());
    const ProjMap l = recip * S;
    const ProjMap r = S * recip;
    const RatFuncQ sums[4] = {l.a() + r.a(), l.b() + r.b(), l.c() + r.c(), l.d() + r.d()};
    std::string witness;
    for (const auto& s : sums) {
      if (!s.is_zero()) witness = "anticommutator entry " + s.str();
    }
    rep.add("matrix of 1/g_q anticommutes with S_q", witness.empty(), witness);
  }
  {
    const ProjPoint g_inf = apply(G, ProjPoint::infinity());
    const RatFuncQ expected = q / (q - 1);
    rep.add("g_q(inf) = q/(q-1)", g_inf == ProjPoint(expected), "got " + g_inf.str());
  }

  // Randomized properties of the action.
  std::mt19937_64 rng(seed);
  const std::vector<ProjMap> gens{T, S, q_u_map(), G, s1, s2};
  const RatFuncQX x = RatFuncQX::x();
  const std::vector<RatFuncQX> fns{x, transition_map(), (x * x + RatFuncQX(q)) / (x - RatFuncQX(2)),
                                   RatFuncQX(q) * x.pow(3) - RatFuncQX(1)};
  std::uniform_int_distribution<std::size_t> pick_gen(0, gens.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_fn(0, fns.size() - 1);
  std::uniform_int_distribution<long> small(-9, 9);
  std::uniform_int_distribution<long> pos(1, 9);

  bool contravariant = true;
  bool det_mult = true;
  std::string witness;
  for (int trial = 0; trial < 12; ++trial) {
    const ProjMap& A = gens[pick_gen(rng)];
    const ProjMap& B = gens[pick_gen(rng)];
    const RatFuncQX& f = fns[pick_fn(rng)];
    if (!(apply_fn(A * B, f) == apply_fn(B, apply_fn(A, f)))) {
      contravariant = false;
      witness = "A=" + A.str() + " B=" + B.str();
    }
    if (!((A * B).det() == A.det() * B.det())) det_mult = false;
  }
  rep.add("apply_fn(AB, f) = apply_fn(B, apply_fn(A, f))", contravariant, witness);
  rep.add("det(AB) = det(A) det(B)", det_mult);

  bool pointwise = true;
  std::string pw_witness;
  for (int trial = 0; trial < 50; ++trial) {
    const ProjMap& A = gens[pick_gen(rng)];
    Rational q0(small(rng), pos(rng));
    Rational x0(small(rng), pos(rng));
    q0.canonicalize();
    x0.canonicalize();
    if (q0 == 0) continue;
    const RatFuncQX fA = A.as_function();
    const Rational den = fA.den().eval(q0, x0);
    const ProjPoint image = apply(A, ProjPoint(RatFuncQ(x0)));
    if (den == 0 || image.is_infinity() || image.value().den().eval(q0) == 0) continue;
    const Rational direct = image.value().eval(q0);
    if (direct != fA.eval(q0, x0)) {
      pointwise = false;
      pw_witness = "A=" + A.str() + " at q=" + q0.get_str() + ", x=" + x0.get_str();
    }
  }
  rep.add("apply agrees with apply_fn pointwise", pointwise, pw_witness);

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace qdeform
