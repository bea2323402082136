#include "qdeform/opalg.hpp"

#include <mutex>
#include <random>
#include <sstream>
#include <vector>

namespace qdeform {

namespace {

// 1 + (q-1) x
RatFuncQX affine_minus() {
  const PolyQ q = PolyQ::variable();
  return RatFuncQX(PolyQX(std::vector<PolyQ>{PolyQ(1), q - PolyQ(1)}));
}

// 1 + (x-1) q
RatFuncQX affine_plus() {
  const PolyQ q = PolyQ::variable();
  return RatFuncQX(PolyQX(std::vector<PolyQ>{PolyQ(1) - q, q}));
}

std::string describe_diff(const FirstOrderOp& lhs, const FirstOrderOp& rhs) {
  const FirstOrderOp d = lhs - rhs;
  if (d.is_zero()) return {};
  return "difference " + d.str();
}

}  // namespace

RatFuncQX FirstOrderOp::apply(const RatFuncQX& f) const {
  RatFuncQX r = mult_ * f;
  if (!vec_.is_zero()) r += vec_ * f.derivative();
  return r;
}

FirstOrderOp FirstOrderOp::specialize_q(const Rational& q0) const {
  return {mult_.specialize_q(q0), vec_.specialize_q(q0)};
}

FirstOrderOp FirstOrderOp::substitute_q(const RatFuncQ& image) const {
  return {mult_.substitute_q(image), vec_.substitute_q(image)};
}

std::string FirstOrderOp::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (!mult_.is_zero()) out = mult_.str();
  if (!vec_.is_zero()) {
    if (!out.empty()) out += " + ";
    out += "(" + vec_.str() + ")*d";
  }
  return out;
}

FirstOrderOp bracket(const FirstOrderOp& a, const FirstOrderOp& b) {
  RatFuncQX mult;
  RatFuncQX vec;
  if (!a.vec().is_zero() && !b.mult().is_zero()) mult += a.vec() * b.mult().derivative();
  if (!b.vec().is_zero() && !a.mult().is_zero()) mult -= b.vec() * a.mult().derivative();
  if (!a.vec().is_zero() && !b.vec().is_zero()) {
    vec = a.vec() * b.vec().derivative() - b.vec() * a.vec().derivative();
  }
  return {std::move(mult), std::move(vec)};
}

FirstOrderOp conjugate_by(const FirstOrderOp& a, const ProjMap& phi) {
  // (C_phi A C_phi^{-1} f)(x) = m(phi x) f(x) + v(phi x) / phi'(x) f'(x),
  // with 1/phi' = (cx+d)^2 / det.
  const RatFuncQX x = RatFuncQX::x();
  const RatFuncQX cxd = RatFuncQX(phi.c()) * x + RatFuncQX(phi.d());
  const RatFuncQX inv_deriv = cxd * cxd / RatFuncQX(phi.det());
  RatFuncQX mult = a.mult().is_zero() ? RatFuncQX() : apply_fn(phi, a.mult());
  RatFuncQX vec = a.vec().is_zero() ? RatFuncQX() : apply_fn(phi, a.vec()) * inv_deriv;
  return {std::move(mult), std::move(vec)};
}

FirstOrderOp generator(int n) {
  static std::mutex mu;
  static std::map<int, FirstOrderOp> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  FirstOrderOp result;
  if (n == -1) {
    result = FirstOrderOp::vector_field(affine_minus());
  } else if (n == 0) {
    result = FirstOrderOp::vector_field(affine_plus() * affine_minus());
  } else if (n == 1) {
    result = FirstOrderOp::vector_field(affine_plus() * RatFuncQX::x());
  } else if (n > 1) {
    result = transition_map() * generator(n - 1);
  } else {
    result = (RatFuncQX::q() / transition_map()) * generator(n + 1);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(result)).first->second;
}

FirstOrderOp realize(const Combination& comb) {
  FirstOrderOp acc;
  for (const auto& [k, c] : comb) {
    if (!c.is_zero()) acc = acc + RatFuncQX(c) * generator(k);
  }
  return acc;
}

std::string combination_str(const Combination& comb) {
  std::ostringstream os;
  bool first = true;
  for (auto it = comb.rbegin(); it != comb.rend(); ++it) {
    if (it->second.is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << it->second.str() << ")*D" << it->first;
    first = false;
  }
  return first ? "0" : os.str();
}

bool eigencheck(const FirstOrderOp& a, const RatFuncQX& f, const RatFuncQ& alpha) {
  return a.apply(f) == RatFuncQX(alpha) * f;
}

FirstOrderOp AntiCommFamily::op() const {
  const RatFuncQX x = RatFuncQX::x();
  const RatFuncQX q = RatFuncQX::q();
  return FirstOrderOp::vector_field(RatFuncQX(p0) + RatFuncQX(p1) * x - q * RatFuncQX(p0) * x * x);
}

bool anticommuting_family_check(const AntiCommFamily& fam) {
  const FirstOrderOp d = fam.op();
  return conjugate_by(d, q_inversion()) == -d;
}

bool discriminant_identity() {
  const PolyQ q = PolyQ::variable();
  const PolyQ p1 = PolyQ(-1) + PolyQ(3) * q - q * q;
  const PolyQ p0 = PolyQ(1) - q;
  const PolyQ r = q * q - q + PolyQ(1);
  return p1 * p1 + PolyQ(4) * q * p0 * p0 == r * r;
}

FirstOrderOp reparametrize(const FirstOrderOp& a, const ProjMap& phi) {
  if (!a.mult().is_zero()) throw MathError("reparametrize expects a pure vector field");
  const RatFuncQX x = RatFuncQX::x();
  const RatFuncQX cxd = RatFuncQX(phi.c()) * x + RatFuncQX(phi.d());
  const RatFuncQX dphi = RatFuncQX(phi.det()) / (cxd * cxd);
  return FirstOrderOp::vector_field(apply_fn(phi.adjugate(), a.vec() * dphi));
}

VerifyReport gq_action_suite(int window) {
  Stopwatch sw;
  VerifyReport rep("gq_action");
  const RatFuncQ q = RatFuncQ::q();
  const RatFuncQ R = q * q - q + 1;
  const RatFuncQX g = transition_map();
  const RatFuncQX Rx(R);
  const RatFuncQX qx(q);
  const FirstOrderOp Dm1 = generator(-1);
  const FirstOrderOp D0 = generator(0);
  const FirstOrderOp D1 = generator(1);

  auto fn_eq = [&](const std::string& name, const RatFuncQX& lhs, const RatFuncQX& rhs) {
    const bool ok = lhs == rhs;
    rep.add(name, ok, ok ? "" : "got " + lhs.str() + ", expected " + rhs.str());
  };
  auto op_eq = [&](const std::string& name, const FirstOrderOp& lhs, const FirstOrderOp& rhs) {
    const std::string diff = describe_diff(lhs, rhs);
    rep.add(name, diff.empty(), diff);
  };

  fn_eq("D0(g) = (q^2-q+1) g", D0.apply(g), Rx * g);
  fn_eq("D-1(g) = q + (1-q) g", Dm1.apply(g), qx + RatFuncQX(1 - q) * g);
  fn_eq("D1(g) = (q-1) g + g^2", D1.apply(g), RatFuncQX(q - 1) * g + g * g);

  auto comb = [](std::initializer_list<std::pair<const int, RatFuncQ>> items) {
    return realize(Combination(items));
  };
  op_eq("g D0 = (1-q) D0 + (q^2-q+1) D1", g * D0, comb({{0, 1 - q}, {1, R}}));
  op_eq("g D-1 = D0 + (1-q) D1", g * Dm1, comb({{0, 1}, {1, 1 - q}}));
  op_eq("(q/g) D0 = (q-1) D0 + (q^2-q+1) D-1", (qx / g) * D0, comb({{0, q - 1}, {-1, R}}));
  op_eq("(q/g) D1 = D0 + (q-1) D-1", (qx / g) * D1, comb({{0, 1}, {-1, q - 1}}));

  bool by_def = true;
  std::string def_w;
  for (int n = 1; n <= window; ++n) {
    if (!(g * generator(n) == generator(n + 1))) {
      by_def = false;
      def_w = "g D" + std::to_string(n);
    }
    if (n >= 2 && !(g * generator(-n) == RatFuncQX(q) * generator(-n + 1))) {
      by_def = false;
      def_w = "g D-" + std::to_string(n);
    }
    if (!((qx / g) * generator(-n) == generator(-n - 1))) {
      by_def = false;
      def_w = "(q/g) D-" + std::to_string(n);
    }
    if (n >= 2 && !((qx / g) * generator(n) == RatFuncQX(q) * generator(n - 1))) {
      by_def = false;
      def_w = "(q/g) D" + std::to_string(n);
    }
  }
  rep.add("multiplication by g and q/g shifts D_n (|n| <= " + std::to_string(window) + ")", by_def,
          "fails at " + def_w);

  // g^r D0 = (q^2-q+1) sum_{k=0}^{r-1} (1-q)^k D_{r-k} + (1-q)^r D0
  // g^r D-1 = g^{r-1} D0 + (1-q) D_r
  bool power_rule = true;
  bool companion = true;
  std::string pw;
  std::string cw;
  RatFuncQX gr = g;
  for (int r = 1; r <= window; ++r) {
    Combination c;
    for (int k = 0; k < r; ++k) c[r - k] = R * (1 - q).pow(k);
    c[0] = (1 - q).pow(r);
    const std::string diff = describe_diff(gr * D0, realize(c));
    if (!diff.empty()) {
      power_rule = false;
      pw = "r=" + std::to_string(r) + ": " + diff;
    }
    const FirstOrderOp rhs = gr / g * D0 + RatFuncQX(1 - q) * generator(r);
    if (!(gr * Dm1 == rhs)) {
      companion = false;
      cw = "r=" + std::to_string(r);
    }
    gr = gr * g;
  }
  rep.add("g^r D0 expansion for 1 <= r <= " + std::to_string(window), power_rule, pw);
  rep.add("g^r D-1 = g^(r-1) D0 + (1-q) D_r for 1 <= r <= " + std::to_string(window), companion, cw);

  bool ratio = true;
  std::string rw;
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      const RatFuncQX factor = generator(i).apply(g) / generator(j).apply(g);
      if (!(factor * generator(j) == generator(i))) {
        ratio = false;
        rw = "i=" + std::to_string(i) + ", j=" + std::to_string(j);
      }
    }
  }
  rep.add("D_i = (D_i(g)/D_j(g)) D_j for i, j in {-1, 0, 1}", ratio, rw);

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerifyReport opalg_suite(int window, std::uint64_t seed) {
  Stopwatch sw;
  VerifyReport rep("opalg");
  const RatFuncQ q = RatFuncQ::q();
  const RatFuncQ R = q * q - q + 1;
  const RatFuncQX x = RatFuncQX::x();
  const RatFuncQX g = transition_map();
  const ProjMap T = q_translation();
  const ProjMap S = q_inversion();
  const ProjMap G = transition_matrix();
  const FirstOrderOp Dm1 = generator(-1);
  const FirstOrderOp D0 = generator(0);
  const FirstOrderOp D1 = generator(1);

  auto op_eq = [&](const std::string& name, const FirstOrderOp& lhs, const FirstOrderOp& rhs) {
    const std::string diff = describe_diff(lhs, rhs);
    rep.add(name, diff.empty(), diff);
  };
  auto fn_eq = [&](const std::string& name, const RatFuncQX& lhs, const RatFuncQX& rhs) {
    const bool ok = lhs == rhs;
    rep.add(name, ok, ok ? "" : "got " + lhs.str() + ", expected " + rhs.str());
  };

  // Transition map identities.
  fn_eq("g_q(x) g_x(q) = 1", g * g.swap_qx(), RatFuncQX(1));
  fn_eq("g_q(0) = 1-q", g.compose(RatFuncQX(0)), RatFuncQX(1 - q));
  fn_eq("g_q o S_q = -q/g_q", apply_fn(S, g), RatFuncQX(-q) / g);

  // Commutation with T_q and S_q.
  op_eq("D-1 commutes with T_q", conjugate_by(Dm1, T), Dm1);
  op_eq("D0 anticommutes with S_q", conjugate_by(D0, S), -D0);
  op_eq("D1 = S_q D-1 S_q", conjugate_by(Dm1, S), D1);
  op_eq("D1 = (1+(x-1)q) x d",
        D1, FirstOrderOp::vector_field((RatFuncQX(1) + (x - RatFuncQX(1)) * RatFuncQX(q)) * x));

  // Eigenfunctions.
  rep.add("D0(g) = (q^2-q+1) g", eigencheck(D0, g, R));
  rep.add("D0(1/g) = -(q^2-q+1)/g", eigencheck(D0, g.inverse(), -R));

  // Anti-commuting family p0 + p1 x - q p0 x^2.
  rep.add("x d anticommutes with S_q", anticommuting_family_check({0, 1}));
  rep.add("(1 - q x^2) d anticommutes with S_q", anticommuting_family_check({1, 0}));
  {
    const AntiCommFamily fam{1 - q, -1 + 3 * q - q * q};
    const bool ok = anticommuting_family_check(fam) && fam.op() == D0;
    rep.add("p0 = 1-q, p1 = -1+3q-q^2 gives D0", ok);
  }
  {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-5, 5);
    auto random_poly = [&]() {
      return RatFuncQ(PolyQ(std::vector<Rational>{Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng))}));
    };
    bool all = true;
    std::string w;
    for (int trial = 0; trial < 20; ++trial) {
      AntiCommFamily fam{random_poly(), random_poly()};
      if (trial % 4 == 3) fam.p1 = fam.p1 / (q + 2);
      if (!anticommuting_family_check(fam)) {
        all = false;
        w = "p0=" + fam.p0.str() + ", p1=" + fam.p1.str();
      }
    }
    rep.add("20 random (p0, p1) anticommute with S_q", all, w);
  }
  rep.add("(-1+3q-q^2)^2 + 4q(1-q)^2 = (q^2-q+1)^2", discriminant_identity());

  // Reparametrization by xi = g_q(x).
  op_eq("D0 in xi = g_q(x) is (q^2-q+1) xi d_xi", reparametrize(D0, G),
        FirstOrderOp::vector_field(RatFuncQX(R) * x));
  const RatFuncQ qinv = q.inverse();
  op_eq("D-1 in xi = g_q(x) is q D-1(1/q, xi)", reparametrize(Dm1, G),
        RatFuncQX(q) * Dm1.substitute_q(qinv));
  op_eq("D1 in xi = g_q(x) is q D1(1/q, xi)", reparametrize(D1, G), RatFuncQX(q) * D1.substitute_q(qinv));

  // The alternative middle generator [D-1, D1].
  {
    const FirstOrderOp hat = bracket(Dm1, D1);
    op_eq("[D-1, D1] = (1-q+2qx+q(q-1)x^2) d", hat,
          FirstOrderOp::vector_field(RatFuncQX(1 - q) + RatFuncQX(2 * q) * x + RatFuncQX(q * (q - 1)) * x * x));
    op_eq("[D-1, D1] anticommutes with S_q", conjugate_by(hat, S), -hat);
    const RatFuncQX a(q * q + 1);
    const RatFuncQX b((q - 1) * (q - 1));
    op_eq("[hatD0, D1] = (q^2+1) D1 + (q-1)^2 D-1", bracket(hat, D1), a * D1 + b * Dm1);
    op_eq("[hatD0, D-1] = -(q^2+1) D-1 - (q-1)^2 D1", bracket(hat, Dm1), -(a * Dm1) - b * D1);
  }

  rep.merge(gq_action_suite(window));

  // Jacobi on the operator realization.
  {
    std::vector<std::pair<std::string, FirstOrderOp>> ops;
    for (int n = -3; n <= 3; ++n) ops.emplace_back("D" + std::to_string(n), generator(n));
    ops.emplace_back("g", FirstOrderOp::multiplication(g));
    ops.emplace_back("1", FirstOrderOp::multiplication(RatFuncQX(1)));
    bool ok = true;
    std::string w;
    std::size_t count = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        const FirstOrderOp bij = bracket(ops[i].second, ops[j].second);
        for (std::size_t k = j + 1; k < ops.size(); ++k) {
          const FirstOrderOp& A = ops[i].second;
          const FirstOrderOp& B = ops[j].second;
          const FirstOrderOp& C = ops[k].second;
          const FirstOrderOp sum = bracket(bij, C) + bracket(bracket(B, C), A) + bracket(bracket(C, A), B);
          ++count;
          if (!sum.is_zero()) {
            ok = false;
            w = ops[i].first + "," + ops[j].first + "," + ops[k].first;
          }
        }
      }
    }
    rep.add("Jacobi identity on " + std::to_string(count) + " operator triples", ok, w);
  }

  // Conjugation agrees with its functional definition.
  {
    std::mt19937_64 rng(seed + 1);
    std::uniform_int_distribution<long> coef(-4, 4);
    const std::vector<ProjMap> maps{T, S, G};
    bool ok = true;
    std::string w;
    for (int n : {-1, 0, 1, 2}) {
      const FirstOrderOp D = generator(n);
      for (int t = 0; t < 10; ++t) {
        const RatFuncQX f = (RatFuncQX(coef(rng)) * x * x + RatFuncQX(q) * x + RatFuncQX(coef(rng))) /
                            (x + RatFuncQX(RatFuncQ(coef(rng) + 7)));
        const ProjMap& phi = maps[static_cast<std::size_t>(t) % maps.size()];
        const RatFuncQX lhs = conjugate_by(D, phi).apply(f);
        const RatFuncQX rhs = apply_fn(phi, D.apply(apply_fn(phi.adjugate(), f)));
        if (!(lhs == rhs)) {
          ok = false;
          w = "D" + std::to_string(n) + " with " + phi.str();
        }
      }
    }
    rep.add("conjugate_by matches C_phi D C_phi^-1 on 40 test functions", ok, w);
  }

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace qdeform
