#include "qdeform/lieverify.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "qdeform/parallel.hpp"

namespace qdeform {

namespace {

const RatFuncQ& q_var() {
  static const RatFuncQ q = RatFuncQ::q();
  return q;
}

RatFuncQ r_poly() {
  const RatFuncQ& q = q_var();
  return q * q - q + 1;
}

Combination negated(Combination c) {
  for (auto& kv : c) kv.second = -kv.second;
  return c;
}

// [D0, Dn], n >= 1
Combination fam_d0_pos(int n) {
  const RatFuncQ& q = q_var();
  const RatFuncQ R = r_poly();
  Combination c;
  add_to(c, n, n * R);
  for (int k = 1; k <= n - 1; ++k) add_to(c, n - k, R * (1 - q).pow(k));
  add_to(c, 0, (1 - q).pow(n));
  return c;
}

// [D0, D-n], n >= 1
Combination fam_d0_neg(int n) {
  const RatFuncQ& q = q_var();
  const RatFuncQ R = r_poly();
  Combination c;
  add_to(c, -n, -n * R);
  for (int k = 1; k <= n - 1; ++k) add_to(c, -n + k, -R * (q - 1).pow(k));
  add_to(c, 0, -(q - 1).pow(n));
  return c;
}

// [Dn, D(n+r)], n, r >= 1
Combination fam_pos(int n, int r) {
  const RatFuncQ& q = q_var();
  Combination c;
  add_to(c, 2 * n + r, RatFuncQ(r));
  add_to(c, 2 * n + r - 1, r * (q - 1));
  return c;
}

// [D-n, D(-n-r)], n, r >= 1
Combination fam_neg(int n, int r) {
  const RatFuncQ& q = q_var();
  Combination c;
  add_to(c, -2 * n - r, RatFuncQ(-r));
  add_to(c, -2 * n - r + 1, r * (q - 1));
  return c;
}

// [D-n, Dn], n >= 1
Combination fam_mid(int n) {
  const RatFuncQ& q = q_var();
  const RatFuncQ qn = q.pow(n - 1);
  const RatFuncQ side = (2 * n - 1) * qn * (q - 1);
  Combination c;
  add_to(c, 0, 2 * n * qn);
  add_to(c, -1, side);
  add_to(c, 1, -side);
  return c;
}

// [D(n+r), D-n], n, r >= 1
Combination fam_plus_minus(int n, int r) {
  const RatFuncQ& q = q_var();
  const RatFuncQ qn = q.pow(n - 1);
  Combination c;
  add_to(c, r + 1, (q - 1) * qn * (2 * n + r - 1));
  add_to(c, r, -(q * q + (2 * n + r - 2) * q + 1) * qn);
  for (int k = 1; k <= r - 1; ++k) add_to(c, r - k, -qn * r_poly() * (1 - q).pow(k));
  add_to(c, 0, -(1 - q).pow(r) * qn);
  return c;
}

// [Dn, D(-n-r)], n, r >= 1
Combination fam_minus_plus(int n, int r) {
  const RatFuncQ& q = q_var();
  const RatFuncQ qn = q.pow(n - 1);
  Combination c;
  add_to(c, -r - 1, -(q - 1) * qn * (2 * n + r - 1));
  add_to(c, -r, -(q * q + (2 * n + r - 2) * q + 1) * qn);
  for (int k = 1; k <= r - 1; ++k) add_to(c, -r + k, -qn * r_poly() * (q - 1).pow(k));
  add_to(c, 0, -(q - 1).pow(r) * qn);
  return c;
}

std::string triple_tag(int i, int j, int k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

bool equal_comb(const Combination& a, const Combination& b) {
  Combination d = a;
  for (const auto& [k, c] : b) add_to(d, k, -c);
  return d.empty();
}

using Vec3 = std::array<RatFuncQ, 3>;  // coefficients of D-1, D0, D1

Vec3 bracket3(const Vec3& a, const Vec3& b, const std::function<RatFuncQ(int, int, int)>& c) {
  Vec3 out{};
  for (int i = -1; i <= 1; ++i) {
    if (a[i + 1].is_zero()) continue;
    for (int j = -1; j <= 1; ++j) {
      if (b[j + 1].is_zero()) continue;
      for (int k = -1; k <= 1; ++k) out[k + 1] += a[i + 1] * b[j + 1] * c(i, j, k);
    }
  }
  return out;
}

std::string vec3_str(const Vec3& v) {
  return "(" + v[0].str('s') + ")*D-1 + (" + v[1].str('s') + ")*D0 + (" + v[2].str('s') + ")*D1";
}

}  // namespace

void add_to(Combination& acc, int k, const RatFuncQ& c) {
  if (c.is_zero()) return;
  auto it = acc.find(k);
  if (it == acc.end()) {
    acc.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

Combination witt_bracket(int i, int j) {
  if (i == j) return {};
  if (i == 0) return j > 0 ? fam_d0_pos(j) : fam_d0_neg(-j);
  if (j == 0) return negated(witt_bracket(0, i));
  if (i > 0 && j > 0) return i < j ? fam_pos(i, j - i) : negated(witt_bracket(j, i));
  if (i < 0 && j < 0) return i > j ? fam_neg(-i, i - j) : negated(witt_bracket(j, i));
  if (i < 0) return -i == j ? fam_mid(j) : negated(witt_bracket(j, i));
  const int p = i;
  const int m = -j;
  if (p == m) return negated(fam_mid(p));
  return p > m ? fam_plus_minus(m, p - m) : fam_minus_plus(p, m - p);
}

std::string witt_family(int i, int j) {
  if (i == j) return "[Dn,Dn]";
  if (i == 0 || j == 0) return (i + j > 0) ? "[D0,Dn]" : "[D0,D-n]";
  if (i > 0 && j > 0) return "[Dn,D(n+r)]";
  if (i < 0 && j < 0) return "[D-n,D(-n-r)]";
  const int p = i > 0 ? i : j;
  const int m = i > 0 ? -j : -i;
  if (p == m) return "[D-n,Dn]";
  return p > m ? "[D(n+r),D-n]" : "[Dn,D(-n-r)]";
}

StructTable::StructTable(int window) : window_(window), bound_(3 * window) {
  if (window < 1) throw std::invalid_argument("window must be positive");
  for (int i = -bound_; i <= bound_; ++i) {
    for (int j = -bound_; j <= bound_; ++j) rows_.emplace(std::make_pair(i, j), witt_bracket(i, j));
  }
}

const Combination& StructTable::bracket(int i, int j) const {
  auto it = rows_.find({i, j});
  if (it == rows_.end()) {
    throw std::out_of_range("index outside the structure table: " + std::to_string(i) + "," + std::to_string(j));
  }
  return it->second;
}

RatFuncQ StructTable::coeff(int i, int j, int k) const {
  const Combination& row = bracket(i, j);
  auto it = row.find(k);
  return it == row.end() ? RatFuncQ() : it->second;
}

StructTable StructTable::transformed(const std::function<RatFuncQ(const RatFuncQ&)>& f) const {
  StructTable out;
  out.window_ = window_;
  out.bound_ = bound_;
  for (const auto& [key, row] : rows_) {
    Combination mapped;
    for (const auto& [k, c] : row) add_to(mapped, k, f(c));
    out.rows_.emplace(key, std::move(mapped));
  }
  return out;
}

Combination bracket_comb(const Combination& a, const Combination& b, const StructTable& table) {
  Combination out;
  for (const auto& [i, ci] : a) {
    for (const auto& [j, cj] : b) {
      const RatFuncQ s = ci * cj;
      for (const auto& [k, ck] : table.bracket(i, j)) add_to(out, k, s * ck);
    }
  }
  return out;
}

Combination jacobi_residual(const StructTable& table, int i, int j, int k) {
  Combination r;
  auto term = [&](int a, int b, int c) {
    for (const auto& [m, cm] : table.bracket(a, b)) {
      for (const auto& [n, cn] : table.bracket(m, c)) add_to(r, n, cm * cn);
    }
  };
  term(i, j, k);
  term(j, k, i);
  term(k, i, j);
  return r;
}

std::string Mat2Q::str() const {
  return "[[" + a.str('s') + ", " + b.str('s') + "], [" + c.str('s') + ", " + d.str('s') + "]]";
}

Mat2Q commutator(const Mat2Q& x, const Mat2Q& y) { return x * y - y * x; }

std::array<Mat2Q, 3> rep2_matrices() {
  const RatFuncQ s = RatFuncQ::q();
  const RatFuncQ q = s * s;
  const RatFuncQ half(Rational(1, 2));
  const RatFuncQ R = q * q - q + 1;
  const Mat2Q dm1{half * (1 - q), 0, s, half * (q - 1)};
  const Mat2Q d0{half * R, 0, 0, -half * R};
  const Mat2Q d1{half * (q - 1), -s, 0, half * (1 - q)};
  return {dm1, d0, d1};
}

VerifyReport sl2_theorem_check() {
  Stopwatch sw;
  VerifyReport rep("sl2");
  const RatFuncQ& q = q_var();
  const RatFuncQ R = r_poly();
  const FirstOrderOp Dm1 = generator(-1);
  const FirstOrderOp D0 = generator(0);
  const FirstOrderOp D1 = generator(1);

  auto check = [&](const std::string& name, const FirstOrderOp& got, const Combination& want) {
    const FirstOrderOp d = got - realize(want);
    rep.add(name, d.is_zero(), "residual " + d.str());
  };
  check("[D0,D1] = (q^2-q+1) D1 + (1-q) D0", bracket(D0, D1), {{1, R}, {0, 1 - q}});
  check("[D0,D-1] = -(q^2-q+1) D-1 + (1-q) D0", bracket(D0, Dm1), {{-1, -R}, {0, 1 - q}});
  check("[D-1,D1] = 2 D0 + (1-q)(D1 - D-1)", bracket(Dm1, D1), {{0, 2}, {1, 1 - q}, {-1, q - 1}});

  // q = 1: l_n = x^{n+1} d.
  const RatFuncQX x = RatFuncQX::x();
  const FirstOrderOp lm1 = FirstOrderOp::vector_field(1);
  const FirstOrderOp l0 = FirstOrderOp::vector_field(x);
  const FirstOrderOp l1 = FirstOrderOp::vector_field(x * x);
  const bool gens = Dm1.specialize_q(1) == lm1 && D0.specialize_q(1) == l0 && D1.specialize_q(1) == l1;
  rep.add("q=1: D-1, D0, D1 become d, x d, x^2 d", gens);
  const bool rel = bracket(l0, l1) == l1 && bracket(l0, lm1) == -lm1 &&
                   bracket(lm1, l1) == RatFuncQX(2) * l0;
  rep.add("q=1: [l0,l1] = l1, [l0,l-1] = -l-1, [l-1,l1] = 2 l0", rel);

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerifyReport witt_theorem_check(int window, unsigned jobs) {
  if (window < 2) throw std::invalid_argument("witt check needs window >= 2");
  Stopwatch sw;
  VerifyReport rep("witt");
  std::vector<std::pair<int, int>> pairs;
  for (int i = -window; i <= window; ++i) {
    for (int j = i + 1; j <= window; ++j) pairs.emplace_back(i, j);
  }
  // Warm the generator cache before going parallel.
  for (int n = -window; n <= window; ++n) generator(n);

  std::vector<std::string> residual(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t idx) {
    const auto [i, j] = pairs[idx];
    const FirstOrderOp d = bracket(generator(i), generator(j)) - realize(witt_bracket(i, j));
    if (!d.is_zero()) residual[idx] = d.str();
  });

  std::map<std::string, std::pair<std::size_t, std::string>> families;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto [i, j] = pairs[idx];
    auto& fam = families[witt_family(i, j)];
    ++fam.first;
    if (!residual[idx].empty() && fam.second.empty()) {
      fam.second = "[D" + std::to_string(i) + ",D" + std::to_string(j) + "] residual " + residual[idx];
    }
  }
  const std::string range = "[" + std::to_string(-window) + "," + std::to_string(window) + "]";
  for (const auto& [name, fam] : families) {
    rep.add(name + " family on " + std::to_string(fam.first) + " pairs in " + range, fam.second.empty(),
            fam.second);
  }

  // q = 1 collapse and the symmetry under D_k -> (-1)^{k-1} D_{-k}.
  std::string collapse_w;
  std::string theta_w;
  const Rational one(1);
  for (int i = -window; i <= window; ++i) {
    for (int j = -window; j <= window; ++j) {
      const Combination c = witt_bracket(i, j);
      Combination at_one;
      for (const auto& [k, v] : c) {
        const Rational val = v.eval(one);
        if (val != 0) at_one.emplace(k, RatFuncQ(val));
      }
      Combination classical;
      add_to(classical, i + j, RatFuncQ(j - i));
      if (!equal_comb(at_one, classical)) collapse_w = "[D" + std::to_string(i) + ",D" + std::to_string(j) + "]";

      const Combination mirrored = witt_bracket(-i, -j);
      Combination expected;
      for (const auto& [k, v] : c) add_to(expected, -k, ((i + j + k - 1) % 2 == 0) ? v : -v);
      if (!equal_comb(mirrored, expected)) theta_w = "[D" + std::to_string(i) + ",D" + std::to_string(j) + "]";
    }
  }
  rep.add("q=1 gives [l_i,l_j] = (j-i) l_(i+j) on " + range, collapse_w.empty(), "fails at " + collapse_w);
  rep.add("c(-i,-j,-k) = (-1)^(i+j+k-1) c(i,j,k) on " + range, theta_w.empty(), "fails at " + theta_w);

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerifyReport jacobi_abstract(int window, unsigned jobs) {
  if (window < 1) throw std::invalid_argument("jacobi check needs a positive window");
  Stopwatch sw;
  VerifyReport rep("jacobi");
  const StructTable table(window);
  const int span = 2 * window + 1;
  const std::size_t total = static_cast<std::size_t>(span) * span * span;
  std::mutex mu;
  std::size_t nonzero = 0;
  std::string witness;
  parallel_for(static_cast<std::size_t>(span), jobs, [&](std::size_t a) {
    const int i = static_cast<int>(a) - window;
    for (int j = -window; j <= window; ++j) {
      for (int k = -window; k <= window; ++k) {
        const Combination r = jacobi_residual(table, i, j, k);
        if (r.empty()) continue;
        std::lock_guard<std::mutex> lock(mu);
        ++nonzero;
        if (witness.empty()) witness = triple_tag(i, j, k) + " residual " + combination_str(r);
      }
    }
  });
  rep.add("Jacobi residual is zero on all " + std::to_string(total) + " triples in [" + std::to_string(-window) +
              "," + std::to_string(window) + "]",
          nonzero == 0, std::to_string(nonzero) + " nonzero, first " + witness);

  // Table against the operator realization on a small window.
  std::string op_w;
  const int w = std::min(window, 3);
  for (int i = -w; i <= w; ++i) {
    for (int j = -w; j <= w; ++j) {
      if (!(bracket(generator(i), generator(j)) == realize(table.bracket(i, j)))) {
        op_w = "[D" + std::to_string(i) + ",D" + std::to_string(j) + "]";
      }
    }
  }
  rep.add("table agrees with operator brackets for |i|,|j| <= " + std::to_string(w), op_w.empty(),
          "fails at " + op_w);

  bool antisym = true;
  for (int i = -table.bound(); i <= table.bound() && antisym; ++i) {
    for (int j = -table.bound(); j <= table.bound(); ++j) {
      if (!equal_comb(table.bracket(i, j), negated(table.bracket(j, i)))) {
        antisym = false;
        break;
      }
    }
  }
  rep.add("table is antisymmetric up to |i|,|j| <= " + std::to_string(table.bound()), antisym);

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerifyReport heisenberg_check() {
  Stopwatch sw;
  VerifyReport rep("heisenberg");
  const RatFuncQ& q = q_var();
  const RatFuncQX g = transition_map();
  const FirstOrderOp Dm1 = generator(-1);
  const FirstOrderOp G = FirstOrderOp::multiplication(g);
  const FirstOrderOp one = FirstOrderOp::multiplication(1);
  const FirstOrderOp z = FirstOrderOp::multiplication(RatFuncQX(q) + RatFuncQX(1 - q) * g);

  const FirstOrderOp dg = bracket(Dm1, G);
  rep.add("[D-1, g] = q + (1-q) g", dg == z, "got " + dg.str());
  rep.add("D-1(g) = (q^2-q+1)/(1+(q-1)x)",
          Dm1.apply(g) == RatFuncQX(r_poly()) / RatFuncQX(PolyQX(std::vector<PolyQ>{PolyQ(1), PolyQ::variable() - 1})));
  const bool central = bracket(one, Dm1).is_zero() && bracket(one, G).is_zero() && bracket(G, one).is_zero() &&
                       bracket(Dm1, one).is_zero();
  rep.add("1 is central", central);
  const bool abelian = bracket(z, z).is_zero() && bracket(z, one).is_zero();
  rep.add("derived algebra span{q + (1-q) g, 1} is abelian", abelian);
  const bool closed = bracket(Dm1, z) == RatFuncQX(1 - q) * dg && bracket(G, z).is_zero();
  rep.add("brackets with q + (1-q) g stay in the derived algebra", closed);

  const FirstOrderOp d = FirstOrderOp::vector_field(1);
  const FirstOrderOp xop = FirstOrderOp::multiplication(RatFuncQX::x());
  rep.add("q=1: D-1 = d and g = x", Dm1.specialize_q(1) == d && G.specialize_q(1) == xop);
  rep.add("q=1: [d, x] = 1", bracket(d, xop) == one);

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerifyReport mod_square_experiments(int window) {
  if (window < 3) throw std::invalid_argument("mod-square experiments need window >= 3");
  Stopwatch sw;
  VerifyReport rep("modsquare");
  const RatFuncQ& q = q_var();

  // (a) The sl2 table over Q[q]/((q-1)^2).
  auto reduced = [](int i, int j) {
    std::map<int, ModSquareElem> out;
    for (const auto& [k, c] : witt_bracket(i, j)) out[k] = mod_square_reduce(c);
    return out;
  };
  auto expect = [&](int i, int j, const Combination& want) {
    auto got = reduced(i, j);
    bool ok = true;
    for (int k = -1; k <= 1; ++k) {
      auto it = want.find(k);
      const ModSquareElem w = it == want.end() ? ModSquareElem() : mod_square_reduce(it->second);
      const ModSquareElem g = got.count(k) ? got[k] : ModSquareElem();
      if (!(w == g)) ok = false;
    }
    return ok;
  };
  rep.add("reduced [d0,d-1] = -q d-1 + (1-q) d0", expect(0, -1, {{-1, -q}, {0, 1 - q}}));
  rep.add("reduced [d0,d1] = q d1 + (1-q) d0", expect(0, 1, {{1, q}, {0, 1 - q}}));
  rep.add("reduced [d-1,d1] = 2 d0 + (1-q)(d1 - d-1)", expect(-1, 1, {{0, 2}, {1, 1 - q}, {-1, q - 1}}));
  rep.add("q^2-q+1 = q mod (q-1)^2", mod_square_reduce(r_poly()) == mod_square_reduce(q));
  {
    std::map<std::pair<int, int>, std::map<int, ModSquareElem>> tab;
    for (int i = -1; i <= 1; ++i) {
      for (int j = -1; j <= 1; ++j) tab[{i, j}] = reduced(i, j);
    }
    bool ok = true;
    std::string w;
    for (int i = -1; i <= 1; ++i) {
      for (int j = -1; j <= 1; ++j) {
        for (int k = -1; k <= 1; ++k) {
          std::map<int, ModSquareElem> r;
          auto term = [&](int a, int b, int c) {
            for (const auto& [m, cm] : tab[{a, b}]) {
              for (const auto& [n, cn] : tab[{m, c}]) r[n] = r[n] + cm * cn;
            }
          };
          term(i, j, k);
          term(j, k, i);
          term(k, i, j);
          for (const auto& [n, v] : r) {
            if (!v.is_zero()) {
              ok = false;
              w = triple_tag(i, j, k);
            }
          }
        }
      }
    }
    rep.add("reduced sl2 table satisfies Jacobi in Q[q]/((q-1)^2)", ok, "fails at " + w);
  }

  // (b) The Witt table, reduced and lifted back to a + b(q-1).
  const StructTable table = StructTable(window).transformed(
      [](const RatFuncQ& c) { return mod_square_reduce(c).lift(); });
  std::size_t broken = 0;
  bool in_ideal = true;
  std::string witness;
  std::string ideal_w;
  for (int i = -3; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      for (int k = j + 1; k <= 3; ++k) {
        const Combination r = jacobi_residual(table, i, j, k);
        if (r.empty()) continue;
        ++broken;
        if (witness.empty()) witness = triple_tag(i, j, k) + " residual " + combination_str(r);
        for (const auto& [n, c] : r) {
          if (!mod_square_reduce(c).is_zero()) {
            in_ideal = false;
            ideal_w = triple_tag(i, j, k);
          }
        }
      }
    }
  }
  rep.add("lifted Witt table breaks Jacobi on " + std::to_string(broken) + " triples in [-3,3]" +
              (witness.empty() ? "" : ", first " + witness),
          broken > 0, "no triple with nonzero residual");
  rep.add("every such residual lies in ((q-1)^2)", in_ideal, "fails at " + ideal_w);

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerifyReport iso_and_rep2_check() {
  Stopwatch sw;
  VerifyReport rep("rep2");
  const RatFuncQ s = RatFuncQ::q();
  const RatFuncQ q = s * s;
  const RatFuncQ R = q * q - q + 1;
  const StructTable table(1);
  std::map<std::tuple<int, int, int>, RatFuncQ> coeffs;
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      for (int k = -1; k <= 1; ++k) coeffs[{i, j, k}] = substitute_q(table.coeff(i, j, k), q);
    }
  }
  auto c = [&](int i, int j, int k) { return coeffs.at({i, j, k}); };

  // Abstract isomorphism to sl2.
  const RatFuncQ sinv = s.inverse();
  const Vec3 f{sinv, sinv * (q - 1) / R, 0};
  const Vec3 h{0, R.inverse(), 0};
  const Vec3 e{0, sinv * (1 - q) / R, sinv};
  auto scaled = [](const RatFuncQ& k, Vec3 v) {
    for (auto& x : v) x *= k;
    return v;
  };
  auto vec_check = [&](const std::string& name, const Vec3& got, const Vec3& want) {
    rep.add(name, got == want, "got " + vec3_str(got) + ", expected " + vec3_str(want));
  };
  vec_check("[h,e] = e", bracket3(h, e, c), e);
  vec_check("[h,f] = -f", bracket3(h, f, c), scaled(-1, f));
  vec_check("[e,f] = -2h", bracket3(e, f, c), scaled(-2, h));

  // The 2x2 representation.
  const auto m = rep2_matrices();
  auto image = [&](const Vec3& v) { return v[0] * m[0] + v[1] * m[1] + v[2] * m[2]; };
  bool traceless = true;
  for (const auto& mat : m) traceless = traceless && mat.trace().is_zero();
  rep.add("representation matrices are traceless", traceless);
  auto mat_check = [&](const std::string& name, int i, int j) {
    Vec3 want{};
    for (int k = -1; k <= 1; ++k) want[k + 1] = c(i, j, k);
    const Mat2Q got = commutator(m[i + 1], m[j + 1]);
    const Mat2Q expected = image(want);
    rep.add(name, got == expected, "got " + got.str() + ", expected " + expected.str());
  };
  mat_check("matrix [D0,D1] = (q^2-q+1) D1 + (1-q) D0", 0, 1);
  mat_check("matrix [D0,D-1] = -(q^2-q+1) D-1 + (1-q) D0", 0, -1);
  mat_check("matrix [D-1,D1] = 2 D0 + (1-q)(D1 - D-1)", -1, 1);
  const RatFuncQ half(Rational(1, 2));
  const bool standard = image(f) == Mat2Q{0, 0, 1, 0} && image(h) == Mat2Q{half, 0, 0, -half} &&
                        image(e) == Mat2Q{0, -1, 0, 0};
  rep.add("f, h, e map to the standard sl2 matrices", standard);

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace qdeform
