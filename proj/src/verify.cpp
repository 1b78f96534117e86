#include "fano/verify.hpp"

#include "fano/chow.hpp"
#include "fano/linalg.hpp"
#include "fano/normal_form.hpp"
#include "fano/quadric.hpp"
#include "fano/stability.hpp"
#include "fano/zariski.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace fano {

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "action", "classify", "chow", "zariski", "delta"};
  return names;
}

namespace {

class Builder {
 public:
  explicit Builder(std::string suite) { r_.suite = std::move(suite); }

  void value(std::string name, std::string anchor, std::string origin, const Rational& expected,
             const Rational& computed) {
    r_.checks.push_back({std::move(name), std::move(anchor), std::move(origin), expected.str(), computed.str(),
                         expected == computed});
  }
  void text(std::string name, std::string anchor, std::string origin, std::string expected, std::string computed) {
    const bool ok = expected == computed;
    r_.checks.push_back({std::move(name), std::move(anchor), std::move(origin), std::move(expected),
                         std::move(computed), ok});
  }
  void poly(std::string name, std::string anchor, std::string origin, const MPoly& expected, const MPoly& computed) {
    r_.checks.push_back({std::move(name), std::move(anchor), std::move(origin), expected.str(), computed.str(),
                         expected == computed});
  }
  void truth(std::string name, std::string anchor, std::string origin, bool ok) {
    r_.checks.push_back({std::move(name), std::move(anchor), std::move(origin), "true", ok ? "true" : "false", ok});
  }
  /// Runs `trial` `count` times and records how many returned true.
  void property(std::string name, std::string anchor, int count, const std::function<bool(int)>& trial) {
    int ok = 0;
    for (int i = 0; i < count; ++i) {
      try {
        ok += trial(i) ? 1 : 0;
      } catch (const std::exception&) {
      }
    }
    const std::string expected = std::to_string(count) + "/" + std::to_string(count);
    r_.checks.push_back({std::move(name), std::move(anchor), "property", expected,
                         std::to_string(ok) + "/" + std::to_string(count), ok == count});
  }

  SuiteResult take() { return std::move(r_); }

 private:
  SuiteResult r_;
};

Rational rnd(std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

Rational rnd_nonzero(std::mt19937_64& rng, int bound = 5) {
  Rational r;
  do r = rnd(rng, bound);
  while (r.is_zero());
  return r;
}

MPoly rnd_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  MPoly p;
  for (int t = 0; t < terms; ++t) {
    MPoly m(rnd(rng));
    for (Var v : vars) m *= var(v, static_cast<unsigned>(e(rng)));
    p += m;
  }
  return p;
}

SL2<Rational> rnd_sl2(std::mt19937_64& rng) {
  const Rational a = rnd_nonzero(rng, 3), b = rnd(rng, 3), c = rnd(rng, 3);
  return {a, b, c, (Rational(1) + b * c) / a};
}

QuadricCoeffs<Rational> rnd_smooth_quadric(std::mt19937_64& rng) {
  for (;;) {
    QuadricCoeffs<Rational> s;
    for (int i = 0; i < 6; ++i) s(i) = rnd(rng, 4);
    if (!hessian_det(s).is_zero()) return s;
  }
}

QuadricCoeffs<Rational> quadric(std::initializer_list<int> v) {
  QuadricCoeffs<Rational> s;
  int i = 0;
  for (int e : v) s(i++) = Rational(e);
  return s;
}

MPoly flip_s2(const MPoly& p) { return p.substitute({{Var::s2, -var(Var::s2)}}); }

// ---------------------------------------------------------------------------

SuiteResult core_suite(std::uint64_t seed) {
  Builder b("core");
  std::mt19937_64 rng(seed);
  const std::vector<Var> xyz{Var::u, Var::v, Var::b};
  b.property("ring axioms on random polynomials", "exact arithmetic", 30, [&](int) {
    const MPoly p = rnd_poly(rng, xyz, 4, 3), q = rnd_poly(rng, xyz, 4, 3), r = rnd_poly(rng, xyz, 4, 3);
    return p * (q + r) == p * q + p * r && p * q == q * p && (p * q) * r == p * (q * r) && p - p == MPoly();
  });
  b.property("substitution is a ring homomorphism", "exact arithmetic", 20, [&](int) {
    const MPoly p = rnd_poly(rng, xyz, 3, 2), q = rnd_poly(rng, xyz, 3, 2);
    const std::map<Var, MPoly> bind{{Var::u, rnd_poly(rng, {Var::v}, 2, 2)}};
    return (p * q).substitute(bind) == p.substitute(bind) * q.substitute(bind);
  });
  b.property("resultant vanishes on a shared factor", "Sylvester resultant", 15, [&](int) {
    const MPoly common = var(Var::c) + MPoly(rnd(rng));
    const MPoly f = common * rnd_poly(rng, {Var::c}, 3, 2), g = common * rnd_poly(rng, {Var::c}, 3, 2);
    return resultant(f, g, Var::c).is_zero();
  });
  b.property("resultant of (c - a) and g is g(a)", "Sylvester resultant", 15, [&](int) {
    const Rational a = rnd(rng);
    const MPoly g = rnd_poly(rng, {Var::c}, 4, 3);
    if (g.degree(Var::c) == 0) return true;
    return resultant(var(Var::c) - MPoly(a), g, Var::c) == MPoly(g.evaluate({{Var::c, a}}));
  });
  b.property("fraction-free determinant matches cofactor expansion", "Bareiss determinant", 20, [&](int) {
    Mat<Rational> m(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 4; ++j) m(i, j) = rnd(rng);
    return bareiss_det(m) == expansion_det(m);
  });
  b.property("exact inverse", "linear algebra", 10, [&](int) {
    Mat<Rational> m(3, 3);
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 3; ++j) m(i, j) = rnd(rng);
    if (bareiss_det(m).is_zero()) return true;
    const Mat<Rational> prod = m * exact_inverse(m);
    return prod == Mat<Rational>::Identity(3, 3);
  });
  b.property("iterated integration satisfies Fubini", "piecewise integration", 15, [&](int) {
    const MPoly p = rnd_poly(rng, {Var::u, Var::v}, 4, 3);
    const Rational a = rnd(rng), c = rnd(rng), d = rnd(rng), e = rnd(rng);
    const MPoly uv = integrate(integrate(p, Var::v, MPoly(d), MPoly(e)), Var::u, MPoly(a), MPoly(c));
    const MPoly vu = integrate(integrate(p, Var::u, MPoly(a), MPoly(c)), Var::v, MPoly(d), MPoly(e));
    return uv == vu;
  });
  b.value("int_0^1 (2u^2 - 12u + 14) du", "piecewise integration", "derived", Rational(26, 3),
          integrate(2 * var(Var::u) * var(Var::u) - 12 * var(Var::u) + MPoly(14), Var::u, MPoly(0), MPoly(1))
              .constant_term());
  return b.take();
}

SuiteResult action_suite(std::uint64_t seed) {
  Builder b("action");
  std::mt19937_64 rng(seed);
  b.property("sym4 is a homomorphism", "SL2 action on P4", 100, [&](int) {
    const auto g1 = rnd_sl2(rng), g2 = rnd_sl2(rng);
    return Mat5<Rational>(sym4(g1 * g2)) == Mat5<Rational>(sym4(g1) * sym4(g2));
  });
  b.property("sym4 has unit determinant", "SL2 action on P4", 100, [&](int) {
    return bareiss_det(Mat<Rational>(sym4(rnd_sl2(rng)))) == Rational(1);
  });
  b.property("C4 is invariant", "SL2 action on P4", 50, [&](int) {
    const auto g = rnd_sl2(rng);
    Rational u = rnd(rng), v = rnd(rng);
    if (u.is_zero() && v.is_zero()) u = 1;
    const Point5<Rational> image = sym4(g) * c4_point(u, v);
    return is_on_c4(image) && image == c4_point(g.a * u + g.b * v, g.c * u + g.d * v);
  });
  b.property("pullback is a right action", "SL2 action on quadrics", 20, [&](int) {
    const auto s = rnd_smooth_quadric(rng);
    const auto g1 = rnd_sl2(rng), g2 = rnd_sl2(rng);
    return pullback(pullback(s, g1), g2) == pullback(s, g1 * g2);
  });
  const auto sym = symbolic_coeffs();
  std::string iota, tau;
  const auto ia = involution_act(sym, Involution::iota), ta = involution_act(sym, Involution::tau);
  for (int k = 0; k < 6; ++k) {
    iota += (k ? "," : "") + ia(k).str();
    tau += (k ? "," : "") + ta(k).str();
  }
  b.text("iota coefficient action", "involutions of the normal form", "published", "s4,s3,s2,s1,s0,s5", iota);
  b.text("tau coefficient action", "involutions of the normal form", "published", "s0,-s1,s2,-s3,s4,s5", tau);
  std::string w;
  for (int k : cstar_weights()) w += (w.empty() ? "" : ",") + std::to_string(k);
  b.text("C* weight vector", "torus action", "published", "6,5,4,3,2,4", w);
  const auto [first, second] = hessian_factors(sym);
  const MPoly h = hessian_det(sym);
  b.poly("Hessian factorization", "Hessian determinant", "published", -2 * first * second, h);
  const MPoly s2 = var(Var::s2), s5 = var(Var::s5);
  b.poly("Hessian at s0 = s1 = 0", "Hessian determinant", "published",
         32 * s5 * s5 * (3 * s5 + s2) * (s2 - s5) * (s2 - s5),
         h.substitute({{Var::s0, MPoly(0)}, {Var::s1, MPoly(0)}}));
  return b.take();
}

SuiteResult classify_suite(std::uint64_t seed) {
  Builder b("classify");
  std::mt19937_64 rng(seed);
  b.property("random smooth quadrics reach a normal form with a replayable witness", "classification theorem", 25,
             [&](int) {
               const auto r = classify(rnd_smooth_quadric(rng));
               return r.label.number >= 1 && r.label.number <= 5 && verify_witness(r);
             });
  const auto label = [](std::initializer_list<int> v) { return std::to_string(classify(quadric(v)).label.number); };
  b.text("f1 + f5", "classification theorem", "published", "5", label({0, 1, 0, 0, 0, 1}));
  b.text("f0 + f5", "classification theorem", "published", "3", label({1, 0, 0, 0, 0, 1}));
  b.text("f2 - f5", "classification theorem", "derived", "2", label({0, 0, 1, 0, 0, -1}));
  bool singular = false;
  try {
    (void)classify(quadric({0, 0, 1, 1, 0, 1}));
  } catch (const SingularQuadric&) {
    singular = true;
  }
  b.truth("f2 + f3 + f5 is rejected as singular", "Hessian determinant", "derived", singular);

  const auto& e = elimination_polynomials();
  const MPoly hh = h_invariant(var(Var::s2), var(Var::s4));
  b.poly("Res_c(g1, g2) after normalizing leading coefficients", "elimination of s3", "published",
         pow(hh, 3), flip_s2(e.resultant_g1_g2) * Rational(1, 1024));
  b.poly("Res_c of the second elimination pair", "elimination of s3", "published", hh,
         flip_s2(e.resultant_lemma_pair));
  b.truth("s3' - 2b s4' is free of b", "elimination of s3", "published", !e.b_free_combination.contains(Var::b));

  QuadricCoeffs<MPoly> s;
  s << var(Var::s0), var(Var::s1), var(Var::s2), MPoly(0), MPoly(0), MPoly(1);
  const auto [lhs, rhs] = degeneration_identity(s);
  b.poly("degeneration under x_i -> lambda^i x_i", "degeneration to the normal form", "published", rhs, lhs);
  const auto locus = case1_smoothness_locus();
  b.poly("case 1 smoothness locus", "classification theorem", "published", locus.stated, locus.hessian);
  return b.take();
}

SuiteResult chow_suite() {
  Builder b("chow");
  const auto t = intersection_table();
  b.value("H^3", "intersection numbers on X", "published", 2, t[0]);
  b.value("H^2 E", "intersection numbers on X", "published", 0, t[1]);
  b.value("H E^2", "intersection numbers on X", "published", -4, t[2]);
  b.value("E^3", "intersection numbers on X", "published", -10, t[3]);
  b.value("deg N_{C4/Q}", "intersection numbers on X", "published", 10, Rational(deg_normal_bundle()));
  const auto hp = class_H_prime(), ep = class_E_prime(), k = anticanonical();
  b.value("(2H - E)^3", "intersection numbers on X", "published", 2, triple(hp, hp, hp));
  b.value("(-K_X)^3", "intersection numbers on X", "published", 28, triple(k, k, k));
  b.value("E'^3", "second contraction", "derived", -10, triple(ep, ep, ep));
  b.value("H'.f'", "second contraction", "derived", 0, curve_pair(hp, curve_f_prime()));
  b.value("E'.f'", "second contraction", "derived", -1, curve_pair(ep, curve_f_prime()));
  b.value("-K_X.f'", "second contraction", "derived", 1, curve_pair(k, curve_f_prime()));
  bool compatible = true;
  for (int n : {0, 2, 4, 6})
    for (int a = -2; a <= 2; ++a)
      for (int c = -2; c <= 2; ++c) {
        const DivClass<Rational> d = div_class<Rational>(a, c);
        const auto r = restrict_to_E(d, n);
        compatible = compatible && triple(d, d, class_E()) == fn_dot(r, r, Rational(n));
      }
  b.truth("D^2.E equals (D|_E)^2 on F_n", "restriction to the exceptional surface", "derived", compatible);
  const auto r = restrict_to_E(ep, 6);
  b.text("E'|_E on F_6", "restriction to the exceptional surface", "published", "2s + 8f",
         r(0).str() + "s + " + r(1).str() + "f");
  return b.take();
}

SuiteResult zariski_suite() {
  Builder b("zariski");
  const MPoly u = var(Var::u), v = var(Var::v);
  const auto ph = threefold_path(class_H());
  b.value("tau(H)", "Zariski decomposition of -K_X - uH", "published", Rational(3, 2), ph.tau);
  b.poly("N(u) coefficient of E' on [1, 3/2]", "Zariski decomposition of -K_X - uH", "published", u - MPoly(1),
         ph.pieces.at(1).n_coeffs.at("E'"));
  b.poly("P(u) H-coefficient on [1, 3/2]", "Zariski decomposition of -K_X - uH", "published",
         2 * (MPoly(3) - 2 * u), ph.pieces.at(1).P(0));
  const auto pe = threefold_path(class_E());
  b.value("tau(E)", "Zariski decomposition of -K_X - uE", "published", 1, pe.tau);
  b.value("nef threshold for S = E", "Zariski decomposition of -K_X - uE", "published", Rational(1, 2),
          pe.pieces.at(0).hi);
  b.poly("N(u) coefficient of E' on [1/2, 1]", "Zariski decomposition of -K_X - uE", "published", 2 * u - MPoly(1),
         pe.pieces.at(1).n_coeffs.at("E'"));

  const auto cfg = dp4_blowup_config();
  const auto fams = blowup_chamber_families(cfg);
  b.poly("t~(u) on [0, 1]", "chambers on the blown-up surface", "published", MPoly(4) - 2 * u, fams.at(0).threshold);
  b.poly("t~(u) on [1, 3/2]", "chambers on the blown-up surface", "published", MPoly(6) - 4 * u,
         fams.at(1).threshold);
  b.poly("first chamber end", "chambers on the blown-up surface", "published", MPoly(3) - u,
         fams.at(0).chambers.at(0).v_hi);
  b.poly("N~ coefficient of C1~ in the second chamber", "chambers on the blown-up surface", "published",
         v + u - MPoly(3), fams.at(0).chambers.at(1).N(0));
  b.poly("N~ coefficient of C2~ in the second chamber", "chambers on the blown-up surface", "published",
         v + u - MPoly(3), fams.at(0).chambers.at(1).N(1));
  const int g = cfg.index("G");
  const auto sq0 = chamber_squares(fams.at(0), cfg, g);
  const auto sq1 = chamber_squares(fams.at(1), cfg, g);
  b.poly("P~^2, first chamber", "chambers on the blown-up surface", "published",
         2 * u * u - v * v - 12 * u + MPoly(14), sq0.at(0).p_squared);
  b.poly("P~^2, second chamber", "chambers on the blown-up surface", "published",
         (2 * u + v - MPoly(4)) * (2 * u + v - MPoly(8)), sq0.at(1).p_squared);
  b.poly("P~^2 for u in [1, 3/2]", "chambers on the blown-up surface", "published",
         (4 * u - MPoly(6) + v) * (4 * u - MPoly(6) - v), sq1.at(0).p_squared);
  b.poly("P~.G, second chamber", "chambers on the blown-up surface", "published", MPoly(6) - 2 * u - v,
         sq0.at(1).p_dot_curve);
  b.value("vol(s + f) on F_0", "volumes on Hirzebruch surfaces", "derived", 2,
          hirzebruch_vol(Rational(1), Rational(1), 0));
  const MPoly a2 = MPoly(3) - 3 * u;
  for (int n : {0, 6}) {
    const MPoly b2 = MPoly(Rational(3 * (n + 6), 2)) * (MPoly(1) - u);
    b.poly("vol of P(u)|_E on [1/2, 1], n = " + std::to_string(n), "volumes on Hirzebruch surfaces", "published",
           54 * (MPoly(1) - u) * (MPoly(1) - u), hirzebruch_vol(a2, b2, n).at(2).volume);
  }
  return b.take();
}

SuiteResult delta_suite() {
  Builder b("delta");
  const auto sh = s_divisor(class_H());
  const auto se = s_divisor(class_E());
  b.value("S_X(H)", "hyperplane section", "published", Rational(51, 112), sh.value);
  b.value("beta(H)", "hyperplane section", "published", Rational(61, 112), sh.beta);
  b.value("S_X(E)", "exceptional divisor", "published", Rational(19, 56), se.value);
  b.value("beta(E)", "exceptional divisor", "published", Rational(37, 56), se.beta);
  const auto cfg = dp4_blowup_config();
  b.value("S(W^S; G)", "refinement along G", "published", Rational(111, 56), s_w2_exceptional(cfg).value);
  const auto on = s_w3_point(cfg, true);
  b.value("S(W^{S,G}; O), O off the curves", "point on G", "published", Rational(51, 56),
          s_w3_point(cfg, false).value);
  b.value("F_O", "point on G", "published", Rational(9, 112), on.f_o.value);
  b.value("S(W^{S,G}; O), O on the curves", "point on G", "published", Rational(111, 112), on.value);
  b.value("delta bound at a general point", "delta at a general point", "published", Rational(112, 111),
          delta_bound_generic_point().bound);
  const auto e6 = s_w2_curve_on_E(6);
  b.value("ord-term on E", "curves on E", "published", Rational(27, 224), e6.ord_term);
  for (int n : {0, 2, 4, 6}) {
    const auto r = s_w2_curve_on_E(n);
    b.value("volume term, n = " + std::to_string(n), "curves on E", "published", Rational(23 * n + 546, 896),
            r.volume.value);
    b.truth("total <= 99/112, n = " + std::to_string(n), "curves on E", "published", r.total <= Rational(99, 112));
  }
  b.value("S(W^E; C) bound, n = 6", "curves on E", "published", Rational(99, 112), e6.total);
  const auto beta = beta_certificate_curve_case();
  b.value("curve-case certificate, n = 0", "curves on E", "derived", Rational(448, 327),
          beta.per_n.at(0).second.bound);
  b.value("curve-case certificate, worst n", "curves on E", "derived", Rational(112, 99), beta.bound);
  return b.take();
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "core") return core_suite(seed);
  if (name == "action") return action_suite(seed);
  if (name == "classify") return classify_suite(seed);
  if (name == "chow") return chow_suite();
  if (name == "zariski") return zariski_suite();
  if (name == "delta") return delta_suite();
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace fano
