#include "doctest.h"
#include "support.hpp"

#include "fano/zariski.hpp"

#include <random>

using namespace fano;

namespace {

const MPoly U = var(Var::u);
const MPoly V = var(Var::v);

MPoly sym(const std::string& text) {
  // Small helper for affine expressions a + b u + c v given as three numbers "a,b,c".
  std::vector<Rational> c;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(',', start);
    c.push_back(Rational::parse(text.substr(start, end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return MPoly(c[0]) + c[1] * U + c[2] * V;
}

using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Pointwise Zariski decomposition by growing the negative support.
std::pair<VecQ, VecQ> zariski_at(const VecQ& d, const Mat<Rational>& g) {
  const auto n = d.size();
  std::vector<int> supp;
  VecQ p = d, neg = VecQ::Constant(n, Rational(0));
  for (;;) {
    std::vector<int> bad;
    for (int i = 0; i < n; ++i) {
      Rational s(0);
      for (int j = 0; j < n; ++j) s += p(j) * g(j, i);
      if (s.sign() < 0) bad.push_back(i);
    }
    if (bad.empty()) return {p, neg};
    for (int b : bad) supp.push_back(b);
    const auto k = static_cast<Eigen::Index>(supp.size());
    Mat<Rational> gs(k, k);
    VecQ rhs(k);
    for (Eigen::Index a = 0; a < k; ++a) {
      for (Eigen::Index b = 0; b < k; ++b) gs(a, b) = g(supp[a], supp[b]);
      Rational s(0);
      for (int j = 0; j < n; ++j) s += d(j) * g(j, supp[a]);
      rhs(a) = s;
    }
    const VecQ x = exact_inverse(gs) * rhs;
    neg = VecQ::Constant(n, Rational(0));
    for (Eigen::Index a = 0; a < k; ++a) neg(supp[a]) = x(a);
    p = d - neg;
  }
}

VecQ eval(const SurfClass& c, const Point& pt) {
  VecQ out(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) out(i) = c(i).evaluate(pt);
  return out;
}

SurfClass blowup_class(int piece) { return pullback_minus_vG(h_surface_restriction(piece), {1, 1, 1, 1}); }

}  // namespace

TEST_CASE("threefold path for S = H") {
  const auto path = threefold_path(class_H());
  CHECK(path.tau == Rational(3, 2));
  REQUIRE(path.pieces.size() == 2);
  const auto& a = path.pieces[0];
  const auto& b = path.pieces[1];
  CHECK(a.lo == Rational(0));
  CHECK(a.hi == Rational(1));
  CHECK(b.lo == Rational(1));
  CHECK(b.hi == Rational(3, 2));
  CHECK(a.P(0) == MPoly(3) - U);
  CHECK(a.P(1) == MPoly(-1));
  CHECK(a.N(0).is_zero());
  CHECK(a.N(1).is_zero());
  CHECK(b.P(0) == (MPoly(3) - 2 * U) * 2);
  CHECK(b.P(1) == -(MPoly(3) - 2 * U));
  CHECK(b.n_coeffs.at("E'") == U - MPoly(1));
  const auto p0 = a.P;
  DivClass<Rational> at0 = div_class(p0(0).evaluate({{Var::u, 0}}), p0(1).evaluate({{Var::u, 0}}));
  CHECK(triple(at0, at0, at0) == Rational(28));
}

TEST_CASE("threefold path for S = E") {
  const auto path = threefold_path(class_E());
  CHECK(path.tau == Rational(1));
  REQUIRE(path.pieces.size() == 2);
  CHECK(path.pieces[0].hi == Rational(1, 2));
  CHECK(path.pieces[1].n_coeffs.at("E'") == 2 * U - MPoly(1));
  CHECK(path.pieces[1].P(0) == (MPoly(3) - 3 * U) * 2);
  CHECK(path.pieces[1].P(1) == -(MPoly(3) - 3 * U));
}

TEST_CASE("threefold path decomposition identities") {
  for (const auto& s : {class_H(), class_E()}) {
    const auto path = threefold_path(s);
    Rational prev(0);
    for (const auto& pc : path.pieces) {
      CHECK(pc.lo == prev);
      prev = pc.hi;
      const DivClass<MPoly> d = div_class<MPoly>(MPoly(3) - s(0) * U, MPoly(-1) - s(1) * U);
      CHECK(DivClass<MPoly>(pc.P + pc.N) == d);
      for (const Rational& x : {pc.lo, pc.hi, (pc.lo + pc.hi) * Rational(1, 2)}) {
        const Point pt{{Var::u, x}};
        CHECK(curve_pair(pc.P, curve_f()).evaluate(pt).sign() >= 0);
        CHECK(curve_pair(pc.P, curve_f_prime()).evaluate(pt).sign() >= 0);
      }
    }
    CHECK(prev == path.tau);
  }
  CHECK_THROWS_AS(threefold_path(class_H_prime()), std::invalid_argument);
}

TEST_CASE("blown-up configuration table") {
  const auto cfg = dp4_blowup_config();
  Mat<Rational> expected(5, 5);
  expected << -1, 0, 1, 0, 1,
               0, -1, 0, 1, 1,
               1, 0, -1, 0, 1,
               0, 1, 0, -1, 1,
               1, 1, 1, 1, -1;
  CHECK(cfg.gram == expected);
  CHECK(named_config("hirzebruch-4").gram(0, 0) == Rational(-4));
  CHECK_THROWS(named_config("hirzebruch-3"));
  CHECK_THROWS(named_config("cubic"));
}

TEST_CASE("surface restriction squares agree with the threefold") {
  const auto path = threefold_path(class_H());
  const auto cfg = dp4_config();
  for (int piece = 0; piece < 2; ++piece) {
    const auto& p = path.pieces[static_cast<std::size_t>(piece)].P;
    const auto c = h_surface_restriction(piece);
    CHECK(surf_dot(c, c, cfg.gram) == triple(p, p, div_class<MPoly>(MPoly(1), MPoly())));
  }
  // Pull-back preserves squares at v = 0.
  const auto bcfg = dp4_blowup_config();
  for (int piece = 0; piece < 2; ++piece) {
    const auto c = h_surface_restriction(piece);
    const auto pb = blowup_class(piece);
    CHECK(surf_dot(pb, pb, bcfg.gram).substitute({{Var::v, MPoly()}}) == surf_dot(c, c, cfg.gram));
  }
}

TEST_CASE("surface chambers for u in [0, 1]") {
  const auto cfg = dp4_blowup_config();
  const auto ch = surface_chambers(blowup_class(0), cfg, 0, 1);
  REQUIRE(ch.chambers.size() == 2);
  CHECK(ch.chambers[0].v_lo.is_zero());
  CHECK(ch.chambers[0].v_hi == sym("3,-1,0"));
  CHECK(ch.chambers[1].v_hi == sym("4,-2,0"));
  CHECK(ch.threshold == sym("4,-2,0"));
  for (int i = 0; i < 5; ++i) CHECK(ch.chambers[0].N(i).is_zero());
  CHECK(ch.chambers[1].N(0) == sym("-3,1,1"));
  CHECK(ch.chambers[1].N(1) == sym("-3,1,1"));
  CHECK(ch.chambers[1].N(2).is_zero());

  const auto sq = chamber_squares(ch, cfg, cfg.index("G"));
  CHECK(sq[0].p_squared == 2 * U * U - V * V - 12 * U + MPoly(14));
  CHECK(sq[0].p_dot_curve == V);
  CHECK(sq[1].p_squared == (2 * U + V - MPoly(4)) * (2 * U + V - MPoly(8)));
  CHECK(sq[1].p_dot_curve == MPoly(6) - 2 * U - V);
}

TEST_CASE("surface chambers for u in [1, 3/2]") {
  const auto cfg = dp4_blowup_config();
  const auto ch = surface_chambers(blowup_class(1), cfg, 1, Rational(3, 2));
  REQUIRE(ch.chambers.size() == 1);
  CHECK(ch.threshold == sym("6,-4,0"));
  for (int i = 0; i < 5; ++i) CHECK(ch.chambers[0].N(i).is_zero());
  const auto sq = chamber_squares(ch, cfg, cfg.index("G"));
  CHECK(sq[0].p_squared == (4 * U - MPoly(6) + V) * (4 * U - MPoly(6) - V));
  CHECK(sq[0].p_dot_curve == V);
}

TEST_CASE("chamber invariants and pointwise oracle") {
  const auto cfg = dp4_blowup_config();
  std::mt19937_64 rng(21);
  const std::array<std::pair<Rational, Rational>, 2> ranges{{{0, 1}, {1, Rational(3, 2)}}};
  for (int piece = 0; piece < 2; ++piece) {
    const auto [lo, hi] = ranges[static_cast<std::size_t>(piece)];
    const auto ch = surface_chambers(blowup_class(piece), cfg, lo, hi);
    for (std::size_t k = 0; k < ch.chambers.size(); ++k) {
      const auto& c = ch.chambers[k];
      CHECK(SurfClass(c.P + c.N) == ch.cls);
      for (int s : c.support) {
        CHECK(surf_dot_curve(c.P, s, cfg.gram).is_zero());
      }
      if (k + 1 < ch.chambers.size()) {
        // Volumes agree on the shared boundary.
        const auto& d = ch.chambers[k + 1];
        CHECK(c.v_hi == d.v_lo);
        CHECK(surf_dot(c.P, c.P, cfg.gram).substitute({{Var::v, c.v_hi}}) ==
              surf_dot(d.P, d.P, cfg.gram).substitute({{Var::v, c.v_hi}}));
      }
    }
    std::uniform_int_distribution<int> pick(0, 48);
    for (int trial = 0; trial < 40; ++trial) {
      const Rational u = lo + (hi - lo) * Rational(pick(rng), 48);
      const Point base{{Var::u, u}};
      const Rational t = ch.threshold.evaluate(base);
      const Rational v = t * Rational(pick(rng), 48);
      const Point pt{{Var::u, u}, {Var::v, v}};
      const auto [p, n] = zariski_at(eval(ch.cls, pt), cfg.gram);
      const Chamber* hit = nullptr;
      for (const auto& c : ch.chambers)
        if (c.v_lo.evaluate(base) <= v && v <= c.v_hi.evaluate(base)) hit = &c;
      REQUIRE(hit != nullptr);
      CHECK(eval(hit->P, pt) == p);
      CHECK(eval(hit->N, pt) == n);
    }
  }
}

TEST_CASE("surface chamber guards") {
  const auto cfg = dp4_blowup_config();
  SurfClass bad = blowup_class(0);
  bad(0) = bad(0) * U;
  CHECK_THROWS_AS(surface_chambers(bad, cfg, 0, 1), std::domain_error);
  Mat<Rational> g(2, 2);
  g << -1, 2, 2, -1;
  CHECK_FALSE(negative_definite(g));
  g << -2, 1, 1, -1;
  CHECK(negative_definite(g));
}

TEST_CASE("Hirzebruch volumes") {
  CHECK(hirzebruch_vol(Rational(1), Rational(1), 0) == Rational(2));
  CHECK(hirzebruch_vol(Rational(-1), Rational(3), 2) == Rational(0));
  CHECK(hirzebruch_vol(Rational(2), Rational(1), 2) == Rational(1, 2));
  // Continuity of the case split along b = n a.
  for (int n : {2, 4, 6})
    for (int a = 1; a < 4; ++a) {
      const auto regions = hirzebruch_vol(MPoly(a), var(Var::b), n);
      const MPoly at = MPoly(n * a);
      CHECK(regions[2].volume.substitute({{Var::b, at}}) == regions[3].volume.substitute({{Var::b, at}}));
    }
  for (int n : {0, 2, 4, 6}) {
    const MPoly a = MPoly(3) - 3 * U;
    const MPoly b = (MPoly(3 * (n + 6)) * Rational(1, 2)) * (MPoly(1) - U);
    const auto regions = hirzebruch_vol(a, b, n);
    CHECK(regions[2].name == "nef");
    CHECK(regions[2].volume == 54 * (MPoly(1) - U) * (MPoly(1) - U));
  }
}

TEST_CASE("nef threshold on E") {
  const auto path = threefold_path(class_E());
  for (int n : {0, 2, 4, 6}) {
    CHECK(restrict_to_E(path.pieces[0].P, MPoly(n))(0) == MPoly(1) + U);
    CHECK(restrict_to_E(path.pieces[1].P, MPoly(n))(0) == MPoly(3) - 3 * U);
  }
}

TEST_CASE("affine sign helpers") {
  const auto verts = strip_vertices(0, 1, MPoly(), sym("3,-1,0"));
  CHECK(verts.size() == 4);
  CHECK(nonneg_at_vertices(sym("3,-1,-1"), verts));
  CHECK_FALSE(nonneg_at_vertices(sym("2,-1,-1"), verts));
  CHECK_THROWS_AS(nonneg_at_vertices(U * V, verts), std::domain_error);
  CHECK(nonneg_on_interval((U - MPoly(1)) * (U - MPoly(5)), 0, 1));
  CHECK_FALSE(nonneg_on_interval((U - MPoly(1)) * (U - MPoly(5)), 0, 2));
  CHECK_FALSE(nonneg_on_interval(U * U - U + MPoly(Rational(1, 8)), 0, 1));
}
