#include "doctest.h"
#include "support.hpp"

#include "fano/quadric.hpp"

using namespace fano;
using fano::testing::random_coeffs;
using fano::testing::random_rational;
using fano::testing::random_sl2;

namespace {

MPoly x(int i) { return var(x_var(i)); }

template <class T>
MPoly as_polynomial(const QuadricCoeffs<T>& s) {
  MPoly p;
  for (int k = 0; k < 6; ++k) p += MPoly(s(k)) * basis_forms()[static_cast<std::size_t>(k)];
  return p;
}

// Oracle: substitute x -> M x directly into the polynomial.
MPoly substitute_linear(const MPoly& q, const Mat5<Rational>& m) {
  std::map<Var, MPoly> bind;
  for (int i = 0; i < 5; ++i) {
    MPoly row;
    for (int j = 0; j < 5; ++j) row += m(i, j) * x(j);
    bind[x_var(i)] = row;
  }
  return q.substitute(bind);
}

QuadricCoeffs<Rational> coeffs(std::initializer_list<int> v) {
  QuadricCoeffs<Rational> s;
  int i = 0;
  for (int e : v) s(i++) = Rational(e);
  return s;
}

}  // namespace

TEST_CASE("sym4 of identity and diagonal") {
  CHECK(sym4(SL2<Rational>::identity()) == Mat5<Rational>::Identity());
  const Rational mu(3, 2);
  const Mat5<Rational> d = sym4(SL2<Rational>{mu, 0, 0, mu.inverse()});
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(d(i, j) == (i == j ? pow(mu, 4 - 2 * i) : Rational(0)));
  CHECK_THROWS_AS(sym4(SL2<Rational>{2, 0, 0, 2}), std::invalid_argument);
}

TEST_CASE("sym4 is a homomorphism with determinant one") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g1 = random_sl2(rng);
    const auto g2 = random_sl2(rng);
    const Mat5<Rational> lhs = sym4(g1 * g2);
    const Mat5<Rational> rhs = sym4(g1) * sym4(g2);
    CHECK(lhs == rhs);
    CHECK(fano::testing::leibniz_det(Mat<Rational>(sym4(g1))) == Rational(1));
  }
}

TEST_CASE("symbolic sym4 is unimodular as a polynomial identity") {
  const SL2<MPoly> g = SL2<MPoly>::lower(var(Var::c)) * SL2<MPoly>::upper(var(Var::b));
  CHECK(bareiss_det(Mat<MPoly>(sym4(g))) == MPoly(1));
}

TEST_CASE("C4 parametrization and invariance") {
  CHECK(c4_point(1, 0) == (Point5<Rational>() << 1, 0, 0, 0, 0).finished());
  CHECK(c4_point(1, 1) == Point5<Rational>::Constant(Rational(1)));
  CHECK(is_on_c4(c4_point(1, 1)));
  CHECK(is_on_c4(c4_point(1, 0)));
  CHECK_FALSE(is_on_c4((Point5<Rational>() << 1, 0, 0, 0, 1).finished()));
  CHECK_THROWS_AS(c4_point(0, 0), std::invalid_argument);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_sl2(rng);
    Rational u = random_rational(rng), v = random_rational(rng);
    if (u.is_zero() && v.is_zero()) u = 1;
    const Point5<Rational> image = sym4(g) * c4_point(u, v);
    CHECK(is_on_c4(image));
    CHECK(image == c4_point(g.a * u + g.b * v, g.c * u + g.d * v));
  }
  CHECK(is_on_c4(sym4(random_sl2(rng)) * c4_point(1, 2)));
}

TEST_CASE("form and Gram conversions are inverse") {
  std::mt19937_64 rng(13);
  QuadraticForm<Rational> q;
  for (auto& c : q.c) c = random_rational(rng);
  const auto back = QuadraticForm<Rational>::from_gram(q.gram());
  CHECK(back.c == q.c);
  CHECK(q.gram() == q.gram().transpose());
  // x^T G x reproduces the polynomial
  const Point5<Rational> p = (Point5<Rational>() << 1, -2, 3, Rational(1, 2), 5).finished();
  CHECK((p.transpose() * q.gram() * p)(0, 0) == evaluate_form(form_to_polynomial(q), p));
}

TEST_CASE("express_in_basis examples") {
  const auto f2 = express_in_basis(form_from_polynomial(basis_forms()[2]));
  CHECK(f2 == coeffs({0, 0, 1, 0, 0, 0}).cast<MPoly>());

  const auto q = express_in_basis(form_from_polynomial(x(1) * x(3) - x(2) * x(2)));
  CHECK(q(2) == MPoly(Rational(-1, 4)));
  CHECK(q(5) == MPoly(Rational(-1, 4)));
  for (int k : {0, 1, 3, 4}) CHECK(q(k).is_zero());

  const MPoly other = x(0) * x(4) - x(1) * x(3);
  const auto r = express_in_basis(form_from_polynomial(other));
  CHECK(as_polynomial(r) == other);

  try {
    (void)express_in_basis(form_from_polynomial(x(0) * x(0) + x(2) * x(4)));
    FAIL("expected NotThroughC4");
  } catch (const NotThroughC4& e) {
    // u^8 from x0^2 and u^2 v^6 from x2 x4
    CHECK(e.residual[0] == "1");
    CHECK(e.residual[6] == "1");
    CHECK(e.residual[3] == "0");
  }
}

TEST_CASE("expand then express is the identity") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = random_coeffs(rng);
    CHECK(express_in_basis(expand(s)) == s);
  }
  const auto sym = symbolic_coeffs();
  CHECK(express_in_basis(expand(sym)) == sym);
}

TEST_CASE("pullback agrees with direct substitution and is a right action") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 25; ++trial) {
    const auto s = random_coeffs(rng);
    const auto g1 = random_sl2(rng);
    const auto g2 = random_sl2(rng);
    const auto p1 = pullback(s, g1);
    CHECK(as_polynomial(p1) == substitute_linear(as_polynomial(s), sym4(g1)));
    CHECK(pullback(p1, g2) == pullback(s, g1 * g2));
    CHECK(hessian_det(p1) == hessian_det(s));
    CHECK(pullback_upper(s, g1.b) == pullback(s, SL2<Rational>::upper(g1.b)));
    CHECK(pullback_lower(s, g1.c) == pullback(s, SL2<Rational>::lower(g1.c)));
  }
}

TEST_CASE("unipotent s1 formulas") {
  const MPoly b = var(Var::b), c = var(Var::c);
  QuadricCoeffs<MPoly> s = symbolic_coeffs();
  s(1) = MPoly(1);
  const MPoly s2 = var(Var::s2), s3 = var(Var::s3), s4 = var(Var::s4);
  CHECK(pullback(s, SL2<MPoly>::upper(b))(1) == 2 * s4 * b * b * b + 3 * s3 * b * b + 4 * b * s2 + 1);
  CHECK(pullback_upper(s, b)(1) == 2 * s4 * b * b * b + 3 * s3 * b * b + 4 * b * s2 + 1);

  QuadricCoeffs<MPoly> t = symbolic_coeffs();
  t(1) = MPoly(1);
  t(2) = t(3) = t(4) = MPoly(0);
  CHECK(pullback(t, SL2<MPoly>::lower(c))(1) == 1 + 2 * c * var(Var::s0));
}

TEST_CASE("involutions by substitution") {
  const auto sym = symbolic_coeffs();
  const auto i = involution_act(sym, Involution::iota);
  const auto t = involution_act(sym, Involution::tau);
  const int iota_perm[6] = {4, 3, 2, 1, 0, 5};
  const int tau_sign[6] = {1, -1, 1, -1, 1, 1};
  for (int k = 0; k < 6; ++k) {
    CHECK(i(k) == var(s_var(iota_perm[k])));
    CHECK(t(k) == tau_sign[k] * var(s_var(k)));
  }
  CHECK(involution_act(coeffs({1, 0, 0, 0, 0, 1}), Involution::iota) == coeffs({0, 0, 0, 0, 1, 1}));
  CHECK(involution_act(coeffs({2, 0, -1, 0, 3, 1}), Involution::tau) == coeffs({2, 0, -1, 0, 3, 1}));

  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = random_coeffs(rng);
    CHECK(involution_act(involution_act(s, Involution::iota), Involution::iota) == s);
    CHECK(involution_act(involution_act(s, Involution::tau), Involution::tau) == s);
    CHECK(involution_act(involution_act(s, Involution::iota), Involution::tau) ==
          involution_act(involution_act(s, Involution::tau), Involution::iota));
  }
}

TEST_CASE("C* weights") {
  const MPoly lambda = var(Var::lambda);
  const auto scaled = cstar_act(symbolic_coeffs(), lambda);
  for (int k = 0; k < 6; ++k)
    CHECK(scaled(k) == pow(lambda, static_cast<unsigned>(cstar_weights()[static_cast<std::size_t>(k)])) *
                           var(s_var(k)));
  CHECK(cstar_weights() == std::array<int, 6>{6, 5, 4, 3, 2, 4});
  std::mt19937_64 rng(17);
  const auto s = random_coeffs(rng);
  const Rational l(2), m(-1, 3);
  CHECK(cstar_act(cstar_act(s, l), m) == cstar_act(s, l * m));
  CHECK_THROWS_AS(cstar_act(s, Rational(0)), std::invalid_argument);
}

TEST_CASE("Hessian determinant") {
  const auto sym = symbolic_coeffs();
  const auto [first, second] = hessian_factors(sym);
  const MPoly h = hessian_det(sym);
  CHECK(h == -2 * first * second);

  const MPoly s2 = var(Var::s2), s5 = var(Var::s5);
  const MPoly special = h.substitute({{Var::s0, MPoly(0)}, {Var::s1, MPoly(0)}});
  CHECK(special == 32 * s5 * s5 * (3 * s5 + s2) * (s2 - s5) * (s2 - s5));

  CHECK(hessian_det(coeffs({0, 0, 0, 0, 0, 1})) == Rational(96));
  // 2^5 times the Gram determinant
  const Mat<Rational> gram = expand(coeffs({0, 0, 0, 0, 0, 1})).gram();
  CHECK(fano::testing::leibniz_det(gram) * Rational(32) == Rational(96));
}

TEST_CASE("secant cubic membership") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    Rational u = random_rational(rng), v = random_rational(rng);
    if (u.is_zero() && v.is_zero()) v = 1;
    CHECK(v3_member(c4_point(u, v)));
  }
  const MPoly u = var(Var::u), v = var(Var::v);
  std::map<Var, MPoly> param;
  for (int i = 0; i < 5; ++i) param[x_var(i)] = pow(u, static_cast<unsigned>(4 - i)) * pow(v, static_cast<unsigned>(i));
  CHECK(v3_cubic().substitute(param).is_zero());
  CHECK(v3_member((Point5<Rational>() << 1, 0, 0, 0, 1).finished()));
  CHECK(v3_member((Point5<Rational>() << 0, 1, 0, 0, 0).finished()));
  CHECK_FALSE(v3_member((Point5<Rational>() << 0, 0, 1, 0, 0).finished()));
}
