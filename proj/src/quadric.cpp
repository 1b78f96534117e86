#include "fano/quadric.hpp"


namespace fano {

namespace {

MPoly x(int i) { return var(x_var(i)); }

std::array<MPoly, 6> make_basis() {
  return {x(3) * x(3) - x(2) * x(4),
          x(2) * x(3) - x(1) * x(4),
          x(2) * x(2) - x(0) * x(4),
          x(1) * x(2) - x(0) * x(3),
          x(1) * x(1) - x(0) * x(2),
          3 * x(2) * x(2) - 4 * x(1) * x(3) + x(0) * x(4)};
}

Mat<Rational> make_basis_matrix() {
  Mat<Rational> f = Mat<Rational>::Constant(15, 6, Rational(0));
  const auto& basis = basis_forms();
  for (int k = 0; k < 6; ++k) {
    const QuadraticForm<MPoly> q = form_from_polynomial(basis[static_cast<std::size_t>(k)]);
    for (int m = 0; m < 15; ++m) f(m, k) = q.c[static_cast<std::size_t>(m)].constant_term();
  }
  return f;
}

Eigen::Matrix<MPoly, 6, 6> make_action_matrix(const SL2<MPoly>& g, Var param) {
  const QuadricCoeffs<MPoly> image = pullback(symbolic_coeffs(), g);
  Eigen::Matrix<MPoly, 6, 6> r;
  for (int i = 0; i < 6; ++i) {
    const auto by_s = [&](int j) {
      // coefficient of s_j: image is linear in s
      std::map<Var, MPoly> point;
      for (int k = 0; k < 6; ++k) point[s_var(k)] = MPoly(k == j ? 1 : 0);
      return image(i).substitute(point);
    };
    for (int j = 0; j < 6; ++j) {
      r(i, j) = by_s(j);
      for (Var v : r(i, j).variables())
        if (v != param) throw std::logic_error("action matrix has a foreign variable");
    }
  }
  return r;
}

}  // namespace

int monomial_index(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j > 4) throw std::out_of_range("monomial index");
  // rows of the upper triangle: 5 + 4 + ... entries before row i
  return i * 5 - i * (i - 1) / 2 + (j - i);
}

const std::array<MPoly, 6>& basis_forms() {
  static const std::array<MPoly, 6> basis = make_basis();
  return basis;
}

const MPoly& v3_cubic() {
  static const MPoly cubic =
      x(0) * x(3) * x(3) - 2 * x(1) * x(2) * x(3) - x(0) * x(2) * x(4) + x(1) * x(1) * x(4) + x(2) * x(2) * x(2);
  return cubic;
}

const std::array<int, 6>& cstar_weights() {
  static const std::array<int, 6> w{6, 5, 4, 3, 2, 4};
  return w;
}

const Mat<Rational>& basis_matrix() {
  static const Mat<Rational> f = make_basis_matrix();
  return f;
}

const Mat<Rational>& basis_left_inverse() {
  static const Mat<Rational> left = [] {
    const Mat<Rational>& f = basis_matrix();
    const Mat<Rational> ftf = f.transpose() * f;
    return Mat<Rational>(exact_inverse(ftf) * f.transpose());
  }();
  return left;
}

QuadraticForm<MPoly> form_from_polynomial(const MPoly& q) {
  QuadraticForm<MPoly> out;
  for (const auto& [m, c] : q.terms()) {
    Monomial rest = m;
    std::vector<int> idx;
    for (int i = 0; i < 5; ++i) {
      const auto e = m[x_var(i)];
      for (unsigned k = 0; k < e; ++k) idx.push_back(i);
      rest.exp[static_cast<std::size_t>(x_var(i))] = 0;
    }
    if (idx.size() != 2) throw std::invalid_argument("not a quadratic form in x0..x4: " + q.str());
    out.at(idx[0], idx[1]) += MPoly::term(rest, c);
  }
  return out;
}

MPoly form_to_polynomial(const QuadraticForm<Rational>& q) {
  MPoly p;
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j)
      if (!q.at(i, j).is_zero()) p += q.at(i, j) * x(i) * x(j);
  return p;
}

NotThroughC4::NotThroughC4(std::vector<std::string> res)
    : std::domain_error("quadric does not contain C4"), residual(std::move(res)) {}

QuadricCoeffs<MPoly> symbolic_coeffs() {
  QuadricCoeffs<MPoly> s;
  for (int i = 0; i < 6; ++i) s(i) = var(s_var(i));
  return s;
}

const Eigen::Matrix<MPoly, 6, 6>& upper_action_matrix() {
  static const auto r = make_action_matrix(SL2<MPoly>::upper(var(Var::b)), Var::b);
  return r;
}

const Eigen::Matrix<MPoly, 6, 6>& lower_action_matrix() {
  static const auto r = make_action_matrix(SL2<MPoly>::lower(var(Var::c)), Var::c);
  return r;
}

QuadricCoeffs<Rational> normalize_projective(const QuadricCoeffs<Rational>& s) {
  for (int i = 0; i < 6; ++i)
    if (!s(i).is_zero()) return s / s(i);
  throw std::invalid_argument("zero coefficient vector");
}

Point5<Rational> c4_point(const Rational& u, const Rational& v) {
  if (u.is_zero() && v.is_zero()) throw std::invalid_argument("c4_point at (0, 0)");
  Point5<Rational> p;
  for (int i = 0; i < 5; ++i) p(i) = pow(u, 4 - i) * pow(v, i);
  return p;
}

Rational evaluate_form(const MPoly& form, const Point5<Rational>& p) {
  std::map<Var, Rational> point;
  for (int i = 0; i < 5; ++i) point[x_var(i)] = p(i);
  return form.evaluate(point);
}

bool is_on_c4(const Point5<Rational>& p) {
  bool nonzero = false;
  for (int i = 0; i < 5; ++i) nonzero = nonzero || !p(i).is_zero();
  if (!nonzero) return false;
  const auto& basis = basis_forms();
  for (int k = 0; k < 5; ++k)
    if (!evaluate_form(basis[static_cast<std::size_t>(k)], p).is_zero()) return false;
  return true;
}

bool v3_member(const Point5<Rational>& p) { return evaluate_form(v3_cubic(), p).is_zero(); }

std::string coeffs_str(const QuadricCoeffs<Rational>& s) {
  std::string out = "(";
  for (int i = 0; i < 6; ++i) {
    if (i) out += ", ";
    out += s(i).str();
  }
  return out + ")";
}

}  // namespace fano
