#pragma once

#include "fano/algebraic.hpp"
#include "fano/linalg.hpp"
#include "fano/mpoly.hpp"
#include "fano/rational.hpp"

#include <Eigen/Core>

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace fano {

template <class T>
using QuadricCoeffs = Eigen::Matrix<T, 6, 1>;
template <class T>
using Mat5 = Eigen::Matrix<T, 5, 5>;
template <class T>
using Point5 = Eigen::Matrix<T, 5, 1>;

template <class T>
struct SL2 {
  T a, b, c, d;

  static SL2 identity() { return {T(1), T(0), T(0), T(1)}; }
  static SL2 upper(const T& b) { return {T(1), b, T(0), T(1)}; }
  static SL2 lower(const T& c) { return {T(1), T(0), c, T(1)}; }
  friend SL2 operator*(const SL2& x, const SL2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

/// Index of the monomial x_i x_j (i <= j) among the 15 quadratic monomials.
int monomial_index(int i, int j);

/// Coefficients of the 15 monomials x_i x_j, i <= j, in monomial_index order.
template <class T>
struct QuadraticForm {
  std::array<T, 15> c{};

  T& at(int i, int j) { return c[static_cast<std::size_t>(monomial_index(i, j))]; }
  const T& at(int i, int j) const { return c[static_cast<std::size_t>(monomial_index(i, j))]; }

  /// Symmetric matrix G with q(x) = x^T G x.
  Mat5<T> gram() const {
    Mat5<T> g;
    const T half(Rational(1, 2));
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j) {
        g(i, j) = i == j ? at(i, i) : at(i, j) * half;
        g(j, i) = g(i, j);
      }
    return g;
  }
  static QuadraticForm from_gram(const Mat5<T>& g) {
    QuadraticForm q;
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j) q.at(i, j) = i == j ? g(i, i) : g(i, j) + g(j, i);
    return q;
  }
};

/// The generators f0..f5 of the ideal of C4 as polynomials in x0..x4.
const std::array<MPoly, 6>& basis_forms();
/// The cubic cutting out the secant variety of C4.
const MPoly& v3_cubic();
/// C4-invariant weights of f0..f5 under x_i -> lambda^i x_i.
const std::array<int, 6>& cstar_weights();

/// Exact 6x15 left inverse of the basis matrix.
const Mat<Rational>& basis_left_inverse();
/// 15x6 matrix whose column k holds the coefficients of f_k.
const Mat<Rational>& basis_matrix();

QuadraticForm<MPoly> form_from_polynomial(const MPoly& q);
MPoly form_to_polynomial(const QuadraticForm<Rational>& q);

/// Thrown by express_in_basis when the form does not vanish on C4. The
/// residual lists the coefficients of u^(8-k) v^k after restriction.
class NotThroughC4 : public std::domain_error {
 public:
  explicit NotThroughC4(std::vector<std::string> residual);
  std::vector<std::string> residual;
};

template <class T>
bool is_zero_value(const T& x) {
  using fano::is_zero;
  return is_zero(x);
}

template <class T>
QuadraticForm<T> expand(const QuadricCoeffs<T>& s) {
  const Mat<Rational>& f = basis_matrix();
  QuadraticForm<T> q;
  for (int m = 0; m < 15; ++m) {
    T acc(0);
    for (int k = 0; k < 6; ++k)
      if (!f(m, k).is_zero()) acc = acc + s(k) * T(f(m, k));
    q.c[static_cast<std::size_t>(m)] = acc;
  }
  return q;
}

template <class T>
QuadricCoeffs<T> express_in_basis(const QuadraticForm<T>& q) {
  std::vector<std::string> residual(9, "0");
  bool through = true;
  for (int k = 0; k <= 8; ++k) {
    T acc(0);
    for (int i = 0; i < 5; ++i) {
      const int j = k - i;
      if (j < i || j > 4) continue;
      acc = acc + q.at(i, j);
    }
    if (!is_zero_value(acc)) {
      through = false;
      std::ostringstream os;
      os << acc;
      residual[static_cast<std::size_t>(k)] = os.str();
    }
  }
  if (!through) throw NotThroughC4(std::move(residual));
  const Mat<Rational>& left = basis_left_inverse();
  QuadricCoeffs<T> s;
  for (int k = 0; k < 6; ++k) {
    T acc(0);
    for (int m = 0; m < 15; ++m)
      if (!left(k, m).is_zero()) acc = acc + q.c[static_cast<std::size_t>(m)] * T(left(k, m));
    s(k) = acc;
  }
  const QuadraticForm<T> back = expand(s);
  for (int m = 0; m < 15; ++m)
    if (!is_zero_value(back.c[static_cast<std::size_t>(m)] - q.c[static_cast<std::size_t>(m)]))
      throw std::logic_error("express_in_basis: round trip failed");
  return s;
}

template <class T>
Mat5<T> sym4(const SL2<T>& g) {
  if (!is_zero_value(g.a * g.d - g.b * g.c - T(1))) throw std::invalid_argument("SL2 element is not unimodular");
  const T &a = g.a, &b = g.b, &c = g.c, &d = g.d;
  const T a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d;
  const T a3 = a2 * a, b3 = b2 * b, c3 = c2 * c, d3 = d2 * d;
  Mat5<T> m;
  m << a2 * a2, T(4) * a3 * b, T(6) * a2 * b2, T(4) * a * b3, b2 * b2,
      a3 * c, a3 * d + T(3) * a2 * b * c, T(3) * a2 * b * d + T(3) * a * b2 * c, T(3) * a * b2 * d + b3 * c, b3 * d,
      a2 * c2, T(2) * a2 * c * d + T(2) * a * b * c2, a2 * d2 + T(4) * a * b * c * d + b2 * c2,
      T(2) * a * b * d2 + T(2) * b2 * c * d, b2 * d2,
      c3 * a, T(3) * a * c2 * d + b * c3, T(3) * a * c * d2 + T(3) * b * c2 * d, a * d3 + T(3) * b * c * d2, d3 * b,
      c2 * c2, T(4) * c3 * d, T(6) * c2 * d2, T(4) * c * d3, d2 * d2;
  return m;
}

/// Coefficients of q(Mx) in the f basis, for any invertible 5x5 M
/// preserving C4.
template <class T>
QuadricCoeffs<T> transform(const QuadricCoeffs<T>& s, const Mat5<T>& m) {
  const Mat5<T> g = expand(s).gram();
  // M^T G M with zero entries skipped; M is usually triangular or diagonal.
  Mat5<T> gm = Mat5<T>::Constant(T(0));
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) {
      if (is_zero_value(g(i, k))) continue;
      for (int j = 0; j < 5; ++j)
        if (!is_zero_value(m(k, j))) gm(i, j) = gm(i, j) + g(i, k) * m(k, j);
    }
  Mat5<T> h = Mat5<T>::Constant(T(0));
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j) {
      T acc(0);
      for (int k = 0; k < 5; ++k)
        if (!is_zero_value(m(k, i)) && !is_zero_value(gm(k, j))) acc = acc + m(k, i) * gm(k, j);
      h(i, j) = acc;
      h(j, i) = acc;
    }
  return express_in_basis(QuadraticForm<T>::from_gram(h));
}

/// phi^*(Q): substitute x -> sym4(g) x and re-express (right action).
template <class T>
QuadricCoeffs<T> pullback(const QuadricCoeffs<T>& s, const SL2<T>& g) {
  return transform(s, sym4(g));
}

enum class Involution { iota, tau };

template <class T>
QuadricCoeffs<T> involution_act(const QuadricCoeffs<T>& s, Involution which) {
  Mat5<T> m = Mat5<T>::Constant(T(0));
  for (int i = 0; i < 5; ++i) {
    if (which == Involution::iota) m(i, 4 - i) = T(1);
    else m(i, i) = T(i % 2 == 0 ? 1 : -1);
  }
  return transform(s, m);
}

/// x_i -> lambda^i x_i.
template <class T>
QuadricCoeffs<T> cstar_act(const QuadricCoeffs<T>& s, const T& lambda) {
  if (is_zero_value(lambda)) throw std::invalid_argument("C* scaling by zero");
  Mat5<T> m = Mat5<T>::Constant(T(0));
  T power(1);
  for (int i = 0; i < 5; ++i) {
    m(i, i) = power;
    power = power * lambda;
  }
  return transform(s, m);
}

/// Matrices R with pullback(s, upper(b)) = R(b) s, resp. lower(c); entries
/// are polynomials in Var::b, resp. Var::c.
const Eigen::Matrix<MPoly, 6, 6>& upper_action_matrix();
const Eigen::Matrix<MPoly, 6, 6>& lower_action_matrix();

template <class T>
T evaluate_in(const MPoly& p, Var v, const T& x) {
  const auto coeffs = univariate_coefficients(p, v);
  T acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + T(*it);
  return acc;
}

template <class T>
QuadricCoeffs<T> apply_action_matrix(const Eigen::Matrix<MPoly, 6, 6>& r, Var v, const QuadricCoeffs<T>& s,
                                     const T& x) {
  QuadricCoeffs<T> out;
  for (int i = 0; i < 6; ++i) {
    T acc(0);
    for (int j = 0; j < 6; ++j)
      if (!r(i, j).is_zero() && !is_zero_value(s(j))) acc = acc + evaluate_in(r(i, j), v, x) * s(j);
    out(i) = acc;
  }
  return out;
}

/// Fast pullback by an upper unipotent [[1,b],[0,1]].
template <class T>
QuadricCoeffs<T> pullback_upper(const QuadricCoeffs<T>& s, const T& b) {
  return apply_action_matrix(upper_action_matrix(), Var::b, s, b);
}
/// Fast pullback by a lower unipotent [[1,0],[c,1]].
template <class T>
QuadricCoeffs<T> pullback_lower(const QuadricCoeffs<T>& s, const T& c) {
  return apply_action_matrix(lower_action_matrix(), Var::c, s, c);
}

/// Determinant of the matrix of second partials of sum s_i f_i (twice the
/// Gram matrix).
template <class T>
T hessian_det(const QuadricCoeffs<T>& s) {
  const Mat5<T> h = expand(s).gram() * T(2);
  const Mat<T> dyn = h;
  if constexpr (std::is_same_v<T, AlgElem>) return expansion_det(dyn);
  else return bareiss_det(dyn);
}

/// The two factors of the displayed Hessian factorization; the Hessian equals
/// -2 * first * second.
template <class T>
std::pair<T, T> hessian_factors(const QuadricCoeffs<T>& s) {
  const T &s0 = s(0), &s1 = s(1), &s2 = s(2), &s3 = s(3), &s4 = s(4), &s5 = s(5);
  const T first = s0 * s4 - s1 * s3 + s2 * s2 + T(2) * s2 * s5 - T(3) * s5 * s5;
  const T second = T(4) * s0 * s2 * s4 - s0 * s3 * s3 - T(4) * s0 * s4 * s5 - s1 * s1 * s4 + T(4) * s1 * s3 * s5 -
                   T(16) * s2 * s5 * s5 + T(16) * s5 * s5 * s5;
  return {first, second};
}

/// The generic symbolic coefficient vector (s0, ..., s5).
QuadricCoeffs<MPoly> symbolic_coeffs();

template <class T>
QuadricCoeffs<T> to_coeffs(const QuadricCoeffs<Rational>& s) {
  QuadricCoeffs<T> out;
  for (int i = 0; i < 6; ++i) out(i) = T(s(i));
  return out;
}

/// Every 2x2 minor vanishes and neither vector is zero.
template <class T>
bool projectively_equal(const QuadricCoeffs<T>& a, const QuadricCoeffs<T>& b) {
  bool a_nonzero = false, b_nonzero = false;
  for (int i = 0; i < 6; ++i) {
    a_nonzero = a_nonzero || !is_zero_value(a(i));
    b_nonzero = b_nonzero || !is_zero_value(b(i));
    for (int j = i + 1; j < 6; ++j)
      if (!is_zero_value(a(i) * b(j) - a(j) * b(i))) return false;
  }
  return a_nonzero && b_nonzero;
}

/// Divides by the first nonzero coordinate.
QuadricCoeffs<Rational> normalize_projective(const QuadricCoeffs<Rational>& s);

/// [u^4 : u^3 v : u^2 v^2 : u v^3 : v^4].
Point5<Rational> c4_point(const Rational& u, const Rational& v);
/// f0..f4 all vanish at p.
bool is_on_c4(const Point5<Rational>& p);
bool v3_member(const Point5<Rational>& p);
Rational evaluate_form(const MPoly& form, const Point5<Rational>& p);

std::string coeffs_str(const QuadricCoeffs<Rational>& s);

}  // namespace fano
