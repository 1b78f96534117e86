#pragma once

// Intersection theory on X = Bl_C Q, the blow-up of a smooth quadric threefold
// Q in P^4 along a rational normal quartic C. Divisors are written in the
// basis (H, E), curves by their pairings (H.gamma, E.gamma), and classes on the
// exceptional surface E = F_n in the basis (s, f) with s^2 = -n.

#include "fano/mpoly.hpp"
#include "fano/rational.hpp"

#include <Eigen/Core>

#include <array>
#include <string>

namespace fano {

template <class T>
using DivClass = Eigen::Matrix<T, 2, 1>;
/// Curve class stored as (H.gamma, E.gamma).
using CurveClass = Eigen::Matrix<Rational, 2, 1>;
template <class T>
using FnClass = Eigen::Matrix<T, 2, 1>;

template <class T>
DivClass<T> div_class(const T& h, const T& e) {
  DivClass<T> d;
  d << h, e;
  return d;
}

/// Numerical data of the blow-up centre.
struct BlowupData {
  int quadric_degree = 2;
  int curve_degree = 4;
  int curve_genus = 0;
  int anticanonical_index = 3;  // -K_Q = 3H
};

/// deg N_{C/Q} = 2g - 2 + (-K_Q).C.
int deg_normal_bundle(const BlowupData& data = {});

/// table[i][j][k] = D_i D_j D_k with D_0 = H, D_1 = E. Only the number of E
/// factors matters, so the table is symmetric.
using IntersectionTable = std::array<Rational, 4>;  // indexed by #E factors

/// H^3 = deg Q, H^2 E = 0, H E^2 = -deg C, E^3 = -deg N.
IntersectionTable intersection_table(const BlowupData& data = {});

template <class T>
T triple(const DivClass<T>& a, const DivClass<T>& b, const DivClass<T>& c,
         const IntersectionTable& table = intersection_table()) {
  T acc(0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const Rational& t = table[static_cast<std::size_t>(i + j + k)];
        if (t.is_zero()) continue;
        acc += a(i) * b(j) * c(k) * t;
      }
  return acc;
}

template <class T>
T curve_pair(const DivClass<T>& d, const CurveClass& gamma) {
  return d(0) * gamma(0) + d(1) * gamma(1);
}

/// Named divisors.
DivClass<Rational> class_H();
DivClass<Rational> class_E();
DivClass<Rational> class_H_prime();  // 2H - E
DivClass<Rational> class_E_prime();  // 3H - 2E
DivClass<Rational> anticanonical();  // 3H - E

/// Fibre of E -> C.
CurveClass curve_f();
/// Fibre of E' -> C', solved from H'.f' = 0 and E'.f' = -1.
CurveClass curve_f_prime();

/// Intersection form on F_n: s^2 = -n, s.f = 1, f^2 = 0.
template <class T>
T fn_dot(const FnClass<T>& x, const FnClass<T>& y, const T& n) {
  return -n * x(0) * y(0) + x(0) * y(1) + x(1) * y(0);
}

/// Throws std::invalid_argument unless n is 0, 2, 4 or 6.
void check_hirzebruch_index(int n);

/// H|_E = (deg C) f, E|_E = -s - ((n - deg N)/2) f.
template <class T>
FnClass<T> restrict_to_E(const DivClass<T>& d, const T& n, const BlowupData& data = {}) {
  const Rational c(data.curve_degree);
  const T shift = (n - T(deg_normal_bundle(data))) * Rational(1, 2);
  FnClass<T> r;
  r << -d(1), d(0) * c - d(1) * shift;
  return r;
}

template <class T>
FnClass<T> restrict_to_E(const DivClass<T>& d, int n) {
  check_hirzebruch_index(n);
  return restrict_to_E(d, T(n));
}

std::string format_div(const DivClass<Rational>& d);

}  // namespace fano
