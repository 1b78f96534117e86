#pragma once

#include "fano/linalg.hpp"
#include "fano/quadric.hpp"
#include "fano/mpoly.hpp"
#include "fano/rational.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace fano::testing {

inline Rational random_rational(std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int bound = 5) {
  Rational r;
  do r = random_rational(rng, bound);
  while (r.is_zero());
  return r;
}

inline MPoly random_mpoly(std::mt19937_64& rng, const std::vector<Var>& vars, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  MPoly p;
  for (int t = 0; t < terms; ++t) {
    MPoly m(random_rational(rng));
    for (Var v : vars) m *= var(v, static_cast<unsigned>(e(rng)));
    p += m;
  }
  return p;
}

inline SL2<Rational> random_sl2(std::mt19937_64& rng) {
  const Rational a = random_nonzero_rational(rng, 3);
  const Rational b = random_rational(rng, 3);
  const Rational c = random_rational(rng, 3);
  return {a, b, c, (Rational(1) + b * c) / a};
}

inline QuadricCoeffs<Rational> random_coeffs(std::mt19937_64& rng) {
  QuadricCoeffs<Rational> s;
  bool nonzero = false;
  while (!nonzero)
    for (int i = 0; i < 6; ++i) {
      s(i) = random_rational(rng, 4);
      nonzero = nonzero || !s(i).is_zero();
    }
  return s;
}

/// Determinant by the permutation expansion; independent of the library's
/// elimination code.
template <class T>
T leibniz_det(const Mat<T>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  T total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    T term(1);
    for (int i = 0; i < n; ++i) term = term * m(i, perm[static_cast<std::size_t>(i)]);
    total = (inversions % 2 == 0) ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Simpson's rule with one panel; exact for polynomials of degree at most 3.
template <class F>
Rational simpson_exact_cubic(F&& f, const Rational& a, const Rational& b) {
  const Rational mid = (a + b) / Rational(2);
  return (b - a) / Rational(6) * (f(a) + Rational(4) * f(mid) + f(b));
}

/// Composite Simpson rule with `panels` subintervals (rounded up to even).
template <class F>
double simpson(F&& f, double a, double b, int panels = 10000) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

/// Iterated Simpson over {a <= u <= b, lo(u) <= v <= hi(u)}; 100 x 100 panels.
template <class F, class L, class H>
double simpson2(F&& f, double a, double b, L&& lo, H&& hi, int panels = 100) {
  return simpson([&](double u) { return simpson([&](double v) { return f(u, v); }, lo(u), hi(u), panels); },
                 a, b, panels);
}

}  // namespace fano::testing
