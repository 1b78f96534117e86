#pragma once

#include "fano/algebraic.hpp"
#include "fano/mpoly.hpp"
#include "fano/rational.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <utility>
#include <vector>

namespace fano {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline MPoly exact_div(const MPoly& a, const MPoly& b) { return exact_divide(a, b); }
inline AlgElem exact_div(const AlgElem& a, const AlgElem& b) { return a / b; }

/// Fraction-free Gaussian elimination. Every intermediate division is exact.
template <class T>
T bareiss_det(Mat<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return T(1);
  T sign(1);
  T prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      Eigen::Index swap = k + 1;
      while (swap < n && is_zero(m(swap, k))) ++swap;
      if (swap == n) return T(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Division-free determinant by expansion along rows with memoized column
/// subsets; O(n 2^n) ring operations. Used where pivots may be zero divisors.
template <class T>
T expansion_det(const Mat<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = static_cast<int>(m.rows());
  if (n > 20) throw std::invalid_argument("expansion_det: matrix too large");
  // minors[mask] = det of the rows n-popcount(mask).. with columns in mask.
  std::vector<T> minors(std::size_t{1} << n, T(0));
  minors[0] = T(1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int row = n - __builtin_popcount(mask);
    T acc(0);
    int position = 0;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      const T term = m(row, col) * minors[mask & ~(1u << col)];
      acc = (position % 2 == 0) ? acc + term : acc - term;
      ++position;
    }
    minors[mask] = acc;
  }
  return minors[(1u << n) - 1];
}

/// Exact inverse by Gauss-Jordan; throws on a singular matrix.
Mat<Rational> exact_inverse(Mat<Rational> m);

/// Sylvester matrix of p and q viewed as polynomials in v.
Mat<MPoly> sylvester_matrix(const MPoly& p, const MPoly& q, Var v);
/// Determinant of the Sylvester matrix; rejects zero or v-free inputs.
MPoly resultant(const MPoly& p, const MPoly& q, Var v);

}  // namespace fano
