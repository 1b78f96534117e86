#include "fano/linalg.hpp"

namespace fano {

Mat<Rational> exact_inverse(Mat<Rational> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Mat<Rational> inv = Mat<Rational>::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("matrix is singular");
    m.row(k).swap(m.row(pivot));
    inv.row(k).swap(inv.row(pivot));
    const Rational scale = m(k, k).inverse();
    m.row(k) *= scale;
    inv.row(k) *= scale;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_zero()) continue;
      const Rational f = m(i, k);
      m.row(i) -= f * m.row(k);
      inv.row(i) -= f * inv.row(k);
    }
  }
  return inv;
}

Mat<MPoly> sylvester_matrix(const MPoly& p, const MPoly& q, Var v) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  const auto pc = p.coefficients(v);
  const auto qc = q.coefficients(v);
  const std::size_t m = pc.size() - 1;
  const std::size_t n = qc.size() - 1;
  if (m == 0 || n == 0) throw std::invalid_argument("resultant needs positive degree in the variable");
  const std::size_t size = m + n;
  Mat<MPoly> s = Mat<MPoly>::Constant(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size), MPoly{});
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t k = 0; k <= m; ++k) s(row, row + k) = pc[m - k];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t k = 0; k <= n; ++k) s(n + row, row + k) = qc[n - k];
  return s;
}

MPoly resultant(const MPoly& p, const MPoly& q, Var v) { return bareiss_det(sylvester_matrix(p, q, v)); }

}  // namespace fano
