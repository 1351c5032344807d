#ifndef HNK_LINALG_HPP
#define HNK_LINALG_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hnk/combinat.hpp"
#include "hnk/exact.hpp"

namespace hnk {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

// Fraction-free elimination with row pivoting on nonzero entries. Every
// division is exact in the ring generated by the input entries.
template <class Scalar>
Scalar bareiss_det(Matrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  int sign = 1;
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index r = k + 1;
      while (r < n && m(r, k) == Scalar(0)) ++r;
      if (r == n) return Scalar(0);
      m.row(k).swap(m.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

}  // namespace detail

/// Determinant of a square matrix. Exact scalars use Bareiss elimination;
/// floating scalars use LU with partial pivoting. The 0x0 determinant is 1.
template <class Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (x.rows() != x.cols())
    throw std::domain_error("det: matrix is " + std::to_string(x.rows()) + "x" +
                            std::to_string(x.cols()) + ", not square");
  if constexpr (is_exact_scalar_v<Scalar>) {
    return detail::bareiss_det<Scalar>(x.eval());
  } else {
    if (x.rows() == 0) return Scalar(1);
    return Matrix<Scalar>(x).partialPivLu().determinant();
  }
}

/// det of the submatrix keeping rows `rows` and columns `cols` (1-based, in
/// increasing order).
template <class Derived>
typename Derived::Scalar submatrix_det(const Eigen::MatrixBase<Derived>& x,
                                       const IndexSubset& rows, const IndexSubset& cols) {
  if (rows.size() != cols.size())
    throw std::domain_error("submatrix_det: |H| != |K|");
  if (rows.n() > x.rows() || cols.n() > x.cols())
    throw std::domain_error("submatrix_det: subset exceeds matrix shape");
  const auto r = rows.zero_based();
  const auto c = cols.zero_based();
  return det(x(r, c));
}

/// Real eigenvalues of a Hermitian matrix, in descending order.
///
/// Cyclic two-sided Jacobi: sweeps until the off-diagonal Frobenius norm is at
/// most 1e-13 times the Frobenius norm of the input, or 60 sweeps.
/// Throws std::domain_error if M differs from M* by more than
/// 1e-12 * max(1, max|M_ij|).
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

/// Maximum absolute entry; 0 for empty matrices.
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Hilbert-Schmidt inner product <a, b> = tr(b* a).
template <class DerivedA, class DerivedB>
typename DerivedA::Scalar hs_inner(const Eigen::MatrixBase<DerivedA>& a,
                                   const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Scalar acc(0);
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) acc += a(i, j) * Eigen::numext::conj(b(i, j));
  return acc;
}

template <class Derived>
ComplexMatrix to_complex(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if constexpr (std::is_same_v<Scalar, GaussRational>) {
    return m.unaryExpr([](const GaussRational& s) { return s.to_complex(); });
  } else {
    return m.template cast<Complex>();
  }
}

/// Block direct sum diag(blocks[0], blocks[1], ...).
template <class Scalar>
Matrix<Scalar> direct_sum(const std::vector<Matrix<Scalar>>& blocks) {
  Eigen::Index rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix<Scalar> out = Matrix<Scalar>::Zero(rows, cols);
  Eigen::Index r = 0, c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

// Seeded randomness ---------------------------------------------------------

using Rng = std::mt19937_64;

/// Independent generator for stream `stream` of a run seeded with `seed`.
Rng split_rng(std::uint64_t seed, std::uint64_t stream);

/// Entries i.i.d. standard complex Gaussian (real and imaginary parts N(0, 1/2)).
ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);
ComplexVector random_gaussian_vector(Eigen::Index n, Rng& rng);

/// Haar-like unitary: QR of a complex Gaussian matrix with R's diagonal phases
/// absorbed into Q.
ComplexMatrix random_unitary(Eigen::Index n, Rng& rng);

/// Random Hermitian matrix (G + G*)/2.
ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng);

/// Exact Gaussian-rational matrix with numerators in [-bound, bound] and
/// denominators in [1, max_den].
ExactMatrix random_exact(Eigen::Index rows, Eigen::Index cols, Rng& rng, int bound = 5,
                         int max_den = 3);

}  // namespace hnk

#endif  // HNK_LINALG_HPP
