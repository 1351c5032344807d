#ifndef HNK_FOCK_HPP
#define HNK_FOCK_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnk/combinat.hpp"
#include "hnk/linalg.hpp"

namespace hnk {

/// Element of the exterior power of grade `grade` over C^n, in the
/// orthonormal basis e_H indexed by subsets_lex(n, grade).
template <class Scalar>
struct WedgeVector {
  int n = 0;
  int grade = 0;
  Vector<Scalar> coords;

  Scalar coord(const IndexSubset& h) const {
    return coords(static_cast<Eigen::Index>(subset_rank(h)));
  }
};

/// e_i in C^n (1-based i).
template <class Scalar>
Vector<Scalar> unit_vector(int n, int i) {
  if (i < 1 || i > n) throw std::domain_error("unit_vector: index out of range");
  Vector<Scalar> e = Vector<Scalar>::Zero(n);
  e(i - 1) = Scalar(1);
  return e;
}

/// x_1 ^ ... ^ x_p for the columns of `columns` (n x p), with `subsets` equal
/// to subsets_lex(n, p). The coordinate at H is det of the p x p submatrix on
/// rows H.
template <class Derived>
WedgeVector<typename Derived::Scalar> wedge(const Eigen::MatrixBase<Derived>& columns,
                                            const std::vector<IndexSubset>& subsets) {
  using Scalar = typename Derived::Scalar;
  const int n = static_cast<int>(columns.rows());
  const int p = static_cast<int>(columns.cols());
  if (p < 1 || p > n)
    throw std::domain_error("wedge: need 0 < p <= n, got p=" + std::to_string(p) +
                            " n=" + std::to_string(n));
  if (n > 63) throw std::domain_error("wedge: n above 63 not supported");
  if (subsets.size() != binomial(n, p)) throw std::domain_error("wedge: wrong subset list");

  // Row support of each column; a submatrix with an all-zero column has det 0.
  std::vector<std::uint64_t> support(p, 0);
  for (int j = 0; j < p; ++j)
    for (int r = 0; r < n; ++r)
      if (columns(r, j) != Scalar(0)) support[j] |= std::uint64_t{1} << r;

  WedgeVector<Scalar> out{n, p, Vector<Scalar>::Zero(static_cast<Eigen::Index>(subsets.size()))};
  std::vector<int> all_cols(p);
  for (int j = 0; j < p; ++j) all_cols[j] = j;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    std::uint64_t mask = 0;
    for (int e : subsets[s]) mask |= std::uint64_t{1} << (e - 1);
    bool degenerate = false;
    for (int j = 0; j < p && !degenerate; ++j) degenerate = (support[j] & mask) == 0;
    if (degenerate) continue;
    out.coords(static_cast<Eigen::Index>(s)) = det(columns(subsets[s].zero_based(), all_cols));
  }
  return out;
}

/// x_1 ^ ... ^ x_p for the columns of `columns`. Throws std::domain_error
/// unless 0 < p <= n.
template <class Derived>
WedgeVector<typename Derived::Scalar> wedge(const Eigen::MatrixBase<Derived>& columns) {
  const auto n = static_cast<int>(columns.rows());
  const auto p = static_cast<int>(columns.cols());
  if (p < 1 || p > n)
    throw std::domain_error("wedge: need 0 < p <= n, got p=" + std::to_string(p) +
                            " n=" + std::to_string(n));
  return wedge(columns, subsets_lex(n, p));
}

/// Coordinate inner product, linear in the first argument.
template <class Scalar>
Scalar wedge_inner(const WedgeVector<Scalar>& x, const WedgeVector<Scalar>& y) {
  if (x.n != y.n || x.grade != y.grade)
    throw std::domain_error("wedge_inner: grade or dimension mismatch");
  Scalar acc(0);
  for (Eigen::Index s = 0; s < x.coords.size(); ++s)
    acc += x.coords(s) * Eigen::numext::conj(y.coords(s));
  return acc;
}

/// Matrix of h ^ (.) from grade k-1 to grade k: C(n,k) rows, C(n,k-1) columns.
/// Column I holds the wedge coordinates of h ^ e_I.
template <class Scalar>
Matrix<Scalar> creation_matrix(int n, int k, const Vector<Scalar>& h) {
  if (k < 1 || k > n)
    throw std::domain_error("creation_matrix: need 1 <= k <= n, got k=" + std::to_string(k));
  if (h.size() != n) throw std::domain_error("creation_matrix: h has wrong length");
  const auto domain = subsets_lex(n, k - 1);
  const auto range = subsets_lex(n, k);
  Matrix<Scalar> out(static_cast<Eigen::Index>(range.size()),
                     static_cast<Eigen::Index>(domain.size()));
  Matrix<Scalar> factors = Matrix<Scalar>::Zero(n, k);
  factors.col(0) = h;
  for (std::size_t c = 0; c < domain.size(); ++c) {
    for (int j = 1; j < k; ++j) {
      factors.col(j).setZero();
      factors(domain[c][j - 1] - 1, j) = Scalar(1);
    }
    out.col(static_cast<Eigen::Index>(c)) = wedge(factors, range).coords;
  }
  return out;
}

/// Creation operator C_h from grade k-1 to grade k over C^n.
template <class Scalar>
struct CreationOp {
  int n = 0;
  int k = 0;
  Vector<Scalar> h;
  Matrix<Scalar> matrix;
};

template <class Scalar>
CreationOp<Scalar> creation_op(int n, int k, const Vector<Scalar>& h) {
  return {n, k, h, creation_matrix(n, k, h)};
}

/// C_h* (conjugate transpose).
template <class Scalar>
Matrix<Scalar> annihilation_matrix(const CreationOp<Scalar>& c) {
  return c.matrix.adjoint();
}

/// Offsets of the grade segments inside the full Fock space of C^n: grades
/// ascending, subsets lexicographic inside each grade.
class FockLayout {
 public:
  explicit FockLayout(int n);
  int n() const { return n_; }
  Eigen::Index dim() const { return offsets_.back(); }
  Eigen::Index offset(int grade) const { return offsets_.at(grade); }
  Eigen::Index size(int grade) const { return offsets_.at(grade + 1) - offsets_.at(grade); }

 private:
  int n_;
  std::vector<Eigen::Index> offsets_;
};

inline FockLayout::FockLayout(int n) : n_(n) {
  if (n < 0 || n > 20) throw std::domain_error("FockLayout: n out of range");
  offsets_.push_back(0);
  for (int r = 0; r <= n; ++r)
    offsets_.push_back(offsets_.back() + static_cast<Eigen::Index>(binomial(n, r)));
}

/// Creation by h on the full 2^n-dimensional Fock space: block k-1 -> k holds
/// creation_matrix(n, k, h); the top grade maps to zero.
template <class Scalar>
Matrix<Scalar> full_fock_creation(int n, const Vector<Scalar>& h) {
  const FockLayout layout(n);
  Matrix<Scalar> out = Matrix<Scalar>::Zero(layout.dim(), layout.dim());
  for (int k = 1; k <= n; ++k) {
    out.block(layout.offset(k), layout.offset(k - 1), layout.size(k), layout.size(k - 1)) =
        creation_matrix(n, k, h);
  }
  return out;
}

}  // namespace hnk

#endif  // HNK_FOCK_HPP
