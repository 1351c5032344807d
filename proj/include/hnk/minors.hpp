#ifndef HNK_MINORS_HPP
#define HNK_MINORS_HPP

#include <vector>

#include "hnk/combinat.hpp"
#include "hnk/linalg.hpp"

namespace hnk {

/// Every square minor det X_{R,H} of a square matrix, indexed by subset rank.
template <class Scalar>
class MinorTable {
 public:
  explicit MinorTable(const Matrix<Scalar>& x) : n_(static_cast<int>(x.rows())) {
    if (x.rows() != x.cols()) throw std::domain_error("MinorTable: matrix is not square");
    for (int r = 0; r <= n_; ++r) {
      const auto subsets = subsets_lex(n_, r);
      const auto count = static_cast<Eigen::Index>(subsets.size());
      Matrix<Scalar> table(count, count);
      for (Eigen::Index a = 0; a < count; ++a)
        for (Eigen::Index b = 0; b < count; ++b)
          table(a, b) = submatrix_det(x, subsets[a], subsets[b]);
      tables_.push_back(std::move(table));
    }
  }

  int n() const { return n_; }

  const Scalar& operator()(const IndexSubset& rows, const IndexSubset& cols) const {
    return tables_.at(rows.size())(static_cast<Eigen::Index>(subset_rank(rows)),
                                   static_cast<Eigen::Index>(subset_rank(cols)));
  }

 private:
  int n_;
  std::vector<Matrix<Scalar>> tables_;
};

/// sum over |R| = |H| of eps(R, R') det X_{R,H} det X_{R',K}, with R' the
/// complement of R. Equals eps(H, H') det X when K = H', and vanishes when
/// |K| = n - |H| and K meets H.
template <class Scalar>
Scalar laplace_sum(const MinorTable<Scalar>& minors, const IndexSubset& H,
                   const IndexSubset& K) {
  const int n = minors.n();
  if (H.size() + K.size() != n) throw std::domain_error("laplace_sum: |H| + |K| != n");
  Scalar acc(0);
  for (const IndexSubset& R : subsets_lex(n, H.size())) {
    const IndexSubset Rc = R.complement();
    const Scalar term = minors(R, H) * minors(Rc, K);
    if (concat_sign(R, Rc) > 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace hnk

#endif  // HNK_MINORS_HPP
