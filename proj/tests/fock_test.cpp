#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hnk/fock.hpp"

using hnk::Complex;
using hnk::ComplexMatrix;
using hnk::ComplexVector;
using hnk::ExactMatrix;
using hnk::GaussRational;
using hnk::IndexSubset;

namespace {

Complex leibniz(const ComplexMatrix& x) {
  const int n = static_cast<int>(x.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex acc = 0;
  do {
    Complex term = 1;
    for (int r = 0; r < n; ++r) term *= x(r, perm[r]);
    acc += static_cast<double>(hnk::perm_sign(perm)) * term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// <x, y>, linear in x.
Complex ip(const ComplexVector& x, const ComplexVector& y) { return y.dot(x); }

ComplexVector coords(const ComplexMatrix& cols) {
  if (cols.cols() == 0) return ComplexVector::Ones(1);
  return hnk::wedge(cols).coords;
}

ComplexMatrix with_front(const ComplexVector& h, const ComplexMatrix& rest) {
  ComplexMatrix out(h.size(), rest.cols() + 1);
  out.col(0) = h;
  out.rightCols(rest.cols()) = rest;
  return out;
}

ComplexMatrix without_col(const ComplexMatrix& m, int j) {
  ComplexMatrix out(m.rows(), m.cols() - 1);
  for (int c = 0, pos = 0; c < m.cols(); ++c)
    if (c != j) out.col(pos++) = m.col(c);
  return out;
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Wedge, Examples) {
  const auto e1 = hnk::unit_vector<Complex>(2, 1), e2 = hnk::unit_vector<Complex>(2, 2);
  ComplexMatrix x(2, 2);
  x << e1, e2;
  EXPECT_EQ(hnk::wedge(x).coords(0), Complex(1));
  x << e2, e1;
  EXPECT_EQ(hnk::wedge(x).coords(0), Complex(-1));

  ComplexMatrix y(3, 2), z(3, 2);
  y << hnk::unit_vector<Complex>(3, 1) + hnk::unit_vector<Complex>(3, 2),
      hnk::unit_vector<Complex>(3, 2);
  z << hnk::unit_vector<Complex>(3, 1), hnk::unit_vector<Complex>(3, 2);
  EXPECT_EQ(hnk::wedge(y).coords, hnk::wedge(z).coords);
}

TEST(Wedge, RejectsBadGrade) {
  EXPECT_THROW(hnk::wedge(ComplexMatrix(2, 3)), std::domain_error);
  EXPECT_THROW(hnk::wedge(ComplexMatrix(2, 0)), std::domain_error);
}

TEST(Wedge, CoordinatesAreMaximalMinors) {
  hnk::Rng rng = hnk::split_rng(1, 0);
  const ComplexMatrix x = hnk::random_gaussian(5, 3, rng);
  const auto w = hnk::wedge(x);
  ASSERT_EQ(w.coords.size(), 10);
  for (const IndexSubset& h : hnk::subsets_lex(5, 3)) {
    ComplexMatrix sub(3, 3);
    for (int r = 0; r < 3; ++r) sub.row(r) = x.row(h[r] - 1);
    EXPECT_LT(std::abs(w.coord(h) - leibniz(sub)), 1e-12);
  }
}

TEST(Wedge, MultilinearInEachSlot) {
  hnk::Rng rng = hnk::split_rng(2, 0);
  const ComplexMatrix x = hnk::random_gaussian(4, 3, rng);
  const ComplexVector g = hnk::random_gaussian_vector(4, rng);
  const Complex a(0.3, -1.2), b(2.0, 0.5);
  for (int slot = 0; slot < 3; ++slot) {
    ComplexMatrix mix = x, only_g = x;
    mix.col(slot) = a * x.col(slot) + b * g;
    only_g.col(slot) = g;
    const ComplexVector expected = a * hnk::wedge(x).coords + b * hnk::wedge(only_g).coords;
    EXPECT_LT(max_abs(hnk::wedge(mix).coords - expected), 1e-12);
  }
}

TEST(Wedge, RepeatedVectorGivesZeroExactly) {
  hnk::Rng rng = hnk::split_rng(3, 0);
  for (int n = 2; n <= 6; ++n)
    for (int p = 2; p <= n; ++p) {
      ExactMatrix x = hnk::random_exact(n, p, rng);
      x.col(p - 1) = x.col(0);
      const auto w = hnk::wedge(x);
      for (Eigen::Index s = 0; s < w.coords.size(); ++s) ASSERT_TRUE(w.coords(s).is_zero());
    }
}

TEST(WedgeInner, Examples) {
  const int n = 3;
  auto e = [](int i) { return hnk::unit_vector<Complex>(3, i); };
  ComplexMatrix a(n, 2), b(n, 2);
  a << e(1), e(2);
  b << e(1), e(3);
  EXPECT_EQ(hnk::wedge_inner(hnk::wedge(a), hnk::wedge(a)), Complex(1));
  EXPECT_EQ(hnk::wedge_inner(hnk::wedge(a), hnk::wedge(b)), Complex(0));
  EXPECT_THROW(hnk::wedge_inner(hnk::wedge(a), hnk::wedge(ComplexMatrix(e(1)))), std::domain_error);
}

TEST(WedgeInner, GramDeterminant) {
  hnk::Rng rng = hnk::split_rng(4, 0);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix x = hnk::random_gaussian(4, 2, rng);
    const ComplexMatrix y = hnk::random_gaussian(4, 2, rng);
    ComplexMatrix gram(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) gram(i, j) = ip(x.col(i), y.col(j));
    EXPECT_LT(std::abs(hnk::wedge_inner(hnk::wedge(x), hnk::wedge(y)) - leibniz(gram)), 1e-12);
  }
}

TEST(CreationMatrix, Examples) {
  EXPECT_EQ(hnk::creation_matrix(1, 1, hnk::unit_vector<Complex>(1, 1)),
            ComplexMatrix::Ones(1, 1));
  // n=2, k=2, h=e_1: columns indexed by {1}, {2}; one row {1,2}.
  const ExactMatrix c = hnk::creation_matrix(2, 2, hnk::unit_vector<GaussRational>(2, 1));
  EXPECT_EQ(c, hnk::exact_from_ints({{0, 1}}));
  EXPECT_THROW(hnk::creation_matrix(2, 3, hnk::unit_vector<Complex>(2, 1)), std::domain_error);
  EXPECT_THROW(hnk::creation_matrix(3, 1, hnk::unit_vector<Complex>(2, 1)), std::domain_error);
}

TEST(CreationMatrix, ShapeAndLinearity) {
  hnk::Rng rng = hnk::split_rng(5, 0);
  const ComplexVector g = hnk::random_gaussian_vector(5, rng);
  const ComplexVector h = hnk::random_gaussian_vector(5, rng);
  const Complex a(1.5, -0.5), b(-0.25, 2.0);
  for (int k = 1; k <= 5; ++k) {
    const ComplexMatrix c = hnk::creation_matrix(5, k, ComplexVector(a * g + b * h));
    EXPECT_EQ(c.rows(), static_cast<Eigen::Index>(hnk::binomial(5, k)));
    EXPECT_EQ(c.cols(), static_cast<Eigen::Index>(hnk::binomial(5, k - 1)));
    EXPECT_LT(max_abs(c - a * hnk::creation_matrix(5, k, g) - b * hnk::creation_matrix(5, k, h)),
              1e-12);
  }
}

// C_{e_i} sends e_I to eps(i, I) e_{I + i}: the sign of sorting i into I.
TEST(CreationMatrix, UnitSignFormula) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= n; ++i) {
        const ExactMatrix c = hnk::creation_matrix(n, k, hnk::unit_vector<GaussRational>(n, i));
        const auto domain = hnk::subsets_lex(n, k - 1);
        ExactMatrix expected = ExactMatrix::Zero(c.rows(), c.cols());
        for (std::size_t col = 0; col < domain.size(); ++col) {
          const IndexSubset& I = domain[col];
          if (I.contains(i)) continue;
          std::vector<int> merged(I.begin(), I.end());
          merged.insert(std::upper_bound(merged.begin(), merged.end(), i), i);
          const auto row = hnk::subset_rank(IndexSubset(n, merged));
          expected(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
              GaussRational(hnk::eps_iI(i, I));
        }
        ASSERT_EQ(c, expected) << n << " " << k << " " << i;
      }
}

TEST(CreationMatrix, NormEqualsVectorNorm) {
  hnk::Rng rng = hnk::split_rng(6, 0);
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      const ComplexVector h = hnk::random_gaussian_vector(n, rng);
      EXPECT_NEAR(hnk::operator_norm(hnk::creation_matrix(n, k, h)), h.norm(), 1e-9)
          << n << " " << k;
    }
}

TEST(Annihilation, LevelOne) {
  hnk::Rng rng = hnk::split_rng(7, 0);
  const ComplexVector h = hnk::random_gaussian_vector(4, rng);
  const auto op = hnk::creation_op(4, 1, h);
  const ComplexMatrix cstar = hnk::annihilation_matrix(op);
  EXPECT_EQ(cstar, ComplexMatrix(op.matrix.adjoint()));
  EXPECT_NEAR(std::abs((cstar * op.matrix)(0, 0) - h.squaredNorm()), 0.0, 1e-12);
  EXPECT_LT(max_abs(op.matrix * cstar - h * h.adjoint()), 1e-12);
}

// C*C (h_1 ^ ... ^ h_{k-1}) = <h,h> h_1 ^ ... - <h_1,h> h ^ h_2 ^ ... + ...
TEST(Annihilation, ExpansionOfCStarC) {
  hnk::Rng rng = hnk::split_rng(8, 0);
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const ComplexVector h = hnk::random_gaussian_vector(n, rng);
      const ComplexMatrix hs = hnk::random_gaussian(n, k - 1, rng);
      const ComplexMatrix c = hnk::creation_matrix(n, k, h);
      const ComplexVector lhs = c.adjoint() * (c * coords(hs));
      ComplexVector rhs = ip(h, h) * coords(hs);
      for (int j = 0; j < k - 1; ++j) {
        const double sign = j % 2 == 0 ? -1.0 : 1.0;
        rhs += sign * ip(hs.col(j), h) * coords(with_front(h, without_col(hs, j)));
      }
      EXPECT_LT(max_abs(lhs - rhs), 1e-10) << n << " " << k;
    }
}

TEST(Annihilation, CStarCOnBasisVector) {
  // n=4, k=2, I={3}: C*C e_3 = <h,h> e_3 - <e_3,h> h.
  hnk::Rng rng = hnk::split_rng(9, 0);
  const ComplexVector h = hnk::random_gaussian_vector(4, rng);
  const ComplexMatrix c = hnk::creation_matrix(4, 2, h);
  const ComplexVector e3 = hnk::unit_vector<Complex>(4, 3);
  const ComplexVector expected = h.squaredNorm() * e3 - std::conj(h(2)) * h;
  EXPECT_LT(max_abs(c.adjoint() * c * e3 - expected), 1e-12);
}

// C C* (h_1 ^ ... ^ h_k) = sum_j <h_j,h> h_1 ^ ... ^ h ^ ... ^ h_k, h in slot j.
TEST(Annihilation, ExpansionOfCCStar) {
  hnk::Rng rng = hnk::split_rng(10, 0);
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const ComplexVector h = hnk::random_gaussian_vector(n, rng);
      const ComplexMatrix hs = hnk::random_gaussian(n, k, rng);
      const ComplexMatrix c = hnk::creation_matrix(n, k, h);
      const ComplexVector lhs = c * (c.adjoint() * coords(hs));
      ComplexVector rhs = ComplexVector::Zero(lhs.size());
      for (int j = 0; j < k; ++j) {
        ComplexMatrix swapped = hs;
        swapped.col(j) = h;
        rhs += ip(hs.col(j), h) * coords(swapped);
      }
      EXPECT_LT(max_abs(lhs - rhs), 1e-10) << n << " " << k;
    }
}

TEST(FockLayout, OffsetsAndSizes) {
  const hnk::FockLayout layout(4);
  EXPECT_EQ(layout.dim(), 16);
  EXPECT_EQ(layout.offset(0), 0);
  EXPECT_EQ(layout.offset(2), 5);
  EXPECT_EQ(layout.size(2), 6);
  EXPECT_THROW(hnk::FockLayout(21), std::domain_error);
}

TEST(FullFock, SmallestCase) {
  const Eigen::MatrixXd c = hnk::full_fock_creation(1, hnk::unit_vector<double>(1, 1));
  Eigen::MatrixXd expected(2, 2);
  expected << 0, 0, 1, 0;
  EXPECT_EQ(c, expected);
}

TEST(FullFock, CanonicalAnticommutationRelations) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Eigen::MatrixXd> c;
    for (int i = 1; i <= n; ++i) c.push_back(hnk::full_fock_creation(n, hnk::unit_vector<double>(n, i)));
    const Eigen::Index dim = Eigen::Index{1} << n;
    ASSERT_EQ(c[0].rows(), dim);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Eigen::MatrixXd cj_star = c[j].transpose();
        const Eigen::MatrixXd mixed = c[i] * cj_star + cj_star * c[i];
        EXPECT_LT((mixed - (i == j ? id : Eigen::MatrixXd::Zero(dim, dim))).cwiseAbs().maxCoeff(),
                  1e-12);
        EXPECT_LT((c[i] * c[j] + c[j] * c[i]).cwiseAbs().maxCoeff(), 1e-12);
      }
  }
}

TEST(FullFock, RandomVectorsAnticommute) {
  // {C_g*, C_h} = <h, g> I on the full Fock space.
  hnk::Rng rng = hnk::split_rng(11, 0);
  const int n = 4;
  const ComplexVector g = hnk::random_gaussian_vector(n, rng);
  const ComplexVector h = hnk::random_gaussian_vector(n, rng);
  const ComplexMatrix cg = hnk::full_fock_creation(n, g);
  const ComplexMatrix ch = hnk::full_fock_creation(n, h);
  const ComplexMatrix anti = cg.adjoint() * ch + ch * cg.adjoint();
  EXPECT_LT(max_abs(anti - ip(h, g) * ComplexMatrix::Identity(16, 16)), 1e-12);
}
