#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hnk/cbnorm.hpp"

using hnk::ComplexMatrix;
using hnk::ComplexVector;
using hnk::OperatorTuple;
using hnk::Target;

namespace {

std::vector<ComplexVector> gaussian_tuple(int n, int m, hnk::Rng& rng) {
  std::vector<ComplexVector> hs;
  for (int i = 0; i < m; ++i) hs.push_back(hnk::random_gaussian_vector(n, rng));
  return hs;
}

// Brute-force k-subset sums by bitmask.
std::vector<double> subset_sums(const std::vector<double>& base, int k) {
  const int n = static_cast<int>(base.size());
  std::vector<double> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    double s = 0;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1u) s += base[j];
    out.push_back(s);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<double> eigs(const ComplexMatrix& m) {
  const Eigen::VectorXd e = hnk::hermitian_eigenvalues(m);
  return {e.begin(), e.end()};
}

}  // namespace

TEST(OperatorTuple, SingleVectorNormsAreEuclidean) {
  hnk::Rng rng = hnk::split_rng(41, 0);
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      const ComplexVector h = hnk::random_gaussian_vector(n, rng);
      const OperatorTuple t(n, k, {h});
      EXPECT_NEAR(hnk::row_norm(t), h.norm(), 1e-10);
      EXPECT_NEAR(hnk::col_norm(t), h.norm(), 1e-10);
    }
  EXPECT_THROW(OperatorTuple(3, 1, {}), std::domain_error);
}

TEST(OperatorTuple, CanonicalGrams) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const OperatorTuple t = OperatorTuple::canonical(n, k);
      const ComplexMatrix rg = t.row_gram();
      const ComplexMatrix cg = t.col_gram();
      EXPECT_LT((rg - double(k) * ComplexMatrix::Identity(rg.rows(), rg.cols())).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT((cg - double(n - k + 1) * ComplexMatrix::Identity(cg.rows(), cg.cols())).cwiseAbs().maxCoeff(),
                1e-12);
      EXPECT_NEAR(hnk::row_norm(t), std::sqrt(double(k)), 1e-10);
      EXPECT_NEAR(hnk::col_norm(t), std::sqrt(double(n - k + 1)), 1e-10);
    }
}

TEST(OperatorTuple, BlockNormsMatchGramTopEigenvalue) {
  hnk::Rng rng = hnk::split_rng(41, 1);
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      const OperatorTuple t(n, k, gaussian_tuple(n, 3, rng));
      const auto re = eigs(t.row_gram());
      const auto ce = eigs(t.col_gram());
      EXPECT_NEAR(hnk::row_norm(t) * hnk::row_norm(t), re.front(), 1e-10 * (1 + re.front()));
      EXPECT_NEAR(hnk::col_norm(t) * hnk::col_norm(t), ce.front(), 1e-10 * (1 + ce.front()));
    }
}

TEST(SpectrumKSums, Examples) {
  EXPECT_EQ(hnk::spectrum_k_sums({1, 0, 0}, 2), (std::vector<double>{1, 1, 0}));
  EXPECT_EQ(hnk::spectrum_k_sums({1, 1, 1, 1}, 3), (std::vector<double>(4, 3.0)));
  EXPECT_EQ(hnk::spectrum_k_sums({3, 2, 0.5}, 3), (std::vector<double>{5.5}));
  EXPECT_THROW(hnk::spectrum_k_sums({1, 2}, 3), std::domain_error);
}

TEST(SpectrumKSums, MatchesBitmaskEnumeration) {
  hnk::Rng rng = hnk::split_rng(41, 2);
  std::normal_distribution<double> gauss;
  for (int n = 1; n <= 8; ++n) {
    std::vector<double> base(n);
    for (double& x : base) x = gauss(rng);
    std::sort(base.rbegin(), base.rend());
    for (int k = 0; k <= n; ++k) {
      const auto got = hnk::spectrum_k_sums(base, k);
      const auto want = subset_sums(base, k);
      ASSERT_EQ(got.size(), want.size());
      for (std::size_t j = 0; j < got.size(); ++j) EXPECT_NEAR(got[j], want[j], 1e-12);
    }
  }
}

TEST(SpectrumKSums, LevelSpectrumIsKSumsOfBaseSpectrum) {
  hnk::Rng rng = hnk::split_rng(41, 3);
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= n; ++m)
      for (int k = 1; k <= n; ++k)
        for (int t = 0; t < 4; ++t) {
          const auto hs = gaussian_tuple(n, m, rng);
          const auto base = eigs(OperatorTuple(n, 1, hs).row_gram());
          const auto level = eigs(OperatorTuple(n, k, hs).row_gram());
          const auto sums = hnk::spectrum_k_sums(base, k);
          ASSERT_EQ(level.size(), sums.size());
          for (std::size_t j = 0; j < sums.size(); ++j)
            ASSERT_NEAR(level[j], sums[j], 1e-8) << n << " " << m << " " << k;
        }
}

TEST(TraceIdentity, Examples) {
  const auto e1 = hnk::trace_identity(4, 2, hnk::unit_vector<hnk::Complex>(4, 1));
  EXPECT_NEAR(e1.computed, 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(e1.predicted, 3.0);
  const auto zero = hnk::trace_identity(5, 3, ComplexVector::Zero(5));
  EXPECT_EQ(zero.computed, 0.0);
  EXPECT_EQ(zero.predicted, 0.0);
}

TEST(TraceIdentity, RandomVectors) {
  hnk::Rng rng = hnk::split_rng(41, 4);
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k)
      for (int t = 0; t < 5; ++t) {
        const ComplexVector h = 3.0 * hnk::random_gaussian_vector(n, rng);
        const auto r = hnk::trace_identity(n, k, h);
        EXPECT_NEAR(r.predicted, hnk::binomial(n - 1, k - 1) * h.squaredNorm(), 1e-9);
        EXPECT_LE(std::abs(r.computed - r.predicted), 1e-10 * (1 + h.squaredNorm()));
        if (k == 1) EXPECT_NEAR(r.computed, h.squaredNorm(), 1e-10 * (1 + h.squaredNorm()));
      }
}

TEST(CbNorm, ForwardCertificates) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto r = hnk::cb_norm_forward(n, k, 20, 5);
      EXPECT_DOUBLE_EQ(r.closed_form, std::sqrt(double(k)));
      EXPECT_NEAR(r.certified, r.closed_form, 1e-10);
      EXPECT_EQ(static_cast<int>(r.certificate.size()), n);
      EXPECT_TRUE(r.bound_holds);
      EXPECT_LE(r.sampled_max, r.closed_form + 1e-9);
    }
  EXPECT_NEAR(hnk::cb_norm_forward(4, 2).certified, std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(hnk::cb_norm_forward(7, 1, 0).certified, 1.0, 1e-10);
}

TEST(CbNorm, InverseCertificates) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto r = hnk::cb_norm_inverse(n, k, 20, 6);
      EXPECT_DOUBLE_EQ(r.closed_form, std::sqrt(double(n) / (n - k + 1)));
      EXPECT_NEAR(r.certified, r.closed_form, 1e-10);
      EXPECT_TRUE(r.bound_holds);
    }
  EXPECT_NEAR(hnk::cb_norm_inverse(4, 2).certified, std::sqrt(4.0 / 3.0), 1e-10);
  EXPECT_NEAR(hnk::cb_norm_inverse(5, 5, 0).certified, std::sqrt(5.0), 1e-10);
}

TEST(CbNorm, RatiosOfRandomTuplesObeyBounds) {
  hnk::Rng rng = hnk::split_rng(41, 5);
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= n; ++k)
      for (int t = 0; t < 10; ++t) {
        const auto hs = gaussian_tuple(n, 1 + t % (n + 2), rng);
        const OperatorTuple one(n, 1, hs), lvl(n, k, hs);
        EXPECT_LE(hnk::forward_ratio(lvl, one), std::sqrt(double(k)) + 1e-9);
        EXPECT_LE(hnk::inverse_ratio(lvl, one), std::sqrt(double(n) / (n - k + 1)) + 1e-9);
      }
}

TEST(Distance, Examples) {
  EXPECT_NEAR(hnk::cb_distance(4, 2, Target::column).value, std::sqrt(8.0 / 3.0), 1e-9);
  EXPECT_NEAR(hnk::cb_distance(4, 2, Target::column).value, 1.632993, 1e-6);
  EXPECT_NEAR(hnk::cb_distance(5, 5, Target::column).value, 5.0, 1e-9);
  EXPECT_NEAR(hnk::cb_distance(3, 1, Target::column).value, 1.0, 1e-9);
  EXPECT_NEAR(hnk::cb_distance(6, 6, Target::row).value, 1.0, 1e-9);
  EXPECT_NEAR(hnk::cb_distance(6, 1, Target::row).value, 6.0, 1e-9);
}

TEST(Distance, RecordInvariants) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k)
      for (Target target : {Target::column, Target::row}) {
        const auto d = hnk::cb_distance(n, k, target);
        EXPECT_EQ(d.n, n);
        EXPECT_EQ(d.k, k);
        EXPECT_EQ(d.target, target);
        EXPECT_NEAR(d.value, d.forward_cb * d.inverse_cb, 1e-12);
        EXPECT_LT(d.abs_err(), 1e-9);
        EXPECT_DOUBLE_EQ(d.closed_form, hnk::distance_closed_form(n, k, target));
      }
}

TEST(Distance, RowIsReflectedColumn) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      EXPECT_DOUBLE_EQ(hnk::distance_closed_form(n, k, Target::row),
                       hnk::distance_closed_form(n, n - k + 1, Target::column));
      EXPECT_NEAR(hnk::cb_distance(n, k, Target::row).value,
                  hnk::cb_distance(n, n - k + 1, Target::column).value, 1e-9);
    }
}

TEST(Distance, DegenerateTriangle) {
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) {
      const double closed = hnk::distance_closed_form(n, k, Target::row) *
                            hnk::distance_closed_form(n, k, Target::column);
      EXPECT_NEAR(closed, double(n), 1e-12);
      const double numeric =
          hnk::cb_distance(n, k, Target::row).value * hnk::cb_distance(n, k, Target::column).value;
      EXPECT_NEAR(numeric, double(n), 1e-12) << n << " " << k;
    }
}

TEST(Distance, ParseTarget) {
  EXPECT_EQ(hnk::parse_target("column"), Target::column);
  EXPECT_EQ(hnk::parse_target("row"), Target::row);
  EXPECT_EQ(hnk::to_string(Target::row), "row");
  EXPECT_THROW(hnk::parse_target("both"), std::domain_error);
}

TEST(RandomSearch, ApproachesForwardBound) {
  const auto r = hnk::random_search(3, 2, 2000, 42);
  EXPECT_LE(r.forward, std::sqrt(2.0) + 1e-9);
  EXPECT_GE(r.forward, std::sqrt(2.0) - 0.05);
  EXPECT_FALSE(r.forward_tuple.empty());
  // Recompute the reported ratio from the returned tuple.
  const OperatorTuple one(3, 1, r.forward_tuple), lvl(3, 2, r.forward_tuple);
  EXPECT_NEAR(hnk::forward_ratio(lvl, one), r.forward, 1e-12);
}

TEST(RandomSearch, ApproachesInverseBound) {
  const auto r = hnk::random_search(5, 3, 2000, 42);
  const double bound = std::sqrt(5.0 / 3.0);
  EXPECT_LE(r.inverse, bound + 1e-9);
  EXPECT_GE(r.inverse, bound - 0.05);
  const OperatorTuple one(5, 1, r.inverse_tuple), lvl(5, 3, r.inverse_tuple);
  EXPECT_NEAR(hnk::inverse_ratio(lvl, one), r.inverse, 1e-12);
}

TEST(RandomSearch, IdentityMapIsIsometric) {
  for (std::uint64_t seed : {0ull, 9ull}) {
    const auto r = hnk::random_search(2, 1, 50, seed);
    EXPECT_NEAR(r.forward, 1.0, 1e-12);
    EXPECT_NEAR(r.inverse, 1.0, 1e-12);
  }
}

TEST(RandomSearch, SeededAndValidated) {
  const auto a = hnk::random_search(3, 2, 100, 7);
  const auto b = hnk::random_search(3, 2, 100, 7);
  EXPECT_EQ(a.forward, b.forward);
  EXPECT_EQ(a.inverse, b.inverse);
  EXPECT_THROW(hnk::random_search(3, 2, 0, 1), std::domain_error);
  EXPECT_THROW(hnk::random_search(3, 4, 10, 1), std::domain_error);
}

TEST(Explore, ZeroTrialsReportsNothing) {
  const auto r = hnk::explore(4, 2, 3, 0, 0);
  EXPECT_FALSE(r.forward.has_value());
  EXPECT_FALSE(r.inverse.has_value());
  EXPECT_FALSE(r.estimate.has_value());
  EXPECT_GT(r.triangle_bound, 0.0);
}

TEST(Explore, LowerBoundsAreSane) {
  const auto r = hnk::explore(4, 2, 3, 2000, 1);
  ASSERT_TRUE(r.estimate.has_value());
  EXPECT_GE(*r.estimate, 1.0 - 1e-12);
  EXPECT_NEAR(*r.estimate, *r.forward * *r.inverse, 1e-12);

  const auto s = hnk::explore(5, 2, 4, 2000, 1);
  ASSERT_TRUE(s.estimate.has_value());
  EXPECT_NEAR(s.triangle_bound,
              hnk::distance_closed_form(5, 2, Target::column) *
                  hnk::distance_closed_form(5, 4, Target::column),
              1e-12);
  EXPECT_LE(*s.estimate, s.triangle_bound + 1e-9);
}

TEST(Explore, RejectsDegenerateRange) {
  EXPECT_THROW(hnk::explore(4, 1, 3, 10, 0), std::domain_error);
  EXPECT_THROW(hnk::explore(4, 2, 2, 10, 0), std::domain_error);
  EXPECT_THROW(hnk::explore(4, 2, 4, 10, 0), std::domain_error);
  EXPECT_THROW(hnk::explore(4, 2, 3, -1, 0), std::domain_error);
}
