#include "hnk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace hnk {

// GaussRational --------------------------------------------------------------

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussRational: division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational denom = o.re_ * o.re_ + o.im_ * o.im_;
  Rational re = (re_ * o.re_ + im_ * o.im_) / denom;
  im_ = (im_ * o.re_ - re_ * o.im_) / denom;
  re_ = std::move(re);
  return *this;
}

std::string GaussRational::to_string() const {
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) return im_.str() + "i";
  return "(" + re_.str() + (im_ < 0 ? "" : "+") + im_.str() + "i)";
}

ExactMatrix exact_from_ints(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  ExactMatrix out(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c)
      throw std::domain_error("exact_from_ints: ragged rows");
    Eigen::Index j = 0;
    for (long long v : row) out(i, j++) = GaussRational(v);
    ++i;
  }
  return out;
}

// Hermitian eigenvalues --------------------------------------------------------

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols())
    throw std::domain_error("hermitian_eigenvalues: matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Eigen::VectorXd();

  const double scale = std::max(1.0, max_abs(m));
  if (max_abs(m - m.adjoint()) > 1e-12 * scale)
    throw std::domain_error("hermitian_eigenvalues: matrix is not Hermitian");

  ComplexMatrix a = (m + m.adjoint()) / 2.0;
  const double frobenius = a.norm();
  if (frobenius == 0.0) return Eigen::VectorXd::Zero(n);

  auto off_diagonal = [&a, n] {
    double acc = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) acc += std::norm(a(i, j));
    return std::sqrt(acc);
  };

  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal() <= 1e-13 * frobenius) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Rotate the phase of a(p, q) away, leaving a real symmetric 2x2 pivot.
        // Only columns are updated; rows are restored from Hermitian symmetry.
        a.col(q) *= std::conj(a(p, q) / mag);

        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const ComplexVector cp = a.col(p);
        a.col(p) = c * cp - s * a.col(q);
        a.col(q) = s * cp + c * a.col(q);
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = a(q, p) = 0.0;
        a.row(p) = a.col(p).adjoint();
        a.row(q) = a.col(q).adjoint();
      }
    }
  }

  Eigen::VectorXd eigs = a.diagonal().real();
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  return eigs;
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  const ComplexMatrix gram = m.rows() <= m.cols() ? ComplexMatrix(m * m.adjoint())
                                                  : ComplexMatrix(m.adjoint() * m);
  const double top = hermitian_eigenvalues(gram)(0);
  return std::sqrt(std::max(0.0, top));
}

// Randomness -------------------------------------------------------------------

Rng split_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      out(i, j) = Complex(re, im);
    }
  return out;
}

ComplexVector random_gaussian_vector(Eigen::Index n, Rng& rng) {
  return random_gaussian(n, 1, rng).col(0);
}

ComplexMatrix random_unitary(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = random_gaussian(n, n, rng);
  return (g + g.adjoint()) / 2.0;
}

ExactMatrix random_exact(Eigen::Index rows, Eigen::Index cols, Rng& rng, int bound,
                         int max_den) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, max_den);
  ExactMatrix out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const int nr = num(rng), dr = den(rng), ni = num(rng), di = den(rng);
      out(i, j) = GaussRational(Rational(nr) / dr, Rational(ni) / di);
    }
  return out;
}

}  // namespace hnk
