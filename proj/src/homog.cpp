#include "hnk/homog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hnk {

namespace {

// Coordinates of the wedge of the columns of u listed in `cols`; the empty
// wedge is the vacuum vector (1).
ComplexVector wedge_columns(const ComplexMatrix& u, const IndexSubset& cols) {
  if (cols.empty()) return ComplexVector::Ones(1);
  return wedge(u(Eigen::indexing::all, cols.zero_based())).coords;
}

double unitarity_defect(const ComplexMatrix& u) {
  return max_abs(ComplexMatrix(u.adjoint() * u) -
                 ComplexMatrix::Identity(u.cols(), u.cols()));
}

}  // namespace

void require_unitary(const ComplexMatrix& u, const char* who) {
  if (u.rows() != u.cols() || unitarity_defect(u) > kUnitaryTolerance)
    throw std::domain_error(std::string(who) + ": matrix is not unitary");
}

ComplexMatrix psi_image(const HnkSpace& space, const ComplexMatrix& u, int i) {
  if (u.rows() != space.n) throw std::domain_error("psi_image: u has wrong size");
  require_unitary(u, "psi_image");
  if (i < 1 || i > space.n) throw std::domain_error("psi_image: i out of range");
  return element(space, u.col(i - 1));
}

ComplexMatrix psi_image(int n, int k, const ComplexMatrix& u, int i) {
  return psi_image(make_space(n, k), u, i);
}

Complex entry_formula(int n, int k, const ComplexMatrix& u, int i, const IndexSubset& row,
                      const IndexSubset& col) {
  if (u.rows() != n || u.cols() != n) throw std::domain_error("entry_formula: u has wrong size");
  if (row.n() != n || col.n() != n || row.size() != n - k || col.size() != k - 1)
    throw std::domain_error("entry_formula: |J'| must be n-k and |I'| must be k-1");
  if (i < 1 || i > n) throw std::domain_error("entry_formula: i out of range");
  const ComplexMatrix ubar = u.conjugate();
  const Complex full = det(ubar);
  if (std::abs(full) <= 1e-12) throw std::domain_error("entry_formula: u is singular");
  // Overlapping J', I' give a vanishing Laplace sum; skip the rounding noise.
  for (int x : col)
    if (row.contains(x)) return 0.0;

  Complex acc = 0.0;
  for (const IndexSubset& I : subsets_lex(n, k - 1)) {
    if (I.contains(i)) continue;
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x)
      if (x != i && !I.contains(x)) rest.push_back(x);
    const IndexSubset J(n, std::move(rest));
    acc += static_cast<double>(eps_IiJ(I, i, J)) * submatrix_det(ubar, row, J) *
           submatrix_det(ubar, col, I);
  }
  return acc / full;
}

ComplexMatrix wedge_outer(const ComplexMatrix& u, const IndexSubset& J, const IndexSubset& I) {
  return wedge_columns(u, J) * wedge_columns(u, I).transpose();
}

HomogeneityFactors homogeneity_factors(int n, int k, const ComplexMatrix& u) {
  if (u.rows() != n) throw std::domain_error("homogeneity_factors: u has wrong size");
  require_unitary(u, "homogeneity_factors");
  const auto rows = subsets_lex(n, n - k);
  const auto cols = subsets_lex(n, k - 1);

  HomogeneityFactors f;
  f.lambda = std::conj(det(u));
  f.v.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  f.w.resize(static_cast<Eigen::Index>(cols.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    f.v.row(static_cast<Eigen::Index>(r)) = wedge_columns(u, rows[r]).transpose();
  for (std::size_t s = 0; s < cols.size(); ++s)
    f.w.col(static_cast<Eigen::Index>(s)) = wedge_columns(u, cols[s]);

  if (unitarity_defect(f.v) > 1e-9 || unitarity_defect(f.w) > 1e-9)
    throw std::logic_error("homogeneity_factors: v or w failed the unitarity check");
  return f;
}

ComplexMatrix unitary_action(const HnkSpace& space, const ComplexMatrix& u,
                             const ComplexVector& a) {
  return element(space, u.adjoint() * a);
}

double HomogeneityReport::max_deviation() const {
  return std::max({factor_unitarity, psi_to_basis, psi_expansion, entry_formula, action,
                   amplification});
}

HomogeneityReport verify_homogeneity(int n, int k, const ComplexMatrix& u, int trials,
                                     std::uint64_t seed) {
  const HnkSpace space = make_space(n, k);
  const HomogeneityFactors f = homogeneity_factors(n, k, u);
  const ComplexMatrix ubar = u.conjugate();

  HomogeneityReport rep;
  rep.n = n;
  rep.k = k;
  rep.trials = trials;
  rep.factor_unitarity = std::max({unitarity_defect(f.v), unitarity_defect(f.w),
                                   std::abs(std::abs(f.lambda) - 1.0)});

  for (int i = 1; i <= n; ++i) {
    const ComplexMatrix image = psi_image(space, u, i);
    const ComplexMatrix target = to_complex(space.basis[i - 1]) / f.lambda;
    rep.psi_to_basis = std::max(rep.psi_to_basis, max_abs(ComplexMatrix(f.v * image * f.w - target)));

    ComplexMatrix expansion = ComplexMatrix::Zero(space.p, space.q);
    for (const IndexSubset& I : space.col_subsets) {
      if (I.contains(i)) continue;
      std::vector<int> rest;
      for (int x = 1; x <= n; ++x)
        if (x != i && !I.contains(x)) rest.push_back(x);
      const IndexSubset J(n, std::move(rest));
      expansion += static_cast<double>(eps_IiJ(I, i, J)) * wedge_outer(ubar, J, I);
    }
    expansion /= f.lambda;
    rep.psi_expansion = std::max(rep.psi_expansion, max_abs(ComplexMatrix(image - expansion)));

    for (Eigen::Index r = 0; r < space.p; ++r)
      for (Eigen::Index c = 0; c < space.q; ++c) {
        const Complex e = entry_formula(n, k, u, i, space.row_subsets[r], space.col_subsets[c]);
        rep.entry_formula = std::max(rep.entry_formula, std::abs(e - image(r, c)));
      }
  }

  for (int t = 0; t < trials; ++t) {
    Rng rng = split_rng(seed, static_cast<std::uint64_t>(t));
    const ComplexVector a = random_gaussian_vector(n, rng);
    const ComplexMatrix x = element(space, a);
    rep.action = std::max(rep.action,
                          max_abs(ComplexMatrix(unitary_action(space, u, a) - f.apply(x))));

    ComplexMatrix block(2 * space.p, 2 * space.q);
    ComplexMatrix image(2 * space.p, 2 * space.q);
    for (int s = 0; s < 2; ++s)
      for (int r = 0; r < 2; ++r) {
        const ComplexVector coeffs = random_gaussian_vector(n, rng);
        block.block(s * space.p, r * space.q, space.p, space.q) = element(space, coeffs);
        image.block(s * space.p, r * space.q, space.p, space.q) =
            unitary_action(space, u, coeffs);
      }
    rep.amplification =
        std::max(rep.amplification, std::abs(operator_norm(image) - operator_norm(block)));
  }
  return rep;
}

}  // namespace hnk
