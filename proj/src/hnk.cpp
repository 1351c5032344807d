#include "hnk/hnk.hpp"

#include <stdexcept>
#include <string>

namespace hnk {

namespace {

void check_nk(int n, int k, const char* who) {
  if (n < 1 || k < 1 || k > n)
    throw std::domain_error(std::string(who) + ": need 1 <= k <= n, got n=" +
                            std::to_string(n) + " k=" + std::to_string(k));
}

ExactMatrix exact_identity(Eigen::Index dim) { return ExactMatrix::Identity(dim, dim); }

}  // namespace

ExactMatrix basis_matrix(int n, int k, int i) {
  check_nk(n, k, "basis_matrix");
  if (i < 1 || i > n) throw std::domain_error("basis_matrix: i out of range");
  const auto rows = subsets_lex(n, n - k);
  const auto cols = subsets_lex(n, k - 1);
  ExactMatrix b = ExactMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                    static_cast<Eigen::Index>(cols.size()));
  // Each I avoiding i determines J as the complement of I + {i}.
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const IndexSubset& I = cols[c];
    if (I.contains(i)) continue;
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x)
      if (x != i && !I.contains(x)) rest.push_back(x);
    const IndexSubset J(n, std::move(rest));
    b(static_cast<Eigen::Index>(subset_rank(J)), static_cast<Eigen::Index>(c)) =
        GaussRational(eps_IiJ(I, i, J));
  }
  return b;
}

HnkSpace make_space(int n, int k) {
  check_nk(n, k, "make_space");
  HnkSpace s;
  s.n = n;
  s.k = k;
  s.row_subsets = subsets_lex(n, n - k);
  s.col_subsets = subsets_lex(n, k - 1);
  s.p = static_cast<Eigen::Index>(s.row_subsets.size());
  s.q = static_cast<Eigen::Index>(s.col_subsets.size());
  s.basis.reserve(n);
  for (int i = 1; i <= n; ++i) s.basis.push_back(basis_matrix(n, k, i));
  return s;
}

ComplexMatrix element(const HnkSpace& space, const ComplexVector& a) {
  if (a.size() != space.n)
    throw std::domain_error("element: coefficient vector has length " +
                            std::to_string(a.size()) + ", expected " + std::to_string(space.n));
  ComplexMatrix x = ComplexMatrix::Zero(space.p, space.q);
  for (int i = 0; i < space.n; ++i) x += a(i) * to_complex(space.basis[i]);
  return x;
}

ExactMatrix DiagramUnitaries::sign_matrix() const {
  ExactMatrix w = ExactMatrix::Zero(static_cast<Eigen::Index>(signs.size()),
                                    static_cast<Eigen::Index>(signs.size()));
  for (std::size_t j = 0; j < signs.size(); ++j)
    w(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = GaussRational(signs[j]);
  return w;
}

DiagramUnitaries diagram_unitaries(int n, int k) {
  check_nk(n, k, "diagram_unitaries");
  DiagramUnitaries d;
  d.n = n;
  d.k = k;
  d.u_domain = exact_identity(static_cast<Eigen::Index>(binomial(n, k - 1)));
  d.u_range = exact_identity(static_cast<Eigen::Index>(binomial(n, n - k)));

  const auto top = subsets_lex(n, k);
  d.complement = ExactMatrix::Zero(static_cast<Eigen::Index>(binomial(n, n - k)),
                                   static_cast<Eigen::Index>(top.size()));
  for (std::size_t c = 0; c < top.size(); ++c)
    d.complement(static_cast<Eigen::Index>(subset_rank(top[c].complement())),
                 static_cast<Eigen::Index>(c)) = GaussRational(1);

  for (const IndexSubset& J : subsets_lex(n, n - k)) {
    const IndexSubset rest = J.complement();  // k elements: one i, the others form I
    int sign = 0;
    for (int i : rest) {
      std::vector<int> others;
      for (int x : rest)
        if (x != i) others.push_back(x);
      const IndexSubset I(n, std::move(others));
      const int s = eps_iI(i, I) * eps_IiJ(I, i, J);
      if (sign == 0) {
        sign = s;
      } else if (s != sign) {
        throw std::logic_error("diagram_unitaries: sign at J=" + J.to_string() +
                               " depends on the choice of i");
      }
    }
    d.signs.push_back(sign);
  }
  return d;
}

bool intertwines(const DiagramUnitaries& d, const ExactMatrix& b, const ExactMatrix& creation) {
  const ExactMatrix lhs = d.sign_matrix() * d.u_range * b;
  const ExactMatrix rhs = d.complement * creation * d.u_domain;
  return lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols() && lhs == rhs;
}

bool verify_intertwining(int n, int k, int i) {
  const auto d = diagram_unitaries(n, k);
  const ExactMatrix c = creation_matrix<GaussRational>(n, k, unit_vector<GaussRational>(n, i));
  return intertwines(d, basis_matrix(n, k, i), c);
}

bool IntersectionSpace::intertwines(int i) const {
  const auto& g = generators.at(i - 1);
  const auto& c = creations.at(i - 1);
  // Every factor is a direct sum over the grades, so the products are
  // compared one diagonal block at a time.
  Eigen::Index p0 = 0, q0 = 0, m0 = 0;
  for (int k : grades) {
    const auto p = static_cast<Eigen::Index>(binomial(n, n - k));
    const auto q = static_cast<Eigen::Index>(binomial(n, k - 1));
    const auto m = static_cast<Eigen::Index>(binomial(n, k));
    const ExactMatrix lhs = left.block(p0, p0, p, p) * g.block(p0, q0, p, q);
    const ExactMatrix rhs =
        complement.block(p0, m0, p, m) * c.block(m0, q0, m, q) * u_domain.block(q0, q0, q, q);
    if (lhs != rhs) return false;
    p0 += p;
    q0 += q;
    m0 += m;
  }
  return p0 == g.rows() && q0 == g.cols() && m0 == c.rows();
}

IntersectionSpace intersection_basis(int n, const std::set<int>& grades) {
  if (grades.empty()) throw std::domain_error("intersection_basis: empty grade set");
  for (int k : grades) check_nk(n, k, "intersection_basis");

  IntersectionSpace s;
  s.n = n;
  s.grades.assign(grades.begin(), grades.end());

  std::vector<ExactMatrix> left, complement, u_domain;
  for (int k : s.grades) {
    const auto d = diagram_unitaries(n, k);
    left.push_back(d.sign_matrix() * d.u_range);
    complement.push_back(d.complement);
    u_domain.push_back(d.u_domain);
  }
  s.left = direct_sum(left);
  s.complement = direct_sum(complement);
  s.u_domain = direct_sum(u_domain);

  for (int i = 1; i <= n; ++i) {
    std::vector<ExactMatrix> gens, creations;
    const ExactVector e = unit_vector<GaussRational>(n, i);
    for (int k : s.grades) {
      gens.push_back(basis_matrix(n, k, i));
      creations.push_back(creation_matrix<GaussRational>(n, k, e));
    }
    s.generators.push_back(direct_sum(gens));
    s.creations.push_back(direct_sum(creations));
  }
  return s;
}

}  // namespace hnk
