#ifndef HNK_HOMOG_HPP
#define HNK_HOMOG_HPP

#include <cstdint>

#include "hnk/hnk.hpp"
#include "hnk/linalg.hpp"

namespace hnk {

/// Tolerance used to accept an input matrix as unitary.
inline constexpr double kUnitaryTolerance = 1e-10;

/// Throws std::domain_error unless max|u*u - I| <= kUnitaryTolerance.
void require_unitary(const ComplexMatrix& u, const char* who);

/// psi(u_i) = sum_j u_ji b_j^{n,k}, the image of the i-th column of u.
ComplexMatrix psi_image(const HnkSpace& space, const ComplexMatrix& u, int i);
ComplexMatrix psi_image(int n, int k, const ComplexMatrix& u, int i);

/// The (J', I') entry of psi(u_i) evaluated through minors of conj(u):
///   sum over (I, J) avoiding i of eps(I,i,J) det conj(u)_{J',J} det conj(u)_{I',I} / det conj(u).
Complex entry_formula(int n, int k, const ComplexMatrix& u, int i, const IndexSubset& row,
                      const IndexSubset& col);

/// (wedge over J of u_j)(wedge over I of u_i)^t, a p x q matrix.
ComplexMatrix wedge_outer(const ComplexMatrix& u, const IndexSubset& J, const IndexSubset& I);

/// lambda, v, w with alpha(x) = lambda v x w for the unitary alpha on H_n^k
/// that sends psi(u_i) to b_i.
struct HomogeneityFactors {
  Complex lambda;
  ComplexMatrix v;  // p x p, row r = (wedge over J_r of u_j)^t
  ComplexMatrix w;  // q x q, column s = wedge over I_s of u_i

  ComplexMatrix apply(const ComplexMatrix& x) const { return lambda * v * x * w; }
};

HomogeneityFactors homogeneity_factors(int n, int k, const ComplexMatrix& u);

/// alpha applied to sum_i a_i b_i: the coefficients of x in the basis
/// psi(u_1..u_n) are u* a, and alpha maps psi(u_i) to b_i.
ComplexMatrix unitary_action(const HnkSpace& space, const ComplexMatrix& u,
                             const ComplexVector& a);

struct HomogeneityReport {
  int n = 0;
  int k = 0;
  int trials = 0;
  double factor_unitarity = 0;   // max entry of |v*v - I|, |w*w - I|, ||lambda| - 1|
  double psi_to_basis = 0;       // v psi(u_i) w vs b_i / det conj(u)
  double psi_expansion = 0;      // psi(u_i) vs its wedge-outer-product expansion
  double entry_formula = 0;      // determinant entry formula vs psi(u_i)
  double action = 0;             // alpha(x) vs lambda v x w on random x
  double amplification = 0;      // 2x2 block norms before/after alpha

  double max_deviation() const;
};

/// Runs every homogeneity check for one unitary u; random elements of H_n^k
/// come from split_rng(seed, trial).
HomogeneityReport verify_homogeneity(int n, int k, const ComplexMatrix& u, int trials,
                                     std::uint64_t seed);

}  // namespace hnk

#endif  // HNK_HOMOG_HPP
