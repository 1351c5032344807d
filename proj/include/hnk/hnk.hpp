#ifndef HNK_HNK_HPP
#define HNK_HNK_HPP

#include <set>
#include <vector>

#include "hnk/combinat.hpp"
#include "hnk/fock.hpp"
#include "hnk/linalg.hpp"

namespace hnk {

/// b_i^{n,k}: p x q with p = C(n, n-k) rows indexed by J-subsets and
/// q = C(n, k-1) columns indexed by I-subsets. Entry (J, I) is eps(I, i, J)
/// when I, {i}, J partition {1..n} and zero otherwise.
ExactMatrix basis_matrix(int n, int k, int i);

/// The space H_n^k with its canonical basis.
struct HnkSpace {
  int n = 0;
  int k = 0;
  Eigen::Index p = 0;
  Eigen::Index q = 0;
  std::vector<ExactMatrix> basis;          // b_1 .. b_n
  std::vector<IndexSubset> row_subsets;    // J_1 .. J_p
  std::vector<IndexSubset> col_subsets;    // I_1 .. I_q
};

HnkSpace make_space(int n, int k);

/// sum_i a_i b_i^{n,k}.
ComplexMatrix element(const HnkSpace& space, const ComplexVector& a);

/// The identifications in the square
///
///     C^q  --b_i-->  C^p
///      |              |  W * U_range
///   U_domain          v
///   grade k-1 --C_{e_i}--> grade k --V--> grade n-k
///
/// With shared lexicographic indexing both U maps are identities.
struct DiagramUnitaries {
  int n = 0;
  int k = 0;
  ExactMatrix u_domain;   // q x q, e_I -> e_{i_1} ^ ... ^ e_{i_{k-1}}
  ExactMatrix u_range;    // p x p, e_J -> e_{j_1} ^ ... ^ e_{j_{n-k}}
  ExactMatrix complement; // C(n,n-k) x C(n,k), e_K -> e_{K^c}
  std::vector<int> signs; // diagonal of W, indexed by J

  ExactMatrix sign_matrix() const;
};

/// Builds the four maps. The sign at J is eps(i, I) * eps(I, i, J); every
/// admissible (i, I) is evaluated and a std::logic_error is raised if they
/// disagree.
DiagramUnitaries diagram_unitaries(int n, int k);

/// Exact test of W U_range b = V C U_domain.
bool intertwines(const DiagramUnitaries& d, const ExactMatrix& b, const ExactMatrix& creation);

/// W U_range b_i^{n,k} == V C_{e_i}^{n,k} U_domain, entrywise in exact arithmetic.
bool verify_intertwining(int n, int k, int i);

/// Generators diag(b_i^{n,k} : k in grades) of the intersection of the
/// H_n^k over `grades`, with the direct-sum unitaries and the matching
/// creation operators diag(C_{e_i}^{n,k} : k in grades).
struct IntersectionSpace {
  int n = 0;
  std::vector<int> grades;              // ascending
  std::vector<ExactMatrix> generators;  // one per i
  std::vector<ExactMatrix> creations;   // one per i
  ExactMatrix left;                     // (+)_k W_k U_range,k
  ExactMatrix complement;               // (+)_k V_k
  ExactMatrix u_domain;                 // (+)_k U_domain,k

  /// left * generators[i-1] == complement * creations[i-1] * u_domain.
  bool intertwines(int i) const;
};

IntersectionSpace intersection_basis(int n, const std::set<int>& grades);

}  // namespace hnk

#endif  // HNK_HNK_HPP
