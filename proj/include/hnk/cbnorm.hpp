#ifndef HNK_CBNORM_HPP
#define HNK_CBNORM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hnk/fock.hpp"
#include "hnk/linalg.hpp"

namespace hnk {

/// Creation matrices C_{e_1}^{n,k}, ..., C_{e_n}^{n,k}. C_h is sum_j h_j C_{e_j}.
class CreationBasis {
 public:
  CreationBasis(int n, int k);
  int n() const { return n_; }
  int k() const { return k_; }
  ComplexMatrix operator()(const ComplexVector& h) const;

 private:
  int n_;
  int k_;
  std::vector<ComplexMatrix> units_;
};

/// An m-tuple (h_1..h_m) in C^n together with the creation operators
/// C_{h_1}^{n,k}, ..., C_{h_m}^{n,k}.
class OperatorTuple {
 public:
  OperatorTuple(int n, int k, std::vector<ComplexVector> hs);
  OperatorTuple(const CreationBasis& basis, std::vector<ComplexVector> hs);

  /// h_i = e_i, i = 1..n: the extremal tuple for both cb norms.
  static OperatorTuple canonical(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int m() const { return static_cast<int>(hs_.size()); }
  const std::vector<ComplexVector>& hs() const { return hs_; }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }

  /// Same vectors at another level.
  OperatorTuple at_level(int k) const;

  ComplexMatrix row_block() const;  // (C_1, ..., C_m)
  ComplexMatrix col_block() const;  // (C_1, ..., C_m)^t stacked vertically
  ComplexMatrix row_gram() const;   // sum C_i C_i*
  ComplexMatrix col_gram() const;   // sum C_i* C_i

 private:
  int n_;
  int k_;
  std::vector<ComplexVector> hs_;
  std::vector<ComplexMatrix> ops_;
};

/// Operator norm of the block row / block column.
double row_norm(const OperatorTuple& t);
double col_norm(const OperatorTuple& t);

/// All sums of k entries of `base` (one per k-subset), sorted descending.
std::vector<double> spectrum_k_sums(const std::vector<double>& base, int k);

struct TraceIdentity {
  double computed = 0;   // tr(C_h* C_h)
  double predicted = 0;  // C(n-1, k-1) ||h||^2
};
TraceIdentity trace_identity(int n, int k, const ComplexVector& h);

/// ||B|| / ||A||: level-k row block over level-1 row block for the same vectors.
double forward_ratio(const OperatorTuple& level_k, const OperatorTuple& level_1);
/// ||D|| / ||C||: level-1 column block over level-k column block.
double inverse_ratio(const OperatorTuple& level_k, const OperatorTuple& level_1);

/// One cb norm of the canonical map psi: H_n^1 -> H_n^k or of its inverse.
struct CbNormResult {
  int n = 0;
  int k = 0;
  double closed_form = 0;   // sqrt(k) or sqrt(n / (n - k + 1))
  double certified = 0;     // ratio attained by the certificate tuple
  std::vector<ComplexVector> certificate;
  double sampled_max = 0;   // largest ratio over the random sample
  int samples = 0;
  bool bound_holds = true;  // sampled_max <= closed_form + 1e-9
};

/// ||psi||_cb = ||psi||_row-cb = sqrt(k).
CbNormResult cb_norm_forward(int n, int k, int samples = 200, std::uint64_t seed = 0);
/// ||psi^-1||_cb = ||psi^-1||_col-cb = sqrt(n / (n - k + 1)).
CbNormResult cb_norm_inverse(int n, int k, int samples = 200, std::uint64_t seed = 0);

enum class Target { column, row };
std::string to_string(Target t);
Target parse_target(const std::string& s);

/// cb Banach-Mazur distance from H_n^k to the column space H_n^1 or to the
/// row space H_n^n, as the product of certified cb norms of the canonical map.
struct DistanceRecord {
  int n = 0;
  int k = 0;
  Target target = Target::column;
  double value = 0;        // forward_cb * inverse_cb
  double forward_cb = 0;
  double inverse_cb = 0;
  double closed_form = 0;
  std::vector<ComplexVector> certificate;

  double abs_err() const;
};

double distance_closed_form(int n, int k, Target target);

/// Row target is computed directly (col-cb from the row space, row-cb back)
/// and checked against the column-target record of n - k + 1; a
/// std::logic_error is raised if the two disagree beyond 1e-9.
DistanceRecord cb_distance(int n, int k, Target target);

struct SearchOptions {
  int m_max = 0;              // 0 means n
  bool normalize = true;
  int refine_starts = 2;         // per tuple size
  int refine_rounds = 40;
  int refine_attempts = 10;      // perturbations tried per vector per round
  double refine_shrink = 0.7;
  double refine_step = 0.5;
  double refine_p_start = 4.0;   // Schatten exponent of the first round
  double refine_p_growth = 1.05;
  double refine_p_max = 512.0;   // beyond this the operator norm itself is used
};

struct SearchResult {
  double forward = 0;
  double inverse = 0;
  std::vector<ComplexVector> forward_tuple;
  std::vector<ComplexVector> inverse_tuple;
};

/// Seeded random search for sup ||B||/||A|| and sup ||D||/||C|| over tuples
/// of size 1..m_max, followed by coordinate-ascent refinement of the best
/// starting points.
SearchResult random_search(int n, int k, int trials, std::uint64_t seed,
                           const SearchOptions& opts = {});

/// Heuristic lower bounds for the cb norms of the canonical map
/// H_n^{k1} -> H_n^{k2}, C_h^{n,k1} -> C_h^{n,k2}, and of its inverse.
/// The estimate is unverified; no closed form is known.
struct ExploreReport {
  int n = 0;
  int k1 = 0;
  int k2 = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::optional<double> forward;
  std::optional<double> inverse;
  std::optional<double> estimate;  // forward * inverse
  double triangle_bound = 0;       // d(H^{k1}, H^1) * d(H^1, H^{k2})
};

ExploreReport explore(int n, int k1, int k2, int trials, std::uint64_t seed);

}  // namespace hnk

#endif  // HNK_CBNORM_HPP
