#include "hnk/cbnorm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Sparse>

namespace hnk {

namespace {

void check_nk(int n, int k, const char* who) {
  if (n < 1 || k < 1 || k > n)
    throw std::domain_error(std::string(who) + ": need 1 <= k <= n, got n=" +
                            std::to_string(n) + " k=" + std::to_string(k));
}

using SparseMatrix = Eigen::SparseMatrix<double>;

// C_{e_i}^{n,k} assembled column by column from the wedge kernel, without
// materializing the dense matrix.
SparseMatrix sparse_unit_creation(int n, int k, int i) {
  const auto domain = subsets_lex(n, k - 1);
  const auto range = subsets_lex(n, k);
  const auto rows = static_cast<Eigen::Index>(range.size());
  std::vector<Eigen::Triplet<double>> entries;
  Eigen::MatrixXd factors = Eigen::MatrixXd::Zero(n, k);
  factors(i - 1, 0) = 1.0;
  for (std::size_t c = 0; c < domain.size(); ++c) {
    for (int j = 1; j < k; ++j) {
      factors.col(j).setZero();
      factors(domain[c][j - 1] - 1, j) = 1.0;
    }
    const auto coords = wedge(factors, range).coords;
    for (Eigen::Index r = 0; r < coords.size(); ++r)
      if (coords(r) != 0.0)
        entries.emplace_back(static_cast<int>(r), static_cast<int>(c), coords(r));
  }
  SparseMatrix out(rows, static_cast<Eigen::Index>(domain.size()));
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

// Largest eigenvalue of a real symmetric matrix held sparsely. Diagonal
// matrices are read off directly; anything else goes through the dense solver.
double top_eigenvalue(const SparseMatrix& g) {
  bool diagonal = true;
  double top = g.rows() == 0 ? 0.0 : -INFINITY;
  for (int col = 0; col < g.outerSize() && diagonal; ++col)
    for (SparseMatrix::InnerIterator it(g, col); it; ++it)
      if (it.row() != it.col() && it.value() != 0.0) diagonal = false;
  if (diagonal) {
    for (Eigen::Index j = 0; j < g.rows(); ++j) top = std::max(top, g.coeff(j, j));
    return top;
  }
  return hermitian_eigenvalues(ComplexMatrix(Eigen::MatrixXd(g).cast<Complex>()))(0);
}

// Norms of the row and column blocks of the canonical tuple h_i = e_i.
struct CanonicalNorms {
  double row;
  double col;
};

CanonicalNorms canonical_norms(int n, int k) {
  const auto rows = static_cast<Eigen::Index>(binomial(n, k));
  const auto cols = static_cast<Eigen::Index>(binomial(n, k - 1));
  SparseMatrix row_gram(rows, rows), col_gram(cols, cols);
  for (int i = 1; i <= n; ++i) {
    const SparseMatrix c = sparse_unit_creation(n, k, i);
    row_gram += SparseMatrix(c * SparseMatrix(c.transpose()));
    col_gram += SparseMatrix(SparseMatrix(c.transpose()) * c);
  }
  return {std::sqrt(top_eigenvalue(row_gram)), std::sqrt(top_eigenvalue(col_gram))};
}

std::vector<ComplexVector> canonical_vectors(int n) {
  std::vector<ComplexVector> hs;
  for (int i = 1; i <= n; ++i) hs.push_back(unit_vector<Complex>(n, i));
  return hs;
}

double safe_ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

std::vector<ComplexVector> random_tuple(int n, int m, Rng& rng, bool normalize) {
  std::vector<ComplexVector> hs;
  for (int j = 0; j < m; ++j) hs.push_back(random_gaussian_vector(n, rng));
  if (normalize) {
    double total = 0.0;
    for (const auto& h : hs) total += h.squaredNorm();
    const double scale = total > 0 ? 1.0 / std::sqrt(total) : 1.0;
    for (auto& h : hs) h *= scale;
  }
  return hs;
}

// Schatten p-norm (sum sigma^p)^(1/p); p <= 0 selects the operator norm.
// Large finite p gives a smooth stand-in for the operator norm.
double schatten(const ComplexMatrix& m, double p) {
  if (p <= 0.0) return operator_norm(m);
  if (m.size() == 0) return 0.0;
  const ComplexMatrix gram = m.rows() <= m.cols() ? ComplexMatrix(m * m.adjoint())
                                                  : ComplexMatrix(m.adjoint() * m);
  const Eigen::VectorXd eigs = hermitian_eigenvalues(gram);
  const double top = std::max(eigs(0), 0.0);
  if (top == 0.0) return 0.0;
  double acc = 0.0;
  for (Eigen::Index j = 0; j < eigs.size(); ++j)
    acc += std::pow(std::max(eigs(j), 0.0) / top, p / 2.0);
  return std::sqrt(top) * std::pow(acc, 1.0 / p);
}

// Ratio of two block norms as a function of the tuple and of the Schatten
// exponent used for both norms.
using Objective = std::function<double(const std::vector<ComplexVector>&, double)>;

struct Candidate {
  double value = -INFINITY;
  std::vector<ComplexVector> hs;
};

// Random sampling over tuple sizes [m_min, m_max] followed by coordinate
// ascent from the best `refine_starts` samples of every size. Refinement
// climbs Schatten-p ratios with p growing every round, which smooths the
// degenerate top eigenvalues where the operator-norm ratio has its kinks;
// the value reported is always the operator-norm ratio. Streams [stream,
// stream + trials) seed the samples, the following ones the refinements.
Candidate maximize(const Objective& f, int n, int m_min, int m_max, int trials,
                   std::uint64_t seed, std::uint64_t stream, const SearchOptions& opts) {
  const auto keep = static_cast<std::size_t>(std::max(1, opts.refine_starts));
  std::vector<std::vector<Candidate>> top(static_cast<std::size_t>(m_max - m_min + 1));
  for (int t = 0; t < trials; ++t) {
    Rng rng = split_rng(seed, stream + static_cast<std::uint64_t>(t));
    std::uniform_int_distribution<int> size(m_min, m_max);
    Candidate c;
    c.hs = random_tuple(n, size(rng), rng, opts.normalize);
    c.value = f(c.hs, 0.0);
    auto& bucket = top[c.hs.size() - static_cast<std::size_t>(m_min)];
    bucket.push_back(std::move(c));
    std::sort(bucket.begin(), bucket.end(),
              [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
    if (bucket.size() > keep) bucket.pop_back();
  }

  std::vector<Candidate> starts;
  for (auto& bucket : top)
    for (auto& c : bucket) starts.push_back(std::move(c));
  if (starts.empty()) return {};

  Candidate best;
  for (std::size_t s = 0; s < starts.size(); ++s) {
    Rng rng = split_rng(seed, stream + static_cast<std::uint64_t>(trials) + s);
    std::vector<ComplexVector> cur = starts[s].hs;
    if (starts[s].value > best.value) best = starts[s];
    double step = opts.refine_step;
    double p = opts.refine_p_start;
    for (int round = 0; round < opts.refine_rounds; ++round) {
      const bool exact = round + 1 == opts.refine_rounds || p > opts.refine_p_max;
      const double exponent = exact ? 0.0 : p;
      double cur_value = f(cur, exponent);
      double total = 0.0;
      for (const auto& h : cur) total += h.squaredNorm();
      const double scale =
          std::max(std::sqrt(total / static_cast<double>(cur.size() * n)), 1e-12);
      auto accept = [&](std::vector<ComplexVector>& trial) {
        const double v = f(trial, exponent);
        if (!(v > cur_value)) return false;
        cur_value = v;
        cur = std::move(trial);
        const double actual = exact ? v : f(cur, 0.0);
        if (actual > best.value) best = {actual, cur};
        return true;
      };
      bool improved = false;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        for (int attempt = 0; attempt < opts.refine_attempts; ++attempt) {
          auto trial = cur;
          trial[i] += (step * scale) * random_gaussian_vector(n, rng);
          improved = accept(trial) || improved;
        }
      }
      // The step only shrinks once a round brings no gain.
      if (!improved) step *= opts.refine_shrink;
      p *= opts.refine_p_growth;
    }
  }
  return best;
}

}  // namespace

// CreationBasis ---------------------------------------------------------------

CreationBasis::CreationBasis(int n, int k) : n_(n), k_(k) {
  check_nk(n, k, "CreationBasis");
  for (int i = 1; i <= n; ++i) units_.push_back(creation_matrix(n, k, unit_vector<Complex>(n, i)));
}

ComplexMatrix CreationBasis::operator()(const ComplexVector& h) const {
  if (h.size() != n_) throw std::domain_error("CreationBasis: h has wrong length");
  ComplexMatrix out = ComplexMatrix::Zero(units_[0].rows(), units_[0].cols());
  for (int j = 0; j < n_; ++j)
    if (h(j) != 0.0) out += h(j) * units_[j];
  return out;
}

// OperatorTuple ---------------------------------------------------------------

OperatorTuple::OperatorTuple(int n, int k, std::vector<ComplexVector> hs)
    : n_(n), k_(k), hs_(std::move(hs)) {
  check_nk(n, k, "OperatorTuple");
  if (hs_.empty()) throw std::domain_error("OperatorTuple: need m >= 1");
  for (const auto& h : hs_) ops_.push_back(creation_matrix(n, k, h));
}

OperatorTuple::OperatorTuple(const CreationBasis& basis, std::vector<ComplexVector> hs)
    : n_(basis.n()), k_(basis.k()), hs_(std::move(hs)) {
  if (hs_.empty()) throw std::domain_error("OperatorTuple: need m >= 1");
  for (const auto& h : hs_) ops_.push_back(basis(h));
}

OperatorTuple OperatorTuple::canonical(int n, int k) {
  return OperatorTuple(n, k, canonical_vectors(n));
}

OperatorTuple OperatorTuple::at_level(int k) const { return OperatorTuple(n_, k, hs_); }

ComplexMatrix OperatorTuple::row_block() const {
  const Eigen::Index r = ops_[0].rows(), c = ops_[0].cols();
  ComplexMatrix out(r, c * m());
  for (int j = 0; j < m(); ++j) out.middleCols(j * c, c) = ops_[j];
  return out;
}

ComplexMatrix OperatorTuple::col_block() const {
  const Eigen::Index r = ops_[0].rows(), c = ops_[0].cols();
  ComplexMatrix out(r * m(), c);
  for (int j = 0; j < m(); ++j) out.middleRows(j * r, r) = ops_[j];
  return out;
}

ComplexMatrix OperatorTuple::row_gram() const {
  ComplexMatrix g = ComplexMatrix::Zero(ops_[0].rows(), ops_[0].rows());
  for (const auto& c : ops_) g += c * c.adjoint();
  return g;
}

ComplexMatrix OperatorTuple::col_gram() const {
  ComplexMatrix g = ComplexMatrix::Zero(ops_[0].cols(), ops_[0].cols());
  for (const auto& c : ops_) g += c.adjoint() * c;
  return g;
}

double row_norm(const OperatorTuple& t) { return operator_norm(t.row_block()); }
double col_norm(const OperatorTuple& t) { return operator_norm(t.col_block()); }

// Spectra ---------------------------------------------------------------------

std::vector<double> spectrum_k_sums(const std::vector<double>& base, int k) {
  const int n = static_cast<int>(base.size());
  if (k < 0 || k > n)
    throw std::domain_error("spectrum_k_sums: need 0 <= k <= " + std::to_string(n));
  std::vector<double> out;
  for (const IndexSubset& s : subsets_lex(n, k)) {
    double acc = 0.0;
    for (int e : s) acc += base[e - 1];
    out.push_back(acc);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

TraceIdentity trace_identity(int n, int k, const ComplexVector& h) {
  const ComplexMatrix c = creation_matrix(n, k, h);
  return {(c.adjoint() * c).trace().real(),
          static_cast<double>(binomial(n - 1, k - 1)) * h.squaredNorm()};
}

double forward_ratio(const OperatorTuple& level_k, const OperatorTuple& level_1) {
  return safe_ratio(row_norm(level_k), row_norm(level_1));
}

double inverse_ratio(const OperatorTuple& level_k, const OperatorTuple& level_1) {
  return safe_ratio(col_norm(level_1), col_norm(level_k));
}

// Closed forms with certificates ----------------------------------------------

namespace {

CbNormResult sampled_cb_norm(int n, int k, int samples, std::uint64_t seed, bool forward) {
  check_nk(n, k, forward ? "cb_norm_forward" : "cb_norm_inverse");
  CbNormResult r;
  r.n = n;
  r.k = k;
  r.closed_form = forward ? std::sqrt(static_cast<double>(k))
                          : std::sqrt(static_cast<double>(n) / (n - k + 1));
  const CanonicalNorms top = canonical_norms(n, k);
  const CanonicalNorms base = canonical_norms(n, 1);
  r.certified = forward ? top.row / base.row : base.col / top.col;
  r.certificate = canonical_vectors(n);

  const CreationBasis level_k(n, k), level_1(n, 1);
  r.samples = samples;
  for (int s = 0; s < samples; ++s) {
    Rng rng = split_rng(seed, static_cast<std::uint64_t>(s));
    std::uniform_int_distribution<int> size(1, n);
    const auto hs = random_tuple(n, size(rng), rng, false);
    const OperatorTuple b(level_k, hs), a(level_1, hs);
    r.sampled_max = std::max(r.sampled_max, forward ? forward_ratio(b, a) : inverse_ratio(b, a));
  }
  r.bound_holds = r.sampled_max <= r.closed_form + 1e-9;
  return r;
}

}  // namespace

CbNormResult cb_norm_forward(int n, int k, int samples, std::uint64_t seed) {
  return sampled_cb_norm(n, k, samples, seed, true);
}

CbNormResult cb_norm_inverse(int n, int k, int samples, std::uint64_t seed) {
  return sampled_cb_norm(n, k, samples, seed, false);
}

std::string to_string(Target t) { return t == Target::column ? "column" : "row"; }

Target parse_target(const std::string& s) {
  if (s == "column") return Target::column;
  if (s == "row") return Target::row;
  throw std::domain_error("unknown target '" + s + "' (expected column or row)");
}

double DistanceRecord::abs_err() const { return std::abs(value - closed_form); }

double distance_closed_form(int n, int k, Target target) {
  check_nk(n, k, "distance_closed_form");
  const double nd = n, kd = k;
  return target == Target::column ? std::sqrt(kd * nd / (nd - kd + 1))
                                  : std::sqrt((nd - kd + 1) * nd / kd);
}

DistanceRecord cb_distance(int n, int k, Target target) {
  check_nk(n, k, "cb_distance");
  DistanceRecord d;
  d.n = n;
  d.k = k;
  d.target = target;
  d.closed_form = distance_closed_form(n, k, target);
  d.certificate = canonical_vectors(n);

  const CanonicalNorms level = canonical_norms(n, k);
  if (target == Target::column) {
    // From the column space cb = row-cb; into it cb = col-cb.
    const CanonicalNorms column = canonical_norms(n, 1);
    d.forward_cb = level.row / column.row;
    d.inverse_cb = column.col / level.col;
  } else {
    // From the row space cb = col-cb; into it cb = row-cb.
    const CanonicalNorms row = canonical_norms(n, n);
    d.forward_cb = level.col / row.col;
    d.inverse_cb = row.row / level.row;
  }
  d.value = d.forward_cb * d.inverse_cb;

  if (target == Target::row) {
    const DistanceRecord reflected = cb_distance(n, n - k + 1, Target::column);
    if (std::abs(reflected.value - d.value) > 1e-9)
      throw std::logic_error("cb_distance: row distance differs from reflected column distance");
  }
  return d;
}

// Search ----------------------------------------------------------------------

SearchResult random_search(int n, int k, int trials, std::uint64_t seed,
                           const SearchOptions& opts) {
  check_nk(n, k, "random_search");
  if (trials < 1) throw std::domain_error("random_search: need trials >= 1");
  const int m_max = opts.m_max > 0 ? opts.m_max : n;
  const CreationBasis level_k(n, k), level_1(n, 1);

  const Objective forward = [&](const std::vector<ComplexVector>& hs, double p) {
    const OperatorTuple a(level_1, hs), b(level_k, hs);
    return safe_ratio(schatten(b.row_block(), p), schatten(a.row_block(), p));
  };
  const Objective inverse = [&](const std::vector<ComplexVector>& hs, double p) {
    const OperatorTuple c(level_k, hs), d(level_1, hs);
    return safe_ratio(schatten(d.col_block(), p), schatten(c.col_block(), p));
  };

  // Disjoint stream ranges keep the two searches independent.
  const std::uint64_t stride = static_cast<std::uint64_t>(trials) + 1024;
  const Candidate f = maximize(forward, n, 1, m_max, trials, seed, 0, opts);
  const Candidate g = maximize(inverse, n, 1, m_max, trials, seed, stride, opts);
  return {f.value, g.value, f.hs, g.hs};
}

namespace {

enum class Layout { row, column, square };

// 1 x m, m x 1, or 2 x 2 block operator matrix of creation operators.
ComplexMatrix assemble(const CreationBasis& basis, const std::vector<ComplexVector>& hs,
                       Layout layout) {
  std::vector<ComplexMatrix> ops;
  for (const auto& h : hs) ops.push_back(basis(h));
  const Eigen::Index r = ops[0].rows(), c = ops[0].cols();
  const auto m = static_cast<Eigen::Index>(ops.size());
  switch (layout) {
    case Layout::row: {
      ComplexMatrix out(r, c * m);
      for (Eigen::Index j = 0; j < m; ++j) out.middleCols(j * c, c) = ops[j];
      return out;
    }
    case Layout::column: {
      ComplexMatrix out(r * m, c);
      for (Eigen::Index j = 0; j < m; ++j) out.middleRows(j * r, r) = ops[j];
      return out;
    }
    case Layout::square: {
      ComplexMatrix out(2 * r, 2 * c);
      for (Eigen::Index j = 0; j < 4; ++j) out.block((j / 2) * r, (j % 2) * c, r, c) = ops[j];
      return out;
    }
  }
  return {};
}

}  // namespace

ExploreReport explore(int n, int k1, int k2, int trials, std::uint64_t seed) {
  if (!(1 < k1 && k1 < k2 && k2 < n))
    throw std::domain_error("explore: need 1 < k1 < k2 < n");
  if (trials < 0) throw std::domain_error("explore: trials must be nonnegative");
  ExploreReport rep;
  rep.n = n;
  rep.k1 = k1;
  rep.k2 = k2;
  rep.trials = trials;
  rep.seed = seed;
  rep.triangle_bound = distance_closed_form(n, k1, Target::column) *
                       distance_closed_form(n, k2, Target::column);
  if (trials == 0) return rep;

  const CreationBasis source(n, k1), image(n, k2);
  SearchOptions opts;
  double forward = 0.0, inverse = 0.0;
  std::uint64_t stream = 0;
  const std::uint64_t stride = static_cast<std::uint64_t>(trials) + 1024;
  for (Layout layout : {Layout::row, Layout::column, Layout::square}) {
    const int m_min = layout == Layout::square ? 4 : 1;
    const int m_max = layout == Layout::square ? 4 : n;
    const Objective fwd = [&](const std::vector<ComplexVector>& hs, double p) {
      return safe_ratio(schatten(assemble(image, hs, layout), p),
                        schatten(assemble(source, hs, layout), p));
    };
    const Objective inv = [&](const std::vector<ComplexVector>& hs, double p) {
      return safe_ratio(schatten(assemble(source, hs, layout), p),
                        schatten(assemble(image, hs, layout), p));
    };
    forward = std::max(forward, maximize(fwd, n, m_min, m_max, trials, seed, stream, opts).value);
    stream += stride;
    inverse = std::max(inverse, maximize(inv, n, m_min, m_max, trials, seed, stream, opts).value);
    stream += stride;
  }
  rep.forward = forward;
  rep.inverse = inverse;
  rep.estimate = forward * inverse;
  return rep;
}

}  // namespace hnk
