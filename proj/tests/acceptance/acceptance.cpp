// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "hnk/cbnorm.hpp"
#include "hnk/hnk.hpp"
#include "hnk/homog.hpp"
#include "hnk/minors.hpp"

using namespace hnk;

namespace {

struct Outcome {
  bool pass = true;
  double worst = 0;  // largest deviation seen
  std::string note;

  void check(double err, double tol) {
    worst = std::max(worst, err);
    if (!(err <= tol)) pass = false;
  }
  void require(bool ok) { pass = pass && ok; }
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = budget_s <= 0 || secs < budget_s;
  const bool pass = o.pass && in_time;
  failures += pass ? 0 : 1;
  std::printf("%s %d %s: max_err=%.3g time=%.2fs", pass ? "PASS" : "FAIL", id, name, o.worst, secs);
  if (budget_s > 0) std::printf(" (budget %.0fs)", budget_s);
  if (!o.note.empty()) std::printf(" %s", o.note.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

ComplexMatrix matrix_anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

}  // namespace

int main() {
  criterion(1, "intertwining exact, n<=7", 5.0, [] {
    Outcome o;
    for (int n = 1; n <= 7; ++n)
      for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i) o.require(verify_intertwining(n, k, i));
    return o;
  });

  criterion(2, "certified cb norms and distances, n<=8", 20.0, [] {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
      for (int k = 1; k <= n; ++k) {
        const int samples = binomial(n, k) <= 35 ? 200 : 0;
        const CbNormResult f = cb_norm_forward(n, k, samples, 1);
        const CbNormResult g = cb_norm_inverse(n, k, samples, 2);
        o.check(std::abs(f.certified - std::sqrt(double(k))), 1e-10);
        o.check(std::abs(g.certified - std::sqrt(double(n) / (n - k + 1))), 1e-10);
        o.require(f.bound_holds && g.bound_holds);
        const DistanceRecord d = cb_distance(n, k, Target::column);
        o.check(std::abs(d.value - std::sqrt(double(k) * n / (n - k + 1))), 1e-9);
      }
      o.check(std::abs(cb_distance(n, 1, Target::column).value - 1.0), 1e-12);
      o.check(std::abs(cb_distance(n, n, Target::column).value - double(n)), 1e-12);
    }
    return o;
  });

  criterion(3, "random search within 0.05 below closed forms, n<=5", 60.0, [] {
    Outcome o;
    double gap = 0;
    for (int n = 1; n <= 5; ++n)
      for (int k = 1; k <= n; ++k) {
        const SearchResult r = random_search(n, k, 2000, 42);
        const double fwd = std::sqrt(double(k));
        const double inv = std::sqrt(double(n) / (n - k + 1));
        o.check(std::max(0.0, r.forward - fwd), 1e-9);
        o.check(std::max(0.0, r.inverse - inv), 1e-9);
        gap = std::max({gap, fwd - r.forward, inv - r.inverse});
        o.require(r.forward >= fwd - 0.05 && r.inverse >= inv - 0.05);
      }
    char buf[64];
    std::snprintf(buf, sizeof buf, "largest_gap=%.4f", gap);
    o.note = buf;
    return o;
  });

  criterion(4, "homogeneity and entry formula, 20 unitaries, n<=5", 0, [] {
    Outcome o;
    for (int n = 1; n <= 5; ++n)
      for (int k = 1; k <= n; ++k)
        for (int t = 0; t < 20; ++t) {
          Rng rng = split_rng(4, static_cast<std::uint64_t>(n * 1000 + k * 100 + t));
          const ComplexMatrix u = random_unitary(n, rng);
          const HomogeneityReport rep = verify_homogeneity(n, k, u, 1, static_cast<std::uint64_t>(t));
          o.check(rep.psi_to_basis, 1e-9);
          o.check(rep.entry_formula, 1e-9);
        }
    return o;
  });

  criterion(5, "trace identity and k-sum spectra", 0, [] {
    Outcome o;
    Rng rng = split_rng(5, 0);
    std::uniform_int_distribution<int> pick_n(1, 7);
    for (int t = 0; t < 50; ++t) {
      const int n = pick_n(rng);
      const int k = std::uniform_int_distribution<int>(1, n)(rng);
      const ComplexVector h = random_gaussian_vector(n, rng);
      const TraceIdentity r = trace_identity(n, k, h);
      o.check(std::abs(r.computed - r.predicted) / (1 + h.squaredNorm()), 1e-10);
    }
    for (int n = 1; n <= 6; ++n)
      for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
          for (int t = 0; t < 20; ++t) {
            std::vector<ComplexVector> hs;
            for (int j = 0; j < m; ++j) hs.push_back(random_gaussian_vector(n, rng));
            const auto base = hermitian_eigenvalues(OperatorTuple(n, 1, hs).row_gram());
            const auto level = hermitian_eigenvalues(OperatorTuple(n, k, hs).row_gram());
            const auto sums = spectrum_k_sums(std::vector<double>(base.begin(), base.end()), k);
            o.require(static_cast<std::size_t>(level.size()) == sums.size());
            for (std::size_t j = 0; j < sums.size(); ++j)
              o.check(std::abs(level[static_cast<Eigen::Index>(j)] - sums[j]), 1e-8);
          }
    return o;
  });

  criterion(6, "Laplace determinant identities, exact 5x5 and 6x6", 0, [] {
    Outcome o;
    for (int n : {5, 6}) {
      Rng rng = split_rng(6, static_cast<std::uint64_t>(n));
      const ExactMatrix x = random_exact(n, n, rng);
      const MinorTable<GaussRational> minors(x);
      const GaussRational d = det(x);
      for (int s = 0; s <= n; ++s)
        for (const IndexSubset& H : subsets_lex(n, s)) {
          const IndexSubset Hc = H.complement();
          const GaussRational expected = concat_sign(H, Hc) > 0 ? d : -d;
          o.require(laplace_sum(minors, H, Hc) == expected);
          for (const IndexSubset& K : subsets_lex(n, n - s))
            if (!(K == Hc)) o.require(laplace_sum(minors, H, K).is_zero());
        }
    }
    return o;
  });

  criterion(7, "CAR relations on full Fock space, n<=6", 0, [] {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
      std::vector<ComplexMatrix> c;
      for (int i = 1; i <= n; ++i) c.push_back(full_fock_creation(n, unit_vector<Complex>(n, i)));
      const Eigen::Index dim = c.front().rows();
      const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          o.check(max_abs(matrix_anticommutator(c[i], c[j])), 1e-12);
          const ComplexMatrix mixed = c[i] * c[j].adjoint() + c[j].adjoint() * c[i];
          o.check(max_abs(mixed - (i == j ? id : ComplexMatrix::Zero(dim, dim))), 1e-12);
        }
    }
    return o;
  });

  criterion(8, "Hilbertian norm, 100 coefficient vectors, n<=7", 0, [] {
    Outcome o;
    for (int n = 1; n <= 7; ++n)
      for (int k = 1; k <= n; ++k) {
        const HnkSpace space = make_space(n, k);
        Rng rng = split_rng(8, static_cast<std::uint64_t>(n * 10 + k));
        for (int t = 0; t < 100; ++t) {
          const ComplexVector a = random_gaussian_vector(n, rng);
          o.check(std::abs(operator_norm(element(space, a)) - a.norm()), 1e-10);
        }
      }
    return o;
  });

  criterion(9, "degenerate triangle, n<=12", 0, [] {
    Outcome o;
    for (int n = 1; n <= 12; ++n)
      for (int k = 1; k <= n; ++k) {
        const double row = cb_distance(n, k, Target::row).value;
        const double col = cb_distance(n, k, Target::column).value;
        o.check(std::abs(row * col - double(n)), 1e-12);
      }
    return o;
  });

  return failures == 0 ? 0 : 1;
}
