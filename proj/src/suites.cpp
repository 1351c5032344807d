#include "hnk/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "hnk/cbnorm.hpp"
#include "hnk/combinat.hpp"
#include "hnk/fock.hpp"
#include "hnk/hnk.hpp"
#include "hnk/homog.hpp"
#include "hnk/minors.hpp"

namespace hnk {

namespace {

using nlohmann::json;

struct SuiteInfo {
  int default_nmax;
  int max_nmax;
};

const std::map<std::string, SuiteInfo>& suite_table() {
  static const std::map<std::string, SuiteInfo> table = {
      {"combinat", {7, 10}},   {"detlemma", {7, 7}},    {"fock", {7, 8}},
      {"car", {8, 8}},         {"intertwine", {7, 8}},  {"homogeneity", {7, 7}},
      {"spectra", {7, 7}},     {"distance", {7, 12}},
  };
  return table;
}

// Collects cases; `check` returns the case's max_abs_err and throwing counts
// as failure with an infinite error.
class Runner {
 public:
  explicit Runner(std::vector<CaseResult>& out) : out_(out) {}

  void run(std::string id, json params, double tol, const std::function<double()>& check) {
    CaseResult c;
    c.id = std::move(id);
    c.params = std::move(params);
    const auto start = std::chrono::steady_clock::now();
    try {
      c.max_abs_err = check();
      c.pass = c.max_abs_err <= tol;
    } catch (const std::exception& e) {
      c.max_abs_err = std::numeric_limits<double>::infinity();
      c.pass = false;
      c.params["error"] = e.what();
    }
    c.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    out_.push_back(std::move(c));
  }

 private:
  std::vector<CaseResult>& out_;
};

// Reported for exact mismatches too small to show up in double precision.
constexpr double kTiny = std::numeric_limits<double>::denorm_min();

// Zero when equal, otherwise the largest entry of the difference (never zero).
double exact_err(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  if (a == b) return 0.0;
  return std::max(max_abs(to_complex(ExactMatrix(a - b))), kTiny);
}

std::string nk_id(const char* what, int n, int k) {
  return std::string(what) + "/n=" + std::to_string(n) + "/k=" + std::to_string(k);
}

// combinat ----------------------------------------------------------------------

int cycle_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x] - 1)) seen[x] = true;
  }
  return (static_cast<int>(perm.size()) - cycles) % 2 == 0 ? 1 : -1;
}

void suite_combinat(Runner& r, int nmax, std::uint64_t seed) {
  for (int n = 0; n <= std::max(nmax, 10); ++n) {
    r.run("subsets/n=" + std::to_string(n), {{"n", n}}, 0.0, [n] {
      for (int k = 0; k <= n; ++k) {
        const auto list = subsets_lex(n, k);
        if (list.size() != binomial(n, k)) return 1.0;
        for (std::size_t s = 0; s < list.size(); ++s) {
          if (s > 0 && !(list[s - 1] < list[s])) return 1.0;
          if (subset_rank(list[s]) != s) return 1.0;
        }
      }
      return 0.0;
    });
  }

  r.run("perm_sign/multiplicative", {{"max_size", 8}, {"trials", 200}}, 0.0, [seed] {
    Rng rng = split_rng(seed, 0);
    std::uniform_int_distribution<int> size(1, 8);
    for (int t = 0; t < 200; ++t) {
      const int s = size(rng);
      std::vector<int> a(s), b(s), ab(s);
      std::iota(a.begin(), a.end(), 1);
      std::iota(b.begin(), b.end(), 1);
      std::shuffle(a.begin(), a.end(), rng);
      std::shuffle(b.begin(), b.end(), rng);
      for (int x = 0; x < s; ++x) ab[x] = a[b[x] - 1];
      if (perm_sign(a) != cycle_sign(a) || perm_sign(b) != cycle_sign(b)) return 1.0;
      if (perm_sign(ab) != perm_sign(a) * perm_sign(b)) return 1.0;
    }
    return 0.0;
  });

  for (int n = 1; n <= nmax; ++n) {
    for (int k = 1; k <= n; ++k) {
      r.run(nk_id("eps_product", n, k), {{"n", n}, {"k", k}}, 0.0, [n, k] {
        for (int i = 1; i <= n; ++i) {
          std::vector<int> rest;
          for (int x = 1; x <= n; ++x)
            if (x != i) rest.push_back(x);
          for (const IndexSubset& pick : subsets_lex(n - 1, k - 1)) {
            std::vector<int> in, out;
            for (int pos = 0, p = 0; pos < n - 1; ++pos) {
              if (p < pick.size() && pick[p] == pos + 1) {
                in.push_back(rest[pos]);
                ++p;
              } else {
                out.push_back(rest[pos]);
              }
            }
            const IndexSubset I(n, in), J(n, out);
            const int expected = (i + k) % 2 == 0 ? 1 : -1;
            if (eps_IiJ(I, i, J) * eps_IJ(I, J, i) != expected) return 1.0;
          }
        }
        return 0.0;
      });
      r.run(nk_id("w_sign_independent", n, k), {{"n", n}, {"k", k}}, 0.0, [n, k] {
        for (const IndexSubset& J : subsets_lex(n, n - k)) {
          const IndexSubset rest = J.complement();
          int first = 0;
          for (int i : rest) {
            std::vector<int> in;
            for (int x : rest)
              if (x != i) in.push_back(x);
            const IndexSubset I(n, in);
            const int sign = eps_iI(i, I) * eps_IiJ(I, i, J);
            if (first == 0) first = sign;
            if (sign != first) return 1.0;
          }
        }
        return 0.0;
      });
    }
  }
}

// detlemma ----------------------------------------------------------------------

void suite_detlemma(Runner& r, int nmax, std::uint64_t seed) {
  for (int n = 2; n <= std::min(nmax, 6); ++n) {
    const ExactMatrix x = [&] {
      Rng rng = split_rng(seed, static_cast<std::uint64_t>(n));
      return random_exact(n, n, rng);
    }();
    auto minors = std::make_shared<MinorTable<GaussRational>>(x);
    r.run("laplace_expansion/n=" + std::to_string(n), {{"n", n}}, 0.0, [n, minors, x] {
      const GaussRational d = det(x);
      double err = 0.0;
      for (int s = 0; s <= n; ++s)
        for (const IndexSubset& H : subsets_lex(n, s)) {
          const IndexSubset Hc = H.complement();
          GaussRational sum = laplace_sum(*minors, H, Hc);
          if (concat_sign(H, Hc) < 0) sum = -sum;
          if (sum != d) err = std::max(err, std::max(std::abs((sum - d).to_complex()), kTiny));
        }
      return err;
    });
    r.run("laplace_vanishing/n=" + std::to_string(n), {{"n", n}}, 0.0, [n, minors] {
      double err = 0.0;
      for (int s = 1; s < n; ++s)
        for (const IndexSubset& H : subsets_lex(n, s))
          for (const IndexSubset& K : subsets_lex(n, n - s)) {
            if (K == H.complement()) continue;
            const GaussRational sum = laplace_sum(*minors, H, K);
            if (!sum.is_zero()) err = std::max(err, std::max(std::abs(sum.to_complex()), kTiny));
          }
      return err;
    });
  }
}

// fock --------------------------------------------------------------------------

// Wedge of the given columns; the empty wedge is the vacuum.
ComplexVector wedge_or_vacuum(const ComplexMatrix& cols) {
  if (cols.cols() == 0) return ComplexVector::Ones(1);
  return wedge(cols).coords;
}

Complex ip(const ComplexVector& x, const ComplexVector& y) { return y.dot(x); }

void suite_fock(Runner& r, int nmax, std::uint64_t seed) {
  std::uint64_t stream = 0;
  for (int n = 1; n <= nmax; ++n) {
    for (int k = 1; k <= n; ++k) {
      const std::uint64_t s = stream++;
      const json params = {{"n", n}, {"k", k}};
      r.run(nk_id("creation_norm", n, k), params, 1e-9, [=] {
        Rng rng = split_rng(seed, s);
        double err = 0.0;
        for (int t = 0; t < 5; ++t) {
          const ComplexVector h = random_gaussian_vector(n, rng);
          err = std::max(err, std::abs(operator_norm(creation_matrix(n, k, h)) - h.norm()));
        }
        return err;
      });
      r.run(nk_id("annihilation_expansion", n, k), params, 1e-10, [=] {
        Rng rng = split_rng(seed, s + 10000);
        const ComplexVector h = random_gaussian_vector(n, rng);
        const ComplexMatrix hs = random_gaussian(n, k - 1, rng);
        const ComplexMatrix c = creation_matrix(n, k, h);
        const ComplexVector lhs = c.adjoint() * (c * wedge_or_vacuum(hs));
        ComplexVector rhs = ip(h, h) * wedge_or_vacuum(hs);
        for (int j = 0; j < k - 1; ++j) {
          ComplexMatrix cols(n, k - 1);
          cols.col(0) = h;
          for (int q = 0, pos = 1; q < k - 1; ++q)
            if (q != j) cols.col(pos++) = hs.col(q);
          const double sign = j % 2 == 0 ? -1.0 : 1.0;
          rhs += sign * ip(hs.col(j), h) * wedge_or_vacuum(cols);
        }
        return max_abs(ComplexMatrix(lhs - rhs));
      });
      r.run(nk_id("creation_annihilation_expansion", n, k), params, 1e-10, [=] {
        Rng rng = split_rng(seed, s + 20000);
        const ComplexVector h = random_gaussian_vector(n, rng);
        const ComplexMatrix hs = random_gaussian(n, k, rng);
        const ComplexMatrix c = creation_matrix(n, k, h);
        const ComplexVector lhs = c * (c.adjoint() * wedge(hs).coords);
        ComplexVector rhs = ComplexVector::Zero(lhs.size());
        for (int j = 0; j < k; ++j) {
          ComplexMatrix cols = hs;
          cols.col(j) = h;
          rhs += ip(hs.col(j), h) * wedge(cols).coords;
        }
        return max_abs(ComplexMatrix(lhs - rhs));
      });
      if (k >= 2) {
        r.run(nk_id("wedge_alternating", n, k), params, 0.0, [=] {
          Rng rng = split_rng(seed, s + 30000);
          ExactMatrix cols = random_exact(n, k, rng);
          std::uniform_int_distribution<int> pick(0, k - 1);
          const int a = pick(rng);
          const int b = (a + 1 + pick(rng) % (k - 1)) % k;
          cols.col(b) = cols.col(a);
          const ExactVector w = wedge(cols).coords;
          return exact_err(w, ExactVector::Zero(w.size()));
        });
      }
    }
  }
}

// car ---------------------------------------------------------------------------

void suite_car(Runner& r, int nmax, std::uint64_t seed) {
  (void)seed;
  for (int n = 1; n <= nmax; ++n) {
    r.run("car/n=" + std::to_string(n), {{"n", n}, {"dim", 1 << n}}, 1e-12, [n] {
      std::vector<Eigen::MatrixXd> create;
      for (int i = 1; i <= n; ++i)
        create.push_back(full_fock_creation(n, unit_vector<double>(n, i)));
      const Eigen::Index dim = create[0].rows();
      const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
      double err = 0.0;
      // c_i is creation by e_i; it is real, so c_i* is the transpose.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Eigen::MatrixXd cj_star = create[j].transpose();
          Eigen::MatrixXd mixed = create[i] * cj_star + cj_star * create[i];
          if (i == j) mixed -= id;
          err = std::max(err, mixed.cwiseAbs().maxCoeff());
          err = std::max(err, (create[i] * create[j] + create[j] * create[i]).cwiseAbs().maxCoeff());
        }
      return err;
    });
  }
}

// intertwine --------------------------------------------------------------------

void suite_intertwine(Runner& r, int nmax, std::uint64_t seed) {
  std::uint64_t stream = 0;
  for (int n = 1; n <= nmax; ++n) {
    for (int k = 1; k <= n; ++k) {
      const json params = {{"n", n}, {"k", k}};
      auto d = std::make_shared<DiagramUnitaries>();
      r.run(nk_id("unitarity", n, k), params, 0.0, [=] {
        *d = diagram_unitaries(n, k);
        const auto id = [](Eigen::Index m) { return ExactMatrix(ExactMatrix::Identity(m, m)); };
        const ExactMatrix w = d->sign_matrix();
        return std::max({exact_err(d->u_domain.adjoint() * d->u_domain, id(d->u_domain.cols())),
                         exact_err(d->u_range.adjoint() * d->u_range, id(d->u_range.cols())),
                         exact_err(d->complement.adjoint() * d->complement,
                                   id(d->complement.cols())),
                         exact_err(w * w, id(w.cols()))});
      });
      r.run(nk_id("intertwining", n, k), params, 0.0, [=] {
        if (d->n != n) *d = diagram_unitaries(n, k);
        double err = 0.0;
        for (int i = 1; i <= n; ++i) {
          const ExactMatrix b = basis_matrix(n, k, i);
          const ExactMatrix c = creation_matrix<GaussRational>(n, k, unit_vector<GaussRational>(n, i));
          err = std::max(err, exact_err(d->sign_matrix() * d->u_range * b,
                                        d->complement * c * d->u_domain));
        }
        return err;
      });
      r.run(nk_id("basis_orthogonality", n, k), params, 0.0, [=] {
        const HnkSpace space = make_space(n, k);
        const std::size_t support = binomial(n - 1, k - 1);
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
          std::size_t nonzero = 0;
          for (Eigen::Index e = 0; e < space.basis[i].size(); ++e)
            nonzero += space.basis[i].data()[e].is_zero() ? 0 : 1;
          if (nonzero != support) err = std::max(err, 1.0);
          for (int j = 0; j < n; ++j) {
            const GaussRational expected(i == j ? static_cast<long long>(support) : 0LL);
            if (hs_inner(space.basis[i], space.basis[j]) != expected) err = std::max(err, 1.0);
          }
        }
        return err;
      });
      const std::uint64_t s = stream++;
      r.run(nk_id("hilbertian", n, k), params, 1e-10, [=] {
        const HnkSpace space = make_space(n, k);
        Rng rng = split_rng(seed, s);
        double err = 0.0;
        for (int t = 0; t < 100; ++t) {
          const ComplexVector a = random_gaussian_vector(n, rng);
          err = std::max(err, std::abs(operator_norm(element(space, a)) - a.norm()));
        }
        return err;
      });
    }
    r.run("intersection/n=" + std::to_string(n), {{"n", n}}, 0.0, [n] {
      std::set<int> all;
      for (int k = 1; k <= n; ++k) all.insert(k);
      const IntersectionSpace s = intersection_basis(n, all);
      const FockLayout layout(n);
      double err = 0.0;
      for (int i = 1; i <= n; ++i) {
        if (!s.intertwines(i)) err = std::max(err, 1.0);
        // diag(C^{n,1}, ..., C^{n,n}) is the Fock creation operator without the
        // vacuum row and the top-grade column.
        const ExactMatrix full = full_fock_creation(n, unit_vector<GaussRational>(n, i));
        const ExactMatrix cut = full.block(1, 0, layout.dim() - 1, layout.dim() - 1);
        err = std::max(err, exact_err(s.creations[i - 1], cut));
      }
      return err;
    });
  }
}

// homogeneity -------------------------------------------------------------------

void suite_homogeneity(Runner& r, int nmax, std::uint64_t seed) {
  constexpr int kUnitaries = 20;
  std::uint64_t stream = 0;
  for (int n = 1; n <= std::min(nmax, 5); ++n) {
    for (int k = 1; k <= n; ++k) {
      const std::uint64_t s = stream++;
      r.run(nk_id("homogeneity", n, k), {{"n", n}, {"k", k}, {"unitaries", kUnitaries}}, 1e-9,
            [=] {
              double err = 0.0;
              for (int t = 0; t < kUnitaries; ++t) {
                Rng rng = split_rng(seed, s * 1000 + static_cast<std::uint64_t>(t));
                const ComplexMatrix u = random_unitary(n, rng);
                err = std::max(err, verify_homogeneity(n, k, u, 2, rng()).max_deviation());
              }
              return err;
            });
      r.run(nk_id("composition", n, k), {{"n", n}, {"k", k}}, 1e-9, [=] {
        Rng rng = split_rng(seed, s * 1000 + 999);
        const HnkSpace space = make_space(n, k);
        double err = 0.0;
        for (int t = 0; t < 5; ++t) {
          const ComplexMatrix u1 = random_unitary(n, rng);
          const ComplexMatrix u2 = random_unitary(n, rng);
          const HomogeneityFactors f1 = homogeneity_factors(n, k, u1);
          const HomogeneityFactors f2 = homogeneity_factors(n, k, u2);
          const HomogeneityFactors f12 = homogeneity_factors(n, k, u1 * u2);
          const ComplexMatrix x = element(space, random_gaussian_vector(n, rng));
          err = std::max(err, max_abs(ComplexMatrix(f12.apply(x) - f2.apply(f1.apply(x)))));
        }
        return err;
      });
    }
  }
}

// spectra -----------------------------------------------------------------------

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double err = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) err = std::max(err, std::abs(a[j] - b[j]));
  return err;
}

void suite_spectra(Runner& r, int nmax, std::uint64_t seed) {
  r.run("trace_identity", {{"nmax", nmax}, {"samples", 50}}, 1e-10, [=] {
    Rng rng = split_rng(seed, 0);
    double err = 0.0;
    for (int t = 0; t < 50; ++t) {
      const int n = std::uniform_int_distribution<int>(1, nmax)(rng);
      const int k = std::uniform_int_distribution<int>(1, n)(rng);
      const TraceIdentity id = trace_identity(n, k, random_gaussian_vector(n, rng));
      err = std::max(err, std::abs(id.computed - id.predicted));
    }
    return err;
  });
  std::uint64_t stream = 1;
  for (int n = 1; n <= std::min(nmax, 6); ++n)
    for (int m = 1; m <= n; ++m)
      for (int k = 1; k <= n; ++k) {
        const std::uint64_t s = stream++;
        r.run("k_sum_spectrum/n=" + std::to_string(n) + "/m=" + std::to_string(m) +
                  "/k=" + std::to_string(k),
              {{"n", n}, {"m", m}, {"k", k}, {"tuples", 20}}, 1e-8, [=] {
                Rng rng = split_rng(seed, s);
                const CreationBasis level_k(n, k), level_1(n, 1);
                double err = 0.0;
                for (int t = 0; t < 20; ++t) {
                  std::vector<ComplexVector> hs;
                  for (int j = 0; j < m; ++j) hs.push_back(random_gaussian_vector(n, rng));
                  const auto base = to_std(hermitian_eigenvalues(OperatorTuple(level_1, hs).row_gram()));
                  const auto top = to_std(hermitian_eigenvalues(OperatorTuple(level_k, hs).row_gram()));
                  err = std::max(err, max_diff(top, spectrum_k_sums(base, k)));
                }
                return err;
              });
      }
}

// distance ----------------------------------------------------------------------

void suite_distance(Runner& r, int nmax, std::uint64_t seed) {
  for (int n = 1; n <= nmax; ++n) {
    for (int k = 1; k <= n; ++k) {
      const json params = {{"n", n}, {"k", k}};
      // The sampled lower bound gets expensive with C(n, k); it is drawn where
      // the blocks stay small.
      const int samples = binomial(n, k) <= 35 ? 200 : 0;
      r.run(nk_id("cb_norm_forward", n, k), params, 1e-10, [=] {
        const CbNormResult res = cb_norm_forward(n, k, samples, seed);
        if (!res.bound_holds) return std::numeric_limits<double>::infinity();
        return std::abs(res.certified - res.closed_form);
      });
      r.run(nk_id("cb_norm_inverse", n, k), params, 1e-10, [=] {
        const CbNormResult res = cb_norm_inverse(n, k, samples, seed);
        if (!res.bound_holds) return std::numeric_limits<double>::infinity();
        return std::abs(res.certified - res.closed_form);
      });
      r.run(nk_id("distance", n, k), params, 1e-9, [=] {
        const DistanceRecord col = cb_distance(n, k, Target::column);
        const DistanceRecord row = cb_distance(n, k, Target::row);
        double err = std::max(col.abs_err(), row.abs_err());
        // d(H^k, row) d(H^k, column) = d(row, column) = n.
        err = std::max(err, std::abs(col.value * row.value - n));
        return err;
      });
    }
    r.run("special_cases/n=" + std::to_string(n), {{"n", n}}, 1e-12, [n] {
      return std::max(std::abs(cb_distance(n, 1, Target::column).value - 1.0),
                      std::abs(cb_distance(n, n, Target::column).value - n));
    });
  }
  for (int n = 2; n <= std::min(nmax, 4); ++n)
    for (int k = 1; k <= n; ++k) {
      r.run(nk_id("random_search_bound", n, k), {{"n", n}, {"k", k}, {"trials", 200}}, 1e-9,
            [=] {
              const SearchResult s = random_search(n, k, 200, seed);
              const double fwd = std::sqrt(static_cast<double>(k));
              const double inv = std::sqrt(static_cast<double>(n) / (n - k + 1));
              return std::max({0.0, s.forward - fwd, s.inverse - inv});
            });
    }
}

using SuiteFn = void (*)(Runner&, int, std::uint64_t);

SuiteFn suite_fn(const std::string& name) {
  static const std::map<std::string, SuiteFn> fns = {
      {"combinat", suite_combinat},     {"detlemma", suite_detlemma},
      {"fock", suite_fock},             {"car", suite_car},
      {"intertwine", suite_intertwine}, {"homogeneity", suite_homogeneity},
      {"spectra", suite_spectra},       {"distance", suite_distance},
  };
  return fns.at(name);
}

json eigen_list(const std::vector<double>& v) { return json(v); }

}  // namespace

bool VerificationReport::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

nlohmann::json VerificationReport::to_json() const {
  json out;
  out["suite"] = suite;
  out["seed"] = seed;
  out["version"] = version;
  out["cases"] = json::array();
  for (const CaseResult& c : cases) {
    json cj;
    cj["id"] = c.id;
    cj["params"] = c.params;
    cj["status"] = c.pass ? "pass" : "fail";
    // JSON has no infinity; a crashed case reports null.
    if (std::isfinite(c.max_abs_err)) {
      cj["max_abs_err"] = c.max_abs_err;
    } else {
      cj["max_abs_err"] = nullptr;
    }
    cj["elapsed_ms"] = c.elapsed_ms;
    out["cases"].push_back(std::move(cj));
  }
  out["status"] = pass() ? "pass" : "fail";
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"combinat",   "detlemma",    "fock",
                                                 "car",        "intertwine",  "homogeneity",
                                                 "spectra",    "distance",    "all"};
  return names;
}

int default_nmax(const std::string& suite) {
  if (suite == "all") return 7;
  const auto it = suite_table().find(suite);
  if (it == suite_table().end()) throw std::domain_error("unknown suite: " + suite);
  return it->second.default_nmax;
}

VerificationReport run_suite(const std::string& suite, int nmax, std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = suite;
  rep.seed = seed;
  Runner runner(rep.cases);
  if (suite == "all") {
    if (nmax < 1 || nmax > 8) throw std::domain_error("verify: nmax for all must be in [1, 8]");
    for (const std::string& name : suite_names()) {
      if (name == "all") continue;
      const std::size_t first = rep.cases.size();
      suite_fn(name)(runner, std::min(nmax, suite_table().at(name).max_nmax), seed);
      for (std::size_t c = first; c < rep.cases.size(); ++c)
        rep.cases[c].id = name + ":" + rep.cases[c].id;
    }
    return rep;
  }
  const auto it = suite_table().find(suite);
  if (it == suite_table().end()) throw std::domain_error("unknown suite: " + suite);
  if (nmax < 1 || nmax > it->second.max_nmax)
    throw std::domain_error("verify: nmax for " + suite + " must be in [1, " +
                            std::to_string(it->second.max_nmax) + "]");
  suite_fn(suite)(runner, nmax, seed);
  return rep;
}

// spectra command ---------------------------------------------------------------

nlohmann::json SpectraResult::to_json() const {
  json out;
  out["n"] = n;
  out["base"] = eigen_list(base);
  out["levels"] = json::array();
  for (const SpectraLevel& l : levels) {
    out["levels"].push_back({{"k", l.k},
                             {"eigenvalues", l.eigenvalues},
                             {"k_sums", l.k_sums},
                             {"max_abs_err", l.max_abs_err},
                             {"trace", l.trace},
                             {"predicted_trace", l.predicted_trace}});
  }
  return out;
}

SpectraResult spectra_from_json(const nlohmann::json& input) {
  if (!input.is_object() || !input.contains("vectors") || !input["vectors"].is_array() ||
      input["vectors"].empty())
    throw std::domain_error("spectra: expected an object with a nonempty \"vectors\" array");
  std::vector<ComplexVector> hs;
  int n = input.contains("n") ? input["n"].get<int>() : -1;
  for (const json& v : input["vectors"]) {
    if (!v.is_array() || v.empty()) throw std::domain_error("spectra: each vector is a nonempty array");
    if (n < 0) n = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != n)
      throw std::domain_error("spectra: vector length differs from n=" + std::to_string(n));
    ComplexVector h(n);
    for (int j = 0; j < n; ++j) {
      const json& x = v[static_cast<std::size_t>(j)];
      if (x.is_number()) {
        h(j) = x.get<double>();
      } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
        h(j) = Complex(x[0].get<double>(), x[1].get<double>());
      } else {
        throw std::domain_error("spectra: entries are numbers or [re, im] pairs");
      }
    }
    hs.push_back(std::move(h));
  }
  if (n < 1 || n > 12) throw std::domain_error("spectra: n must be in [1, 12]");

  int k_lo = 1, k_hi = n;
  if (input.contains("k")) {
    k_lo = k_hi = input["k"].get<int>();
    if (k_lo < 1 || k_lo > n) throw std::domain_error("spectra: need 1 <= k <= n");
  }

  SpectraResult res;
  res.n = n;
  const CreationBasis level_1(n, 1);
  res.base = to_std(hermitian_eigenvalues(OperatorTuple(level_1, hs).row_gram()));
  double norms = 0.0;
  for (const auto& h : hs) norms += h.squaredNorm();
  for (int k = k_lo; k <= k_hi; ++k) {
    const OperatorTuple t(n, k, hs);
    SpectraLevel l;
    l.k = k;
    l.eigenvalues = to_std(hermitian_eigenvalues(t.row_gram()));
    l.k_sums = spectrum_k_sums(res.base, k);
    l.max_abs_err = max_diff(l.eigenvalues, l.k_sums);
    l.trace = t.col_gram().trace().real();
    l.predicted_trace = static_cast<double>(binomial(n - 1, k - 1)) * norms;
    res.levels.push_back(std::move(l));
  }
  return res;
}

}  // namespace hnk
