#ifndef HNK_SUITES_HPP
#define HNK_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hnk/linalg.hpp"

namespace hnk {

inline constexpr const char* kVersion = "0.1.0";

struct CaseResult {
  std::string id;
  nlohmann::json params;
  bool pass = false;
  double max_abs_err = 0;
  double elapsed_ms = 0;
};

/// Result of one verification suite. `elapsed_ms` is the only field that is
/// not reproducible from (suite, nmax, seed, version).
struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::string version = kVersion;
  std::vector<CaseResult> cases;

  bool pass() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Default nmax for a suite (8 for car, 7 elsewhere).
int default_nmax(const std::string& suite);

/// Runs `suite` ("all" runs every suite into one report). Throws
/// std::domain_error for unknown suites or nmax outside the suite's range.
VerificationReport run_suite(const std::string& suite, int nmax, std::uint64_t seed);

/// Lemma 2.2 spectra for a tuple of vectors: eigenvalues of sum h h*, and for
/// each level k the eigenvalues of sum C C* next to the k-sums of the base.
struct SpectraLevel {
  int k = 0;
  std::vector<double> eigenvalues;
  std::vector<double> k_sums;
  double max_abs_err = 0;
  double trace = 0;            // sum_i tr(C_i* C_i)
  double predicted_trace = 0;  // C(n-1, k-1) sum_i ||h_i||^2
};

struct SpectraResult {
  int n = 0;
  std::vector<double> base;
  std::vector<SpectraLevel> levels;
  nlohmann::json to_json() const;
};

/// Input: {"n": int (optional), "k": int (optional), "vectors": [[x, ...], ...]}
/// where each entry is a number or a [re, im] pair. Without "k" every level
/// 1..n is reported.
SpectraResult spectra_from_json(const nlohmann::json& input);

}  // namespace hnk

#endif  // HNK_SUITES_HPP
