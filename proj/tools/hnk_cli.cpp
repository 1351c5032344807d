// hnk: construct H_n^k, run verification suites, print cb distances.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hnk/cbnorm.hpp"
#include "hnk/hnk.hpp"
#include "hnk/serialize.hpp"
#include "hnk/suites.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --seed wins over HNK_SEED, which wins over the default.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HNK_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("HNK_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

json subset_labels(const std::vector<hnk::IndexSubset>& subsets) {
  json out = json::array();
  for (const auto& s : subsets) out.push_back(s.to_string());
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

// basis ---------------------------------------------------------------------------

int cmd_basis(int n, int k, std::optional<int> i, const std::string& format) {
  if (n < 1 || k < 1 || k > n) throw UsageError("basis: need 1 <= k <= n");
  if (n > 16) throw UsageError("basis: n above 16 is not supported");
  if (n > 12) std::cerr << "warning: n > 12 produces very large matrices\n";
  if (i && (*i < 1 || *i > n)) throw UsageError("basis: need 1 <= i <= n");

  const hnk::HnkSpace space = hnk::make_space(n, k);
  const int first = i ? *i : 1;
  const int last = i ? *i : n;
  if (format == "json") {
    json out = {{"n", n},
                {"k", k},
                {"rows", subset_labels(space.row_subsets)},
                {"cols", subset_labels(space.col_subsets)},
                {"basis", json::array()}};
    for (int j = first; j <= last; ++j)
      out["basis"].push_back({{"i", j}, {"matrix", hnk::to_json(space.basis[j - 1])}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (int j = first; j <= last; ++j) {
      if (j > first) std::cout << "\n";
      std::cout << "b_" << j << "^{" << n << "," << k << "}  (" << space.p << " x " << space.q
                << ")\n"
                << hnk::pretty(space.basis[j - 1], space.row_subsets, space.col_subsets);
    }
  }
  return 0;
}

// verify --------------------------------------------------------------------------

int cmd_verify(const std::string& suite, std::optional<int> nmax,
               std::optional<std::uint64_t> seed_flag, const std::string& out_path) {
  const std::uint64_t seed = resolve_seed(seed_flag);
  int n = 0;
  try {
    n = nmax ? *nmax : hnk::default_nmax(suite);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  hnk::VerificationReport rep;
  try {
    rep = hnk::run_suite(suite, n, seed);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }

  const std::string text = rep.to_json().dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot write " + out_path);
    f << text;
  }
  std::size_t failed = 0;
  for (const auto& c : rep.cases) failed += c.pass ? 0 : 1;
  std::cerr << suite << ": " << rep.cases.size() - failed << "/" << rep.cases.size()
            << " cases pass\n";
  return rep.pass() ? 0 : kExitFail;
}

// distance ------------------------------------------------------------------------

int cmd_distance(int nmax, const std::string& target, const std::string& format) {
  if (nmax < 1 || nmax > 12) throw UsageError("distance: nmax must be in [1, 12]");
  std::vector<hnk::Target> targets;
  if (target == "column" || target == "both") targets.push_back(hnk::Target::column);
  if (target == "row" || target == "both") targets.push_back(hnk::Target::row);

  std::vector<hnk::DistanceRecord> rows;
  for (int n = 1; n <= nmax; ++n)
    for (int k = 1; k <= n; ++k)
      for (hnk::Target t : targets) rows.push_back(hnk::cb_distance(n, k, t));

  if (format == "json") {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"n", r.n},
                     {"k", r.k},
                     {"target", hnk::to_string(r.target)},
                     {"forward_cb", r.forward_cb},
                     {"inverse_cb", r.inverse_cb},
                     {"distance", r.value},
                     {"closed_form", r.closed_form},
                     {"abs_err", r.abs_err()}});
    std::cout << out.dump(2) << "\n";
  } else if (format == "md") {
    std::cout << "| n | k | target | forward_cb | inverse_cb | distance | closed_form | abs_err |\n"
              << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows)
      std::cout << "| " << r.n << " | " << r.k << " | " << hnk::to_string(r.target) << " | "
                << fmt(r.forward_cb) << " | " << fmt(r.inverse_cb) << " | " << fmt(r.value)
                << " | " << fmt(r.closed_form) << " | " << fmt(r.abs_err()) << " |\n";
  } else {
    std::cout << "n,k,target,forward_cb,inverse_cb,distance,closed_form,abs_err\n";
    for (const auto& r : rows)
      std::cout << r.n << "," << r.k << "," << hnk::to_string(r.target) << ","
                << fmt(r.forward_cb) << "," << fmt(r.inverse_cb) << "," << fmt(r.value) << ","
                << fmt(r.closed_form) << "," << fmt(r.abs_err()) << "\n";
  }
  return 0;
}

// explore -------------------------------------------------------------------------

int cmd_explore(int n, int k1, int k2, int trials, std::optional<std::uint64_t> seed_flag) {
  if (!(1 < k1 && k1 < k2 && k2 < n)) throw UsageError("explore: need 1 < k1 < k2 < n");
  if (trials < 0) throw UsageError("explore: trials must be nonnegative");
  const hnk::ExploreReport rep = hnk::explore(n, k1, k2, trials, resolve_seed(seed_flag));
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  const json out = {{"heuristic", true},
                    {"n", rep.n},
                    {"k1", rep.k1},
                    {"k2", rep.k2},
                    {"trials", rep.trials},
                    {"seed", rep.seed},
                    {"forward_lower_bound", opt(rep.forward)},
                    {"inverse_lower_bound", opt(rep.inverse)},
                    {"estimate", opt(rep.estimate)},
                    {"triangle_bound", rep.triangle_bound},
                    {"note", "random search over 1xm, mx1 and 2x2 block amplifications; "
                             "unverified, not compared to any expected value"}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

// spectra -------------------------------------------------------------------------

int cmd_spectra(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  json input;
  try {
    input = json::parse(f);
  } catch (const json::exception& e) {
    throw UsageError(std::string("spectra: invalid JSON: ") + e.what());
  }
  hnk::SpectraResult res;
  try {
    res = hnk::spectra_from_json(input);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  std::cout << res.to_json().dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbertian operator spaces H_n^k: construction and verification"};
  app.set_version_flag("--version", std::string(hnk::kVersion));
  app.require_subcommand(1);

  int n = 0, k = 0;
  std::optional<int> i;
  std::string format;
  auto* basis = app.add_subcommand("basis", "print the basis matrices b_i^{n,k}");
  basis->add_option("--n", n, "dimension")->required();
  basis->add_option("--k", k, "level, 1 <= k <= n")->required();
  basis->add_option("--i", i, "single basis index (default: all)");
  basis->add_option("--format", format, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->default_val("pretty");

  std::string suite, out_path;
  std::optional<int> nmax;
  std::optional<std::uint64_t> seed;
  auto* verify = app.add_subcommand("verify", "run a verification suite, emit a JSON report");
  std::vector<std::string> names = hnk::suite_names();
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--nmax", nmax, "largest n (suite default if omitted)");
  verify->add_option("--seed", seed, "random seed (overrides HNK_SEED)");
  verify->add_option("--out", out_path, "report file (default: stdout)");

  int dist_nmax = 8;
  std::string target;
  auto* distance = app.add_subcommand("distance", "cb Banach-Mazur distance table");
  distance->add_option("--nmax", dist_nmax, "largest n, at most 12")->default_val(8);
  distance->add_option("--target", target, "column, row or both")
      ->check(CLI::IsMember({"column", "row", "both"}))
      ->default_val("column");
  distance->add_option("--format", format, "csv, json or md")
      ->check(CLI::IsMember({"csv", "json", "md"}))
      ->default_val("csv");

  int k1 = 0, k2 = 0, trials = 2000;
  auto* explore = app.add_subcommand("explore", "heuristic search between two inner levels");
  explore->add_option("--n", n)->required();
  explore->add_option("--k1", k1)->required();
  explore->add_option("--k2", k2)->required();
  explore->add_option("--trials", trials)->default_val(2000);
  explore->add_option("--seed", seed, "random seed (overrides HNK_SEED)");

  std::string spectra_path;
  auto* spectra = app.add_subcommand("spectra", "spectra of sum C C* for vectors in a JSON file");
  spectra->add_option("file", spectra_path, "JSON file with a \"vectors\" array")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*basis) return cmd_basis(n, k, i, format);
    if (*verify) {
      if (std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite: " + suite);
      return cmd_verify(suite, nmax, seed, out_path);
    }
    if (*distance) return cmd_distance(dist_nmax, target, format);
    if (*explore) return cmd_explore(n, k1, k2, trials, seed);
    if (*spectra) return cmd_spectra(spectra_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
