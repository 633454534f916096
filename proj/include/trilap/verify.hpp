#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trilap {

/// One verification measurement: worst observed deviation against a pinned
/// tolerance, plus the first counterexample when it fails.
struct CheckResult {
  std::string name;
  bool pass = false;
  double max_dev = 0.0;
  double tol = 0.0;
  std::string counterexample;  ///< empty when passing
};

struct SuiteOptions {
  int band = 8;         ///< index band for basis-level checks
  int fold_range = 24;  ///< lattice range for the folding sweep
  int order = 64;       ///< quadrature order for Gram / norm checks
  std::uint64_t seed = 0;
};

// Fine-grained checks (each maps to one acceptance measurement).
CheckResult check_tiling(const SuiteOptions& opt);
CheckResult check_closed_vs_reflection(const SuiteOptions& opt);
CheckResult check_degenerate_zero(const SuiteOptions& opt);
CheckResult check_gram_diagonal(const SuiteOptions& opt);
CheckResult check_gram_offdiagonal(const SuiteOptions& opt);
CheckResult check_eigen_relation(const SuiteOptions& opt);
CheckResult check_fold_identities(const SuiteOptions& opt);
CheckResult check_commuting(const SuiteOptions& opt);
CheckResult check_norm_relations(const SuiteOptions& opt);
CheckResult check_parseval(const SuiteOptions& opt);
CheckResult check_backend_equivalence(const SuiteOptions& opt);
CheckResult check_convergence(const SuiteOptions& opt);

/// Named suites exposed by the command line: tiling, closedform,
/// orthogonality, eigen, fold, commute, norms, parseval.
const std::vector<std::string>& suite_names();

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::vector<CheckResult> checks;
};

/// Runs one suite by name; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace trilap
