// Acceptance gate: one line per criterion, all tolerances pinned inside the
// check implementations. Exit code = number of failed criteria.

#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "trilap/verify.hpp"

namespace {

using trilap::CheckResult;
using trilap::SuiteOptions;

struct Criterion {
  std::string name;
  std::vector<std::function<CheckResult(const SuiteOptions&)>> checks;
};

}  // namespace

int main() {
  const SuiteOptions opt;  // band 8, fold range 24, order 64, seed 0
  const std::vector<Criterion> criteria = {
      {"tiling-structure", {trilap::check_tiling}},
      {"closed-forms-match-reflection-sums",
       {trilap::check_closed_vs_reflection, trilap::check_degenerate_zero}},
      {"basis-orthogonality", {trilap::check_gram_diagonal, trilap::check_gram_offdiagonal}},
      {"laplacian-eigen-relation", {trilap::check_eigen_relation}},
      {"lattice-fold-identities", {trilap::check_fold_identities}},
      {"truncation-commutes-with-prolongation", {trilap::check_commuting}},
      {"prolongation-norm-relations", {trilap::check_norm_relations}},
      {"backend-equivalence", {trilap::check_backend_equivalence}},
      {"parseval-consistency", {trilap::check_parseval}},
      {"lp-truncation-convergence", {trilap::check_convergence}},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    bool pass = true;
    CheckResult worst;
    double worst_ratio = -1.0;
    for (const auto& check : criterion.checks) {
      const CheckResult r = check(opt);
      pass = pass && r.pass;
      const double ratio = r.tol > 0.0 ? r.max_dev / r.tol : r.max_dev;
      // Report the closest-to-failing check; an actual failure always wins.
      const bool worse = (worst_ratio < 0.0) || (!r.pass && worst.pass) ||
                         (r.pass == worst.pass && ratio > worst_ratio);
      if (worse) {
        worst_ratio = ratio;
        worst = r;
      }
    }
    failures += pass ? 0 : 1;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << criterion.name << ": max deviation "
              << std::scientific << std::setprecision(3) << worst.max_dev << " (tolerance "
              << worst.tol << ", " << worst.name << ")" << std::defaultfloat;
    if (!pass && !worst.counterexample.empty()) std::cout << " — " << worst.counterexample;
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failures) << " of " << criteria.size()
            << " acceptance criteria passed\n";
  return failures;
}
