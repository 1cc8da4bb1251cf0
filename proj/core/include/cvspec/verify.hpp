#pragma once

// Invariant suites shared by `cvspec verify` and the tests. Each check is a
// named, self-contained comparison between two independent routes (closed
// form vs enumeration, bound vs exact value, factored vs expanded identity).

#include <string>
#include <vector>

#include "cvspec/catalog.hpp"

namespace cvspec {

enum class Suite { all, oracles, bounds, stability };

Suite suite_from_string(const std::string& s);
std::string to_string(Suite s);

struct VerifyOptions {
  double derived_tol = 1e-9;   // identities evaluated through several steps
  double closed_tol = 1e-12;   // direct closed-form comparisons

  /// Defaults, overridden by CVSPEC_TOL (applied to both tolerances) if set.
  static VerifyOptions from_env();
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& opts = {});

// Individual checks.
CheckResult check_hopf_coherence(int n, int k_max, int points, const VerifyOptions& opts);
CheckResult check_enumeration_coherence(const CatalogEntry& entry, const VerifyOptions& opts);
CheckResult check_hopf_sanity(int n, const VerifyOptions& opts);
CheckResult check_fd_convergence(double t, const VerifyOptions& opts);
CheckResult check_fd_discrete(int N, double t, const VerifyOptions& opts);
CheckResult check_sandwich(const CatalogEntry& entry, const VerifyOptions& opts);
CheckResult check_round_sphere_tangency(int n, int p, const VerifyOptions& opts);
CheckResult check_q_dichotomy(int n, const VerifyOptions& opts);
CheckResult check_lower_bound_shape(const CatalogEntry& entry, const VerifyOptions& opts);
CheckResult check_lambda1_envelope(const CatalogEntry& entry, const VerifyOptions& opts);
CheckResult check_negative_result(const CatalogEntry& entry, const VerifyOptions& opts);
CheckResult check_alt_dominates(const CatalogEntry& entry, const VerifyOptions& opts);
CheckResult check_einstein_consistency(const CatalogEntry& entry, const VerifyOptions& opts);
CheckResult check_threshold_soundness(const CatalogEntry& entry, const VerifyOptions& opts);
CheckResult check_gamma_closed_forms(const VerifyOptions& opts);
CheckResult check_exact_regions(const VerifyOptions& opts);

}  // namespace cvspec
