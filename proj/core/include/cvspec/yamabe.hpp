#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvspec/model.hpp"
#include "cvspec/rational.hpp"

namespace cvspec {

enum class Verdict { stable, degenerate_stable, unstable, unknown };

std::string to_string(Verdict v);

/// Interval of t values; hi may be +infinity.
struct TInterval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool lo_open = true;
  bool hi_open = true;

  bool contains(double t) const;
  bool operator==(const TInterval&) const = default;
};

/// Set of t > 0 where the Jacobi gap is positive, plus the isolated points
/// where it vanishes (degenerate-stable candidates).
struct StabilityRegion {
  std::vector<TInterval> stable;
  std::vector<double> degenerate_points;

  Verdict verdict_at(double t, double tol = 1e-9) const;
  bool is_everything() const;
  std::string describe() const;
};

/// Scalar curvature of (M, g_t): -t^2 |A|^2 + S^B + t^{-2} S^F.
double oneill_scalar(const SubmersionGeometry& geom, double t);

/// Y(g) = S Vol^{2/n} for a metric of constant scalar curvature S.
double yamabe_value(double s_const, double vol, int n);

/// λ_1 - S/(n-1): positive = stable, zero = degenerate stable, negative = unstable.
double jacobi_gap(int n, double lambda1_t, double s_t);

Verdict classify_gap(double gap, double scale = 1.0, double tol = 1e-9);

/// Γ = (n^2+1)/(n+1) (c~ - c) + p c.
double gamma(const SubmersionGeometry& geom);

/// Γ in exact arithmetic.
Rational gamma_exact(int n, int p, Rational c_tilde, Rational c);

/// max{1, sqrt(Γ/|A|^2)}. Throws when |A|^2 is absent or zero.
double stability_threshold(const SubmersionGeometry& geom);

/// Region where (n-1) min_i(A_i + B_i t^{-2}) - S(g_t) > 0. With the exact
/// λ_1(g_t) branches this is the exact stability set; with lower-bound
/// branches it is a guaranteed-stable subset.
StabilityRegion gap_region(const SubmersionGeometry& geom,
                           std::span<const AffineBranch> branches,
                           double tol = 1e-9);

/// gap_region for the exact piecewise λ_1(g_t).
StabilityRegion exact_stability_region(const SubmersionGeometry& geom,
                                       std::span<const AffineBranch> exact_lambda1);

class StabilityReport {
 public:
  SubmersionGeometry geometry;
  double gamma_value = 0.0;
  double threshold_t = 1.0;
  std::vector<AffineBranch> exact_lambda1;       // empty if unknown
  std::optional<AffineBranch> alt_lower_bound;   // valid for all t > 0
  std::optional<double> lambda1_g;               // λ_1 at t = 1, if known
  std::optional<StabilityRegion> exact_region;
  std::optional<StabilityRegion> guaranteed_region;  // from alt_lower_bound

  Verdict verdict(double t) const;
};

/// Requires an Einstein geometry satisfying the main hypotheses, with |A|^2 > 0.
StabilityReport make_stability_report(
    const SubmersionGeometry& geom, std::span<const AffineBranch> exact_lambda1 = {},
    std::optional<AffineBranch> alt_lower_bound = std::nullopt);

}  // namespace cvspec
