#pragma once

#include <optional>
#include <vector>

#include "cvspec/model.hpp"

namespace cvspec {

/// Q_k(x) = (p+1) x^2 - alpha_k x + beta_k, the quadratic whose sign decides
/// whether a horizontal eigenvalue a <= c_tilde - c is admissible on a
/// λ_k-eigenfunction (such an a must satisfy Q_k(a) <= 0).
class QuadraticCriterion {
 public:
  /// Throws std::invalid_argument unless lambda_k > c_tilde.
  QuadraticCriterion(int n, int p, double lambda_k, double c_tilde, double c);

  int n() const { return n_; }
  int p() const { return p_; }
  double lambda_k() const { return lambda_k_; }
  double c_tilde() const { return c_tilde_; }
  double c() const { return c_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  double operator()(double x) const;

  /// Real roots in ascending order; a discriminant in [-1e-12 scale, 0) is
  /// treated as an exact double root.
  std::vector<double> roots() const;

 private:
  int n_;
  int p_;
  double lambda_k_;
  double c_tilde_;
  double c_;
  double alpha_;
  double beta_;
};

struct Bracket {
  double lower;
  double upper;
};

/// Lower bound for t >= 1 as an affine branch plus the β_1 ceiling.
struct BoundEnvelope {
  SubmersionGeometry geometry;
  AffineBranch lower;             // valid for t >= 1
  std::optional<double> upper;    // β_1
  std::optional<double> small_t_lower;  // λ_1(g), valid for 0 < t <= 1

  /// Limit of lower(t) as t -> infinity.
  double lower_limit() const { return lower.A; }
};

/// n c_tilde / (n - 1).
double lichnerowicz_obata_floor(int n, double c_tilde);

/// (c~ - c)/(n+1) + t^{-2}((n^2+1)/(n^2-1) c~ + c/(n+1)), for t >= 1.
double theorem_lower_bound(const SubmersionGeometry& geom, double t);

/// The same bound as an affine branch.
AffineBranch theorem_lower_bound_form(const SubmersionGeometry& geom);

QuadraticCriterion q_criterion(const SubmersionGeometry& geom, double lambda_k);

/// Q_k(x) for x >= 0.
double q_eval(const QuadraticCriterion& qc, double x);

/// (c~ - c)/(n+1): strict lower bound on every horizontal eigenvalue of a
/// non-constant joint eigenfunction.
double horizontal_floor(const SubmersionGeometry& geom);

/// (λ_1(g), β_1) bracketing λ_1(g_t) for 0 < t <= 1.
Bracket sandwich_small_t(const SubmersionGeometry& geom, double lambda1_g,
                         double t);

BoundEnvelope make_envelope(const SubmersionGeometry& geom,
                            std::optional<double> lambda1_g = std::nullopt);

}  // namespace cvspec
