#include "cvspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cvspec {

QuadraticCriterion::QuadraticCriterion(int n, int p, double lambda_k,
                                       double c_tilde, double c)
    : n_(n), p_(p), lambda_k_(lambda_k), c_tilde_(c_tilde), c_(c) {
  if (n < 2 || p < 1 || p >= n) {
    throw std::invalid_argument("q_criterion: need 1 <= p < n");
  }
  if (!(lambda_k > c_tilde)) {
    throw std::invalid_argument("q_criterion: lambda_k must exceed c_tilde");
  }
  if (p == n - 1) c_ = 0.0;
  const double lam = lambda_k_;
  const double gap = lam - c_tilde_;
  alpha_ = ((lam - c_) + lam * lam / (n_ * gap)) * p_;
  beta_ = (c_tilde_ - c_) / gap * (lam * lam * p_ / n_);
}

double QuadraticCriterion::operator()(double x) const {
  return ((p_ + 1) * x - alpha_) * x + beta_;
}

std::vector<double> QuadraticCriterion::roots() const {
  const double a = p_ + 1;
  const double b = -alpha_;
  const double c = beta_;
  double disc = b * b - 4.0 * a * c;
  const double scale = std::max({1.0, b * b, std::abs(4.0 * a * c)});
  if (disc < 0.0 && disc >= -1e-12 * scale) disc = 0.0;
  if (disc < 0.0) return {};
  if (disc == 0.0) return {-b / (2.0 * a)};
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double r1 = q / a;
  double r2 = c / q;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

double lichnerowicz_obata_floor(int n, double c_tilde) {
  if (n < 2) throw std::invalid_argument("lichnerowicz_obata_floor: n < 2");
  return n * c_tilde / (n - 1);
}

AffineBranch theorem_lower_bound_form(const SubmersionGeometry& geom) {
  require_main_hypotheses(geom);
  const double n = geom.n;
  const double ct = geom.c_tilde;
  const double c = geom.c;
  return {(ct - c) / (n + 1),
          (n * n + 1) / (n * n - 1) * ct + c / (n + 1)};
}

double theorem_lower_bound(const SubmersionGeometry& geom, double t) {
  if (!(t >= 1.0) || !std::isfinite(t)) {
    throw std::invalid_argument("theorem_lower_bound: requires t >= 1");
  }
  return theorem_lower_bound_form(geom)(t);
}

QuadraticCriterion q_criterion(const SubmersionGeometry& geom, double lambda_k) {
  return QuadraticCriterion(geom.n, geom.p, lambda_k, geom.c_tilde, geom.c);
}

double q_eval(const QuadraticCriterion& qc, double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("q_eval: x must be >= 0");
  return qc(x);
}

double horizontal_floor(const SubmersionGeometry& geom) {
  require_main_hypotheses(geom);
  return (geom.c_tilde - geom.c) / (geom.n + 1);
}

Bracket sandwich_small_t(const SubmersionGeometry& geom, double lambda1_g,
                         double t) {
  if (!(t > 0.0) || t > 1.0) {
    throw std::invalid_argument("sandwich_small_t: requires 0 < t <= 1");
  }
  if (!geom.beta1) {
    throw std::invalid_argument("sandwich_small_t: beta1 unknown for '" +
                                geom.name + "'");
  }
  if (!(lambda1_g > 0.0)) {
    throw std::invalid_argument("sandwich_small_t: lambda1(g) must be positive");
  }
  return {lambda1_g, *geom.beta1};
}

BoundEnvelope make_envelope(const SubmersionGeometry& geom,
                            std::optional<double> lambda1_g) {
  return {geom, theorem_lower_bound_form(geom), geom.beta1, lambda1_g};
}

}  // namespace cvspec
