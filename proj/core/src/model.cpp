#include "cvspec/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cvspec {

namespace {

void require_positive_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("t must be a positive finite number");
  }
}

void require_valid_pair(const JointEigenpair& pair) {
  if (!(pair.a >= 0.0) || !(pair.lambda >= 0.0)) {
    throw std::invalid_argument("joint eigenpair must be nonnegative");
  }
  if (pair.a > pair.lambda) {
    throw std::invalid_argument("joint eigenpair violates a <= lambda");
  }
  if (pair.mult && *pair.mult < 1) {
    throw std::invalid_argument("multiplicity must be >= 1");
  }
}

}  // namespace

SubmersionGeometry SubmersionGeometry::validated(SubmersionGeometry g) {
  if (g.n < 2) throw std::invalid_argument("geometry: n must be >= 2");
  if (g.p < 1 || g.p >= g.n) {
    throw std::invalid_argument("geometry: need 1 <= p < n");
  }
  if (g.p == g.n - 1) g.c = 0.0;
  if (!(g.c >= 0.0) || !(g.c_tilde >= 0.0)) {
    throw std::invalid_argument("geometry: curvature constants must be >= 0");
  }
  if (g.beta1 && !(*g.beta1 > 0.0)) {
    throw std::invalid_argument("geometry: beta1 must be positive");
  }
  if (g.a_norm_sq && !(*g.a_norm_sq >= 0.0)) {
    throw std::invalid_argument("geometry: |A|^2 must be nonnegative");
  }
  if (g.vol_m && !(*g.vol_m > 0.0)) {
    throw std::invalid_argument("geometry: volume must be positive");
  }
  if (g.einstein && g.a_norm_sq && g.s_base && g.s_fiber) {
    const double lhs = g.n * g.c_tilde;
    const double rhs = -*g.a_norm_sq + *g.s_base + *g.s_fiber;
    const double scale = std::max({1.0, std::abs(lhs), std::abs(*g.s_base)});
    if (std::abs(lhs - rhs) > 1e-12 * scale) {
      throw std::invalid_argument(
          "geometry: Einstein identity n c_tilde = -|A|^2 + S^B + S^F fails");
    }
  }
  return g;
}

bool SubmersionGeometry::satisfies_main_hypotheses() const {
  if (n < 3 || !(c_tilde > 0.0)) return false;
  if (p == n - 1) return c == 0.0;
  return c >= 0.0 && c < c_tilde;
}

double SubmersionGeometry::fiber_scalar() const {
  return s_fiber ? *s_fiber : fiber_dim() * c;
}

std::optional<double> SubmersionGeometry::base_scalar() const {
  if (s_base) return s_base;
  if (einstein && a_norm_sq) return n * c_tilde + *a_norm_sq - fiber_scalar();
  return std::nullopt;
}

void require_main_hypotheses(const SubmersionGeometry& g) {
  if (!g.satisfies_main_hypotheses()) {
    throw std::invalid_argument(
        "geometry '" + g.name +
        "' does not satisfy Ric^M >= c_tilde g with 0 <= c < c_tilde, n >= 3");
  }
}

JointSpectrum::JointSpectrum(std::vector<JointEigenpair> pairs, double cutoff)
    : cutoff_(cutoff) {
  for (const auto& pair : pairs) require_valid_pair(pair);
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return x.lambda < y.lambda || (x.lambda == y.lambda && x.a < y.a);
  });
  for (auto& pair : pairs) {
    if (!pairs_.empty() && pairs_.back().lambda == pair.lambda &&
        pairs_.back().a == pair.a) {
      auto& last = pairs_.back();
      // Merged multiplicity stays known only if both parts were known.
      last.mult = (last.mult && pair.mult)
                      ? std::optional<int>(*last.mult + *pair.mult)
                      : std::nullopt;
    } else {
      pairs_.push_back(pair);
    }
  }
}

double min_branch(std::span<const AffineBranch> branches, double t) {
  require_positive_t(t);
  if (branches.empty()) throw std::invalid_argument("no branches");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& b : branches) best = std::min(best, b(t));
  return best;
}

double variation_eigenvalue(const JointEigenpair& pair, double t) {
  require_positive_t(t);
  require_valid_pair(pair);
  const double inv_t2 = 1.0 / (t * t);
  return inv_t2 * pair.lambda + (1.0 - inv_t2) * pair.a;
}

double lambda1_of_t(const JointSpectrum& spec, double t) {
  require_positive_t(t);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& pair : spec.pairs()) {
    if (pair.is_constant()) continue;
    best = std::min(best, variation_eigenvalue(pair, t));
  }
  if (!std::isfinite(best)) {
    throw std::invalid_argument("spectrum has no non-constant pairs");
  }
  // Any omitted pair has lambda > cutoff and a in [0, lambda], so its value
  // is at least cutoff * min(1, t^{-2}).
  const double floor = spec.cutoff() * std::min(1.0, 1.0 / (t * t));
  if (best > floor * (1.0 + 1e-12)) {
    throw InsufficientCutoff("spectrum cutoff " + std::to_string(spec.cutoff()) +
                             " too small to certify lambda_1 at t=" +
                             std::to_string(t));
  }
  return best;
}

std::vector<JointEigenpair> lambda1_achievers(const JointSpectrum& spec,
                                              double t, double rel_tol) {
  const double best = lambda1_of_t(spec, t);
  std::vector<JointEigenpair> out;
  for (const auto& pair : spec.pairs()) {
    if (pair.is_constant()) continue;
    if (std::abs(variation_eigenvalue(pair, t) - best) <= rel_tol * best) {
      out.push_back(pair);
    }
  }
  return out;
}

double volume_of_t(double vol, int n, int p, double t) {
  if (!(vol > 0.0)) throw std::invalid_argument("volume must be positive");
  require_positive_t(t);
  if (p < 1 || p >= n) throw std::invalid_argument("need 1 <= p < n");
  return vol * std::pow(t, n - p);
}

double scale_invariant_lambda1(double lambda1, double vol, int n) {
  if (!(lambda1 > 0.0) || !(vol > 0.0) || n < 1) {
    throw std::invalid_argument("scale_invariant_lambda1: inputs must be positive");
  }
  return lambda1 * std::pow(vol, 2.0 / n);
}

}  // namespace cvspec
