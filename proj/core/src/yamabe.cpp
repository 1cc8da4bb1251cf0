#include "cvspec/yamabe.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cvspec/bounds.hpp"

namespace cvspec {

namespace {

struct Curvature {
  int n;
  double a_sq;
  double s_base;
  double s_fiber;
};

Curvature curvature_of(const SubmersionGeometry& geom) {
  if (!geom.a_norm_sq) {
    throw std::invalid_argument("geometry '" + geom.name + "': |A|^2 unknown");
  }
  const auto s_base = geom.base_scalar();
  if (!s_base) {
    throw std::invalid_argument("geometry '" + geom.name +
                                "': base scalar curvature unavailable");
  }
  return {geom.n, *geom.a_norm_sq, *s_base, geom.fiber_scalar()};
}

// gap as a function of u = t^2.
double gap_at_u(const Curvature& k, std::span<const AffineBranch> branches,
                double u) {
  double lam = std::numeric_limits<double>::infinity();
  for (const auto& b : branches) lam = std::min(lam, b.A + b.B / u);
  return (k.n - 1) * lam + k.a_sq * u - k.s_base - k.s_fiber / u;
}

double gap_scale_at_u(const Curvature& k, std::span<const AffineBranch> branches,
                      double u) {
  double lam = std::numeric_limits<double>::infinity();
  for (const auto& b : branches) lam = std::min(lam, b.A + b.B / u);
  return std::max({1.0, std::abs((k.n - 1) * lam), k.a_sq * u,
                   std::abs(k.s_base), std::abs(k.s_fiber) / u});
}

// Positive real roots of a u^2 + b u + c.
void push_positive_roots(double a, double b, double c, std::vector<double>& out) {
  auto keep = [&](double r) {
    if (r > 0.0 && std::isfinite(r)) out.push_back(r);
  };
  if (a == 0.0) {
    if (b != 0.0) keep(-c / b);
    return;
  }
  double disc = b * b - 4.0 * a * c;
  const double scale = std::max({1.0, b * b, std::abs(4.0 * a * c)});
  if (disc < 0.0 && disc >= -1e-12 * scale) disc = 0.0;
  if (disc < 0.0) return;
  if (disc == 0.0) {
    keep(-b / (2.0 * a));
    return;
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  keep(q / a);
  if (q != 0.0) keep(c / q);
}

enum class Sign { positive, zero, negative };

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::stable:
      return "stable";
    case Verdict::degenerate_stable:
      return "degenerate_stable";
    case Verdict::unstable:
      return "unstable";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

bool TInterval::contains(double t) const {
  const bool above = lo_open ? t > lo : t >= lo;
  const bool below = hi_open ? t < hi : t <= hi;
  return above && below;
}

Verdict StabilityRegion::verdict_at(double t, double tol) const {
  for (double d : degenerate_points) {
    if (std::abs(t - d) <= tol * std::max(1.0, d)) return Verdict::degenerate_stable;
  }
  for (const auto& iv : stable) {
    if (iv.contains(t)) return Verdict::stable;
  }
  return Verdict::unstable;
}

bool StabilityRegion::is_everything() const {
  return degenerate_points.empty() && stable.size() == 1 &&
         stable.front().lo == 0.0 && std::isinf(stable.front().hi);
}

std::string StabilityRegion::describe() const {
  if (is_everything()) return "stable for all t > 0";
  std::ostringstream os;
  os.precision(10);
  if (stable.empty()) {
    os << "no stable t";
  } else {
    os << "stable for t in ";
    for (std::size_t i = 0; i < stable.size(); ++i) {
      const auto& iv = stable[i];
      if (i) os << " U ";
      os << (iv.lo_open ? "(" : "[") << iv.lo << ", ";
      if (std::isinf(iv.hi)) {
        os << "inf)";
      } else {
        os << iv.hi << (iv.hi_open ? ")" : "]");
      }
    }
  }
  if (!degenerate_points.empty()) {
    os << "; gap vanishes at t =";
    for (double d : degenerate_points) os << " " << d;
  }
  return os.str();
}

double oneill_scalar(const SubmersionGeometry& geom, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("oneill_scalar: t must be positive");
  const Curvature k = curvature_of(geom);
  return -t * t * k.a_sq + k.s_base + k.s_fiber / (t * t);
}

double yamabe_value(double s_const, double vol, int n) {
  if (!(vol > 0.0)) throw std::invalid_argument("yamabe_value: volume must be positive");
  if (n < 3) throw std::invalid_argument("yamabe_value: n must be >= 3");
  return s_const * std::pow(vol, 2.0 / n);
}

double jacobi_gap(int n, double lambda1_t, double s_t) {
  if (n < 3) throw std::invalid_argument("jacobi_gap: n must be >= 3");
  return lambda1_t - s_t / (n - 1);
}

Verdict classify_gap(double gap, double scale, double tol) {
  if (std::abs(gap) <= tol * std::max(1.0, scale)) return Verdict::degenerate_stable;
  return gap > 0.0 ? Verdict::stable : Verdict::unstable;
}

double gamma(const SubmersionGeometry& geom) {
  require_main_hypotheses(geom);
  const double n = geom.n;
  return (n * n + 1) / (n + 1) * (geom.c_tilde - geom.c) + geom.p * geom.c;
}

Rational gamma_exact(int n, int p, Rational c_tilde, Rational c) {
  const Rational nn(n);
  return (nn * nn + 1) / (nn + 1) * (c_tilde - c) + Rational(p) * c;
}

double stability_threshold(const SubmersionGeometry& geom) {
  if (!geom.a_norm_sq || !(*geom.a_norm_sq > 0.0)) {
    throw std::invalid_argument("stability_threshold: |A|^2 must be known and positive");
  }
  return std::max(1.0, std::sqrt(gamma(geom) / *geom.a_norm_sq));
}

StabilityRegion gap_region(const SubmersionGeometry& geom,
                           std::span<const AffineBranch> branches, double tol) {
  if (branches.empty()) throw std::invalid_argument("gap_region: no branches");
  const Curvature k = curvature_of(geom);
  if (k.n < 3) throw std::invalid_argument("gap_region: n must be >= 3");

  // Breakpoints in u = t^2: zeros of each branch gap and branch crossings.
  std::vector<double> bps;
  for (const auto& b : branches) {
    push_positive_roots(k.a_sq, (k.n - 1) * b.A - k.s_base,
                        (k.n - 1) * b.B - k.s_fiber, bps);
  }
  for (std::size_t i = 0; i < branches.size(); ++i) {
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      const double dA = branches[j].A - branches[i].A;
      if (dA == 0.0) continue;
      const double u = (branches[i].B - branches[j].B) / dA;
      if (u > 0.0 && std::isfinite(u)) bps.push_back(u);
    }
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end(),
                        [](double x, double y) {
                          return std::abs(x - y) <= 1e-14 * std::max(1.0, y);
                        }),
            bps.end());

  auto sign_at = [&](double u) {
    const double g = gap_at_u(k, branches, u);
    if (std::abs(g) <= tol * gap_scale_at_u(k, branches, u)) return Sign::zero;
    return g > 0.0 ? Sign::positive : Sign::negative;
  };

  // Alternating items: segment 0, breakpoint 0, segment 1, ..., segment m.
  struct Item {
    double lo, hi;  // in u; for a breakpoint lo == hi
    bool point;
    Sign sign;
  };
  std::vector<Item> items;
  const std::size_t m = bps.size();
  for (std::size_t s = 0; s <= m; ++s) {
    const double lo = s == 0 ? 0.0 : bps[s - 1];
    const double hi = s == m ? std::numeric_limits<double>::infinity() : bps[s];
    double sample;
    if (m == 0) {
      sample = 1.0;
    } else if (s == 0) {
      sample = 0.5 * hi;
    } else if (s == m) {
      sample = 2.0 * lo;
    } else {
      sample = std::sqrt(lo * hi);
    }
    items.push_back({lo, hi, false, sign_at(sample)});
    if (s < m) items.push_back({bps[s], bps[s], true, sign_at(bps[s])});
  }

  StabilityRegion region;
  std::optional<TInterval> open;
  for (const auto& item : items) {
    if (item.point && item.sign == Sign::zero) {
      region.degenerate_points.push_back(std::sqrt(item.lo));
    }
    if (item.sign == Sign::positive) {
      if (!open) {
        open = TInterval{std::sqrt(item.lo), 0.0, !item.point, true};
      }
      open->hi = std::sqrt(item.hi);
      open->hi_open = !item.point;
    } else if (open) {
      region.stable.push_back(*open);
      open.reset();
    }
  }
  if (open) region.stable.push_back(*open);
  return region;
}

StabilityRegion exact_stability_region(const SubmersionGeometry& geom,
                                       std::span<const AffineBranch> exact_lambda1) {
  return gap_region(geom, exact_lambda1);
}

Verdict StabilityReport::verdict(double t) const {
  if (!(t > 0.0)) throw std::invalid_argument("verdict: t must be positive");
  const double s = oneill_scalar(geometry, t);
  const int n = geometry.n;
  auto scale_for = [&](double lam) {
    return std::max({1.0, std::abs(lam), std::abs(s) / (n - 1)});
  };
  if (!exact_lambda1.empty()) {
    const double lam = min_branch(exact_lambda1, t);
    return classify_gap(jacobi_gap(n, lam, s), scale_for(lam));
  }
  if (t > 1.0 && t >= threshold_t) return Verdict::stable;

  std::optional<double> lower;
  auto raise = [&](double v) { lower = lower ? std::max(*lower, v) : v; };
  if (alt_lower_bound) raise((*alt_lower_bound)(t));
  if (t >= 1.0) raise(theorem_lower_bound(geometry, t));
  if (t <= 1.0) raise(lambda1_g ? *lambda1_g
                                : lichnerowicz_obata_floor(n, geometry.c_tilde));
  if (lower && classify_gap(jacobi_gap(n, *lower, s), scale_for(*lower)) ==
                   Verdict::stable) {
    return Verdict::stable;
  }
  if (geometry.beta1 &&
      classify_gap(jacobi_gap(n, *geometry.beta1, s), scale_for(*geometry.beta1)) ==
          Verdict::unstable) {
    return Verdict::unstable;
  }
  return Verdict::unknown;
}

StabilityReport make_stability_report(const SubmersionGeometry& geom,
                                      std::span<const AffineBranch> exact_lambda1,
                                      std::optional<AffineBranch> alt_lower_bound) {
  if (!geom.einstein) {
    throw std::invalid_argument("stability report requires an Einstein geometry");
  }
  StabilityReport report;
  report.geometry = geom;
  report.gamma_value = gamma(geom);
  report.threshold_t = stability_threshold(geom);
  report.exact_lambda1.assign(exact_lambda1.begin(), exact_lambda1.end());
  report.alt_lower_bound = alt_lower_bound;
  if (!exact_lambda1.empty()) {
    report.lambda1_g = min_branch(exact_lambda1, 1.0);
    report.exact_region = exact_stability_region(geom, exact_lambda1);
  }
  if (alt_lower_bound) {
    const AffineBranch alt[] = {*alt_lower_bound};
    report.guaranteed_region = gap_region(geom, alt);
  }
  return report;
}

}  // namespace cvspec
