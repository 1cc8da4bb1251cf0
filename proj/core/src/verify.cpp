#include "cvspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cvspec/bounds.hpp"
#include "cvspec/oracle.hpp"
#include "cvspec/yamabe.hpp"

namespace cvspec {

namespace {

constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;

std::vector<double> geometric_grid(double lo, double hi, int points) {
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i) {
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
  }
  out.back() = hi;
  return out;
}

// Accumulates the first failure of a check.
class Recorder {
 public:
  Recorder(std::string suite, std::string name)
      : result_{std::move(suite), std::move(name), true, {}} {}

  void expect(bool ok, const std::string& what) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }

  CheckResult done(std::string ok_detail = {}) {
    if (result_.passed) result_.detail = std::move(ok_detail);
    return result_;
  }

 private:
  CheckResult result_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

template <typename F>
CheckResult guarded(const std::string& suite, const std::string& name, F&& body) {
  try {
    return body();
  } catch (const std::exception& ex) {
    return {suite, name, false, std::string("exception: ") + ex.what()};
  }
}

struct ExpectedRegion {
  std::string label;
  SubmersionGeometry geometry;
  std::vector<AffineBranch> branches;
  double boundary;           // lower end of the stable set
  bool excludes_one;         // t = 1 is a degenerate point
};

}  // namespace

Suite suite_from_string(const std::string& s) {
  if (s == "all") return Suite::all;
  if (s == "oracles") return Suite::oracles;
  if (s == "bounds") return Suite::bounds;
  if (s == "stability") return Suite::stability;
  throw std::invalid_argument("unknown suite '" + s + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::all:
      return "all";
    case Suite::oracles:
      return "oracles";
    case Suite::bounds:
      return "bounds";
    case Suite::stability:
      return "stability";
  }
  return "all";
}

VerifyOptions VerifyOptions::from_env() {
  VerifyOptions opts;
  if (const char* env = std::getenv("CVSPEC_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || !(v > 0.0)) {
      throw std::invalid_argument("CVSPEC_TOL must be a positive number");
    }
    opts.derived_tol = v;
    opts.closed_tol = v;
  }
  return opts;
}

CheckResult check_hopf_coherence(int n, int k_max, int points, const VerifyOptions& opts) {
  const std::string name = "hopf_coherence_n" + std::to_string(n);
  return guarded("oracles", name, [&] {
    Recorder rec("oracles", name);
    const auto spec = hopf_joint_spectrum(n, k_max);
    double worst = 0.0;
    for (double t : geometric_grid(0.1, 10.0, points)) {
      const double enumerated = lambda1_of_t(spec, t);
      const double closed = std::min(2.0 * n + 1.0 / (t * t), 4.0 * (n + 1));
      worst = std::max(worst, std::abs(enumerated - closed));
      rec.expect(std::abs(enumerated - closed) <= opts.closed_tol,
                 "t=" + fmt(t) + ": enumeration " + fmt(enumerated) +
                     " vs closed form " + fmt(closed));
    }
    return rec.done("max deviation " + fmt(worst));
  });
}

CheckResult check_enumeration_coherence(const CatalogEntry& entry, const VerifyOptions& opts) {
  const std::string name = "enumeration_coherence_" + entry.id;
  return guarded("oracles", name, [&] {
    Recorder rec("oracles", name);
    const auto spec = entry.joint_spectrum(2000.0);
    rec.expect(spec.has_value(), "entry has no enumeration oracle");
    rec.expect(entry.has_exact(), "entry has no closed form");
    if (!spec || !entry.has_exact()) return rec.done();
    for (int i = 1; i <= 100; ++i) {
      const double t = 0.1 * i;
      const double enumerated = lambda1_of_t(*spec, t);
      const double closed = min_branch(entry.exact_lambda1, t);
      rec.expect(std::abs(enumerated - closed) <= opts.closed_tol * std::max(1.0, closed),
                 "t=" + fmt(t) + ": enumeration " + fmt(enumerated) +
                     " vs closed form " + fmt(closed));
    }
    return rec.done("100 t-points in [0.1, 10]");
  });
}

CheckResult check_hopf_sanity(int n, const VerifyOptions&) {
  const std::string name = "hopf_sanity_n" + std::to_string(n);
  return guarded("oracles", name, [&] {
    Recorder rec("oracles", name);
    const auto spec = hopf_joint_spectrum(n, 30);
    const auto geom = make_entry("hopf", n).geometry;
    const double floor = horizontal_floor(geom);
    double min_a = std::numeric_limits<double>::infinity();
    for (const auto& pair : spec.pairs()) {
      rec.expect(pair.a >= 0.0 && pair.a <= pair.lambda, "pair violates 0 <= a <= lambda");
      if (!pair.is_constant()) min_a = std::min(min_a, pair.a);
    }
    rec.expect(min_a > floor, "min horizontal eigenvalue " + fmt(min_a) +
                                  " not above floor " + fmt(floor));
    return rec.done("min a = " + fmt(min_a) + " > floor " + fmt(floor));
  });
}

CheckResult check_fd_convergence(double t, const VerifyOptions&) {
  const std::string name = "fd_convergence_t" + fmt(t);
  return guarded("oracles", name, [&] {
    Recorder rec("oracles", name);
    const double target = kFourPiSq * std::min(1.0, 1.0 / (t * t));
    std::vector<double> err;
    for (int N : {16, 32, 64}) err.push_back(std::abs(fd_lambda1({N, t}) - target));
    const double order1 = std::log2(err[0] / err[1]);
    const double order2 = std::log2(err[1] / err[2]);
    for (double order : {order1, order2}) {
      rec.expect(order >= 1.9 && order <= 2.1, "empirical order " + fmt(order));
    }
    return rec.done("orders " + fmt(order1) + ", " + fmt(order2));
  });
}

CheckResult check_fd_discrete(int N, double t, const VerifyOptions&) {
  const std::string name = "fd_discrete_N" + std::to_string(N) + "_t" + fmt(t);
  return guarded("oracles", name, [&] {
    Recorder rec("oracles", name);
    const double h = 1.0 / N;
    const double mode = 2.0 / (h * h) * (1.0 - std::cos(2.0 * std::numbers::pi * h));
    const double expected = mode * std::min(1.0, 1.0 / (t * t));
    const double got = fd_lambda1({N, t});
    // Swapping the axes and rescaling the operator by t^2 gives the same eigenvalue.
    const double swapped = fd_solve(N, 1.0, t * t).lambda1 / (t * t);
    rec.expect(std::abs(got - expected) <= 1e-8 * expected,
               "fd " + fmt(got) + " vs discrete closed form " + fmt(expected));
    rec.expect(std::abs(got - swapped) <= 1e-8 * expected,
               "axis swap " + fmt(swapped) + " vs " + fmt(got));
    return rec.done(fmt(got));
  });
}

CheckResult check_sandwich(const CatalogEntry& entry, const VerifyOptions& opts) {
  const std::string name = "sandwich_" + entry.id;
  return guarded("bounds", name, [&] {
    Recorder rec("bounds", name);
    rec.expect(entry.has_exact() && entry.geometry.beta1.has_value(),
               "entry lacks an exact lambda_1 or beta_1");
    if (!rec.done().passed) return rec.done();
    const double beta1 = *entry.geometry.beta1;
    for (int i = 0; i <= 396; ++i) {
      const double t = 1.0 + 0.25 * i;
      const double lower = theorem_lower_bound(entry.geometry, t);
      const double exact = min_branch(entry.exact_lambda1, t);
      const double tol = opts.closed_tol * std::max(1.0, exact);
      rec.expect(exact <= beta1 + tol, "t=" + fmt(t) + ": exact " + fmt(exact) +
                                           " above beta1 " + fmt(beta1));
      if (t == 1.0 && entry.round_sphere) {
        rec.expect(std::abs(exact - lower) <= tol,
                   "round sphere at t=1: lower " + fmt(lower) + " != exact " + fmt(exact));
      } else {
        rec.expect(lower < exact - tol, "t=" + fmt(t) + ": lower " + fmt(lower) +
                                            " not strictly below exact " + fmt(exact));
      }
    }
    // Small-t side: λ_1(g) <= λ_1(g_t) <= β_1.
    const double lambda1_g = min_branch(entry.exact_lambda1, 1.0);
    for (int i = 1; i <= 20; ++i) {
      const double t = 0.05 * i;
      const auto br = sandwich_small_t(entry.geometry, lambda1_g, t);
      const double exact = min_branch(entry.exact_lambda1, t);
      rec.expect(br.lower <= exact + opts.closed_tol * exact && exact <= br.upper * (1 + opts.closed_tol),
                 "small t=" + fmt(t) + ": exact " + fmt(exact) + " outside bracket");
    }
    return rec.done("t in [1, 100] step 0.25 and (0, 1] step 0.05");
  });
}

CheckResult check_round_sphere_tangency(int n, int p, const VerifyOptions& opts) {
  const std::string name = "round_sphere_tangency_" + std::to_string(n) + "_" + std::to_string(p);
  return guarded("bounds", name, [&] {
    Recorder rec("bounds", name);
    const double ct = n - 1.0;  // unit sphere
    const double c = (n - p - 1) * ct / (n - 1);
    const double lambda1 = lichnerowicz_obata_floor(n, ct);
    const QuadraticCriterion q(n, p, lambda1, ct, c);
    const double a = p * ct / (n - 1);
    const double second = n * p * ct / ((n - 1) * (p + 1.0));
    rec.expect(std::abs(q_eval(q, a)) < opts.closed_tol,
               "Q_1(p c~/(n-1)) = " + fmt(q_eval(q, a)));
    const auto roots = q.roots();
    std::vector<double> expected{std::min(a, second), std::max(a, second)};
    if (a == second) expected.resize(1);
    rec.expect(roots.size() == expected.size(), "unexpected root count");
    for (std::size_t i = 0; i < std::min(roots.size(), expected.size()); ++i) {
      rec.expect(std::abs(roots[i] - expected[i]) <= opts.closed_tol * std::max(1.0, expected[i]),
                 "root " + fmt(roots[i]) + " vs " + fmt(expected[i]));
    }
    return rec.done("roots {" + fmt(a) + ", " + fmt(second) + "}");
  });
}

CheckResult check_q_dichotomy(int n, const VerifyOptions& opts) {
  const std::string name = "q_dichotomy_hopf_n" + std::to_string(n);
  return guarded("bounds", name, [&] {
    Recorder rec("bounds", name);
    const auto geom = make_entry("hopf", n).geometry;
    const auto spec = hopf_joint_spectrum(n, 20);
    int checked = 0;
    for (const auto& pair : spec.pairs()) {
      if (pair.is_constant() || pair.a > geom.c_tilde - geom.c) continue;
      const auto q = q_criterion(geom, pair.lambda);
      const double v = q_eval(q, pair.a);
      rec.expect(v <= opts.derived_tol * std::max(1.0, q.beta()),
                 "Q(" + fmt(pair.a) + ") = " + fmt(v) + " > 0 at lambda " + fmt(pair.lambda));
      ++checked;
    }
    return rec.done(std::to_string(checked) + " pairs with a <= c~ - c");
  });
}

CheckResult check_lower_bound_shape(const CatalogEntry& entry, const VerifyOptions& opts) {
  const std::string name = "lower_bound_shape_" + entry.id;
  return guarded("bounds", name, [&] {
    Recorder rec("bounds", name);
    const auto grid = geometric_grid(1.0, 1e4, 200);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      rec.expect(theorem_lower_bound(entry.geometry, grid[i]) <
                     theorem_lower_bound(entry.geometry, grid[i - 1]),
                 "not strictly decreasing at t=" + fmt(grid[i]));
    }
    const double floor = horizontal_floor(entry.geometry);
    const double far = theorem_lower_bound(entry.geometry, 1e8);
    rec.expect(std::abs(far - floor) <= opts.derived_tol * std::max(1.0, floor),
               "limit " + fmt(far) + " vs horizontal floor " + fmt(floor));
    rec.expect(floor > 0.0, "horizontal floor not positive");
    return rec.done("limit " + fmt(floor));
  });
}

CheckResult check_lambda1_envelope(const CatalogEntry& entry, const VerifyOptions& opts) {
  const std::string name = "lambda1_growth_envelope_" + entry.id;
  return guarded("bounds", name, [&] {
    Recorder rec("bounds", name);
    const auto& g = entry.geometry;
    rec.expect(entry.has_exact() && g.vol_m && g.beta1, "entry lacks exact data");
    if (!rec.done().passed) return rec.done();
    const double v2n = std::pow(*g.vol_m, 2.0 / g.n);
    const double rate = 2.0 * (g.n - g.p) / g.n;
    for (double t : geometric_grid(10.0, 1e4, 60)) {
      const double lam = min_branch(entry.exact_lambda1, t);
      const double big = scale_invariant_lambda1(lam, volume_of_t(*g.vol_m, g.n, g.p, t), g.n);
      const double ratio = big / std::pow(t, rate);
      const double lo = theorem_lower_bound(g, t) * v2n;
      const double hi = *g.beta1 * v2n;
      rec.expect(ratio >= lo * (1 - opts.derived_tol) && ratio <= hi * (1 + opts.derived_tol),
                 "t=" + fmt(t) + ": Lambda_1/t^rate = " + fmt(ratio) + " outside [" +
                     fmt(lo) + ", " + fmt(hi) + "]");
    }
    return rec.done("t in [10, 1e4]");
  });
}

CheckResult check_negative_result(const CatalogEntry& entry, const VerifyOptions&) {
  const std::string name = "lambda1_collapse_" + entry.id;
  return guarded("bounds", name, [&] {
    Recorder rec("bounds", name);
    const auto& g = entry.geometry;
    const auto spec = entry.joint_spectrum(4000.0);
    rec.expect(spec.has_value() && g.vol_m.has_value(), "entry lacks an oracle or volume");
    if (!rec.done().passed) return rec.done();
    auto big = [&](double t) {
      return scale_invariant_lambda1(lambda1_of_t(*spec, t),
                                     volume_of_t(*g.vol_m, g.n, g.p, t), g.n);
    };
    const double ratio = big(256.0) / big(2.0);
    rec.expect(ratio < 0.05, "Lambda_1(256)/Lambda_1(2) = " + fmt(ratio));
    // Beyond the crossover λ_1 t^2 is constant, so Λ_1 t^{2 - 2(n-p)/n} is too.
    const double expo = 2.0 - 2.0 * (g.n - g.p) / g.n;
    const double ref = big(2.0) * std::pow(2.0, expo);
    for (int k = 2; k <= 8; ++k) {
      const double t = std::pow(2.0, k);
      const double v = big(t) * std::pow(t, expo);
      rec.expect(std::abs(v - ref) <= 1e-9 * ref, "scaling not constant at t=" + fmt(t));
    }
    return rec.done("Lambda_1(256)/Lambda_1(2) = " + fmt(ratio));
  });
}

CheckResult check_alt_dominates(const CatalogEntry& entry, const VerifyOptions&) {
  const std::string name = "alt_bound_dominates_" + entry.id;
  return guarded("bounds", name, [&] {
    Recorder rec("bounds", name);
    rec.expect(entry.alt_lower_bound.has_value(), "entry has no alternative bound");
    if (!rec.done().passed) return rec.done();
    for (double t : geometric_grid(1.0, 1e4, 200)) {
      rec.expect((*entry.alt_lower_bound)(t) > theorem_lower_bound(entry.geometry, t),
                 "alternative bound below the curvature bound at t=" + fmt(t));
    }
    return rec.done();
  });
}

CheckResult check_einstein_consistency(const CatalogEntry& entry, const VerifyOptions& opts) {
  const std::string name = "einstein_consistency_" + entry.id;
  return guarded("stability", name, [&] {
    Recorder rec("stability", name);
    const auto& g = entry.geometry;
    rec.expect(g.einstein && g.a_norm_sq && g.s_base && g.s_fiber, "incomplete Einstein data");
    if (!rec.done().passed) return rec.done();
    const double defect = g.n * g.c_tilde - (-*g.a_norm_sq + *g.s_base + *g.s_fiber);
    rec.expect(std::abs(defect) < opts.closed_tol, "defect " + fmt(defect));
    rec.expect(std::abs(oneill_scalar(g, 1.0) - g.n * g.c_tilde) < opts.closed_tol * g.n * g.c_tilde,
               "S(g_1) != n c~");
    return rec.done();
  });
}

CheckResult check_threshold_soundness(const CatalogEntry& entry, const VerifyOptions& opts) {
  const std::string name = "threshold_soundness_" + entry.id;
  return guarded("stability", name, [&] {
    Recorder rec("stability", name);
    const auto& g = entry.geometry;
    const double a_sq = *g.a_norm_sq;
    const double gam = gamma(g);
    const double t0 = stability_threshold(g);
    auto check_at = [&](double t, bool strict) {
      const double lower = theorem_lower_bound(g, t);
      const double s = oneill_scalar(g, t);
      const double lhs = (g.n - 1) * lower - s;
      const double factored = a_sq / (t * t) * (t * t - gam / a_sq) * (t * t - 1.0);
      const double scale = std::max({1.0, std::abs(s), a_sq * t * t});
      rec.expect(std::abs(lhs - factored) <= opts.derived_tol * scale,
                 "factorization off by " + fmt(lhs - factored) + " at t=" + fmt(t));
      if (strict) {
        rec.expect(jacobi_gap(g.n, lower, s) > 0.0, "gap not positive at t=" + fmt(t));
      }
    };
    for (double t : geometric_grid(1.0, 100.0, 100)) check_at(t, false);
    if (t0 < 100.0) {
      const auto grid = geometric_grid(t0, 100.0, 100);
      for (std::size_t i = 1; i < grid.size(); ++i) check_at(grid[i], true);
    }
    return rec.done("threshold " + fmt(t0));
  });
}

CheckResult check_gamma_closed_forms(const VerifyOptions& opts) {
  return guarded("stability", "gamma_closed_forms", [&] {
    Recorder rec("stability", "gamma_closed_forms");
    const auto flag = make_entry("flag");
    rec.expect(flag.rationals.at("gamma") == Rational(65, 7),
               "flag Gamma = " + flag.rationals.at("gamma").str());
    rec.expect(std::abs(stability_threshold(flag.geometry) - 2.1547) < 1e-4,
               "flag threshold " + fmt(stability_threshold(flag.geometry)));
    for (int n = 1; n <= 6; ++n) {
      const auto e = make_entry("kobayashi", n);
      const double printed_gamma = 2.0 * n * (2.0 * n * n + 2 * n + 1) / (n + 1);
      const double printed_t = std::sqrt(2.0 * n + 1.0 / (n + 1));
      rec.expect(std::abs(gamma(e.geometry) - printed_gamma) <= opts.closed_tol * printed_gamma,
                 "kobayashi n=" + std::to_string(n) + " Gamma");
      rec.expect(std::abs(stability_threshold(e.geometry) - printed_t) <= opts.closed_tol,
                 "kobayashi n=" + std::to_string(n) + " threshold");
    }
    for (int n = 2; n <= 6; ++n) {
      const auto e = make_entry("twistor", n);
      const double printed_gamma = 4.0 * n * (16.0 * n * n + 32 * n + 17) / (4 * n + 3);
      const double printed_t = std::sqrt(2.0 * n + 2.5 + 1.0 / (4 * n + 3));
      rec.expect(std::abs(gamma(e.geometry) - printed_gamma) <= opts.closed_tol * printed_gamma,
                 "twistor n=" + std::to_string(n) + " Gamma");
      rec.expect(std::abs(stability_threshold(e.geometry) - printed_t) <= opts.closed_tol,
                 "twistor n=" + std::to_string(n) + " threshold");
    }
    return rec.done("flag Gamma = 65/7");
  });
}

CheckResult check_exact_regions(const VerifyOptions& opts) {
  return guarded("stability", "exact_stability_regions", [&] {
    Recorder rec("stability", "exact_stability_regions");
    std::vector<ExpectedRegion> cases;
    for (int n = 1; n <= 3; ++n) {
      const auto e = make_entry("hopf", n);
      cases.push_back({"hopf n=" + std::to_string(n), e.geometry, e.exact_lambda1, 0.0, true});
    }
    for (int n = 1; n <= 3; ++n) {
      const auto e = make_entry("sphere4n3", n);
      const double b = 8.0 * (n * n + n + 1);
      const double u = (-b + std::sqrt(b * b + 72.0 * n)) / (12.0 * n);
      cases.push_back({"sphere4n3 n=" + std::to_string(n), e.geometry, e.exact_lambda1,
                       std::sqrt(u), true});
    }
    {
      const auto e = make_entry("sphere15");
      cases.push_back({"sphere15", e.geometry, e.exact_lambda1,
                       std::sqrt((std::sqrt(19.0) - 4.0) / 2.0), true});
    }
    for (int n = 1; n <= 3; ++n) {
      const auto e = make_entry("cp2n1", n);
      const double m = 2.0 * n * n + n + 1;
      cases.push_back({"cp2n1 n=" + std::to_string(n), e.geometry, e.exact_lambda1,
                       std::sqrt((std::sqrt(m * m + 4.0 * n) - m) / (2.0 * n)), false});
    }
    for (const auto& c : cases) {
      const auto region = exact_stability_region(c.geometry, c.branches);
      const std::size_t want_intervals = c.excludes_one ? 2 : 1;
      rec.expect(region.stable.size() == want_intervals,
                 c.label + ": " + region.describe());
      if (region.stable.empty()) continue;
      rec.expect(std::abs(region.stable.front().lo - c.boundary) <= opts.derived_tol,
                 c.label + ": boundary " + fmt(region.stable.front().lo) + " vs " +
                     fmt(c.boundary));
      rec.expect(region.stable.front().lo_open, c.label + ": boundary included");
      rec.expect(c.boundary == 0.0 || region.verdict_at(c.boundary) == Verdict::degenerate_stable,
                 c.label + ": gap does not vanish at the boundary");
      rec.expect(std::isinf(region.stable.back().hi), c.label + ": unbounded side missing");
      const bool one_degenerate =
          region.verdict_at(1.0) == Verdict::degenerate_stable;
      rec.expect(one_degenerate == c.excludes_one, c.label + ": wrong verdict at t=1");
    }
    return rec.done(std::to_string(cases.size()) + " regions");
  });
}

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::oracles) {
    for (int n = 1; n <= 3; ++n) out.push_back(check_hopf_coherence(n, 30, 100, opts));
    for (const char* id : {"torus", "product", "hopf"}) {
      out.push_back(check_enumeration_coherence(make_entry(id), opts));
    }
    out.push_back(check_enumeration_coherence(make_entry("torus", 3), opts));
    out.back().name += "_n3";
    for (int n = 1; n <= 3; ++n) out.push_back(check_hopf_sanity(n, opts));
    for (double t : {1.0, 2.0}) out.push_back(check_fd_convergence(t, opts));
    for (double t : {0.5, 1.0, 3.0}) out.push_back(check_fd_discrete(16, t, opts));
  }
  if (all || suite == Suite::bounds) {
    for (const char* id : {"hopf", "sphere4n3", "sphere15", "cp2n1"}) {
      for (int n : {0, 1, 2, 3}) {
        if ((n == 0) != (default_family_n(id) == 0)) continue;
        const auto e = n == 0 ? make_entry(id) : make_entry(id, n);
        out.push_back(check_sandwich(e, opts));
        out.back().name += n ? "_n" + std::to_string(n) : "";
        out.push_back(check_lambda1_envelope(e, opts));
        out.back().name += n ? "_n" + std::to_string(n) : "";
      }
    }
    for (auto [n, p] : {std::pair{3, 2}, {7, 4}, {15, 8}}) {
      out.push_back(check_round_sphere_tangency(n, p, opts));
    }
    for (int n = 1; n <= 3; ++n) out.push_back(check_q_dichotomy(n, opts));
    for (const auto& e : build_catalog()) {
      if (e.applicable) out.push_back(check_lower_bound_shape(e, opts));
    }
    for (const char* id : {"torus", "product"}) {
      out.push_back(check_negative_result(make_entry(id), opts));
    }
    for (int n = 2; n <= 5; ++n) {
      out.push_back(check_alt_dominates(make_entry("konishi", n), opts));
      out.back().name += "_n" + std::to_string(n);
    }
  }
  if (all || suite == Suite::stability) {
    for (const auto& e : build_catalog()) {
      if (!e.geometry.einstein) continue;
      out.push_back(check_einstein_consistency(e, opts));
      out.push_back(check_threshold_soundness(e, opts));
    }
    out.push_back(check_gamma_closed_forms(opts));
    out.push_back(check_exact_regions(opts));
  }
  return out;
}

}  // namespace cvspec
