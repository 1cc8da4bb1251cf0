#include "cvspec/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cvspec/bounds.hpp"
#include "cvspec/oracle.hpp"

namespace cvspec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPiSq = 4.0 * kPi * kPi;

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Vol of the unit round sphere S^m for odd m = 2j + 1: 2 π^{j+1} / j!.
double odd_sphere_volume(int m) {
  const int j = (m - 1) / 2;
  return 2.0 * std::pow(kPi, j + 1) / factorial(j);
}

struct EinsteinData {
  int n, p;
  long c_tilde, c, a_sq, s_fiber;
};

SubmersionGeometry einstein_geometry(const std::string& name, const EinsteinData& d) {
  SubmersionGeometry g;
  g.name = name;
  g.n = d.n;
  g.p = d.p;
  g.c_tilde = static_cast<double>(d.c_tilde);
  g.c = static_cast<double>(d.c);
  g.a_norm_sq = static_cast<double>(d.a_sq);
  g.s_fiber = static_cast<double>(d.s_fiber);
  g.s_base = static_cast<double>(d.n * d.c_tilde + d.a_sq - d.s_fiber);
  g.einstein = true;
  return g;
}

void fill_rationals(CatalogEntry& e) {
  const auto& g = e.geometry;
  const auto ct = Rational::from_integral(g.c_tilde);
  const auto c = Rational::from_integral(g.c);
  if (!e.applicable || !ct || !c) return;
  const Rational n(g.n);
  e.rationals["gamma"] = gamma_exact(g.n, g.p, *ct, *c);
  e.rationals["horizontal_floor"] = (*ct - *c) / (n + 1);
  e.rationals["lower_bound_t2_coeff"] =
      (n * n + 1) / (n * n - 1) * *ct + *c / (n + 1);
  if (const auto a = g.a_norm_sq ? Rational::from_integral(*g.a_norm_sq) : std::nullopt;
      a && a->num() != 0) {
    e.rationals["threshold_sq"] = e.rationals["gamma"] / *a;
  }
}

void require_family_n(const std::string& id, int n, int min_n) {
  if (n < min_n) {
    throw std::invalid_argument("entry '" + id + "' requires n >= " +
                                std::to_string(min_n));
  }
}

CatalogEntry finish(CatalogEntry e) {
  e.geometry = SubmersionGeometry::validated(std::move(e.geometry));
  e.applicable = e.geometry.satisfies_main_hypotheses();
  fill_rationals(e);
  return e;
}

}  // namespace

std::string to_string(OracleKind k) {
  switch (k) {
    case OracleKind::none:
      return "none";
    case OracleKind::torus_lattice:
      return "torus_lattice";
    case OracleKind::circle_product:
      return "circle_product";
    case OracleKind::hopf:
      return "hopf";
  }
  return "none";
}

OracleKind oracle_kind_from_string(const std::string& s) {
  if (s == "none") return OracleKind::none;
  if (s == "torus_lattice") return OracleKind::torus_lattice;
  if (s == "circle_product") return OracleKind::circle_product;
  if (s == "hopf") return OracleKind::hopf;
  throw std::invalid_argument("unknown oracle kind '" + s + "'");
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {
      "torus", "product", "hopf",      "sphere4n3", "sphere15",
      "cp2n1", "flag",    "kobayashi", "konishi",   "twistor"};
  return ids;
}

int default_family_n(const std::string& id) {
  if (id == "torus") return 2;
  if (id == "hopf" || id == "sphere4n3" || id == "cp2n1" || id == "kobayashi") return 1;
  if (id == "konishi" || id == "twistor") return 2;
  if (id == "product" || id == "sphere15" || id == "flag") return 0;
  throw std::invalid_argument("unknown catalog entry '" + id + "'");
}

CatalogEntry make_entry(const std::string& id, std::optional<int> family_n) {
  const int dflt = default_family_n(id);
  const int k = family_n.value_or(dflt);
  if (dflt == 0 && family_n && *family_n != 0) {
    throw std::invalid_argument("entry '" + id + "' takes no family parameter");
  }
  require_family_n(id, k, dflt);

  CatalogEntry e;
  e.id = id;
  e.family_n = k;

  if (id == "torus") {
    auto& g = e.geometry;
    g.name = "T^" + std::to_string(k) + " -> T^" + std::to_string(k - 1);
    g.n = k;
    g.p = k - 1;
    g.beta1 = kFourPiSq;
    g.a_norm_sq = 0.0;
    g.s_base = 0.0;
    g.s_fiber = 0.0;
    g.vol_m = 1.0;
    e.exact_lambda1 = {{kFourPiSq, 0.0}, {0.0, kFourPiSq}};
    e.oracle = OracleKind::torus_lattice;
    e.notes = {"flat: Ric = 0, so no c_tilde > 0 exists; lower bound does not apply",
               "Spec(T^n) = {4 pi^2 |y|^2 : y in Z^n}; Lambda_1 -> 0 as t -> infinity"};
  } else if (id == "product") {
    auto& g = e.geometry;
    g.name = "S^1 x S^1 -> S^1";
    g.n = 2;
    g.p = 1;
    g.beta1 = 1.0;
    g.a_norm_sq = 0.0;
    g.s_base = 0.0;
    g.s_fiber = 0.0;
    g.vol_m = kFourPiSq;
    e.exact_lambda1 = {{1.0, 0.0}, {0.0, 1.0}};
    e.oracle = OracleKind::circle_product;
    e.notes = {"Riemannian product of unit circles; c_tilde <= c, lower bound does not apply",
               "lambda_1(g_t) = lambda_1(F) t^-2 beyond T^2 = lambda_1(F)/lambda_1(B) = 1"};
  } else if (id == "hopf") {
    e.geometry = einstein_geometry(
        "S^1 -> S^" + std::to_string(2 * k + 1) + " -> CP^" + std::to_string(k),
        {2 * k + 1, 2 * k, 2L * k, 0, 2L * k, 0});
    e.geometry.beta1 = 4.0 * (k + 1);
    e.geometry.vol_m = odd_sphere_volume(2 * k + 1);
    e.round_sphere = true;
    e.exact_lambda1 = {{2.0 * k, 1.0}, {4.0 * (k + 1), 0.0}};
    e.oracle = OracleKind::hopf;
    e.notes = {"unit round sphere: Ric = 2n g; fiber is a unit circle so c = 0",
               "CP^n with sectional curvature in [1,4]: Ric = 2(n+1), beta_1 = 4(n+1)",
               "|A|^2 = S^B + S^F - n c_tilde = 4n(n+1) - 2n(2n+1) = 2n"};
  } else if (id == "sphere4n3") {
    e.geometry = einstein_geometry(
        "S^3 -> S^" + std::to_string(4 * k + 3) + " -> HP^" + std::to_string(k),
        {4 * k + 3, 4 * k, 4L * k + 2, 2, 12L * k, 6});
    e.geometry.beta1 = 8.0 * (k + 1);
    e.geometry.vol_m = odd_sphere_volume(4 * k + 3);
    e.round_sphere = true;
    e.exact_lambda1 = {{4.0 * k, 3.0}, {8.0 * (k + 1), 0.0}};
    e.notes = {"fiber S^3 of constant curvature 1: c = 2, S^F = 6",
               "HP^n: Ric = 4(n+2), S^B = 16n(n+2); |A|^2 = 12n from the Einstein identity"};
  } else if (id == "sphere15") {
    e.geometry = einstein_geometry("S^7 -> S^15 -> S^8(1/2)", {15, 8, 14, 6, 56, 42});
    e.geometry.beta1 = 32.0;
    e.geometry.vol_m = odd_sphere_volume(15);
    e.round_sphere = true;
    e.exact_lambda1 = {{8.0, 7.0}, {32.0, 0.0}};
    e.notes = {"fiber S^7 of curvature 1: c = 6, S^F = 42",
               "base S^8(1/2): curvature 4, S^B = 8*7*4 = 224; |A|^2 = 224 + 42 - 210 = 56"};
  } else if (id == "cp2n1") {
    e.geometry = einstein_geometry(
        "CP^1 -> CP^" + std::to_string(2 * k + 1) + " -> HP^" + std::to_string(k),
        {4 * k + 2, 4 * k, 4L * (k + 1), 4, 8L * k, 8});
    e.geometry.beta1 = 8.0 * (k + 1);
    e.geometry.vol_m = std::pow(kPi, 2 * k + 1) / factorial(2 * k + 1);
    e.exact_lambda1 = {{8.0 * k, 8.0}, {8.0 * (k + 1), 0.0}};
    e.notes = {"fiber CP^1 = S^2(1/2): sectional curvature 4, c = 4, S^F = 8",
               "c_tilde - c = 4n matches the constant term 4n/(4n+3) of the lower bound",
               "lambda_1(CP^{2n+1}) = lambda_1(HP^n) = 8(n+1), so lambda_1(g_t) = 8(n+1) for t <= 1"};
  } else if (id == "flag") {
    e.geometry = einstein_geometry("S^2 -> F(1,2) -> CP^2", {6, 4, 2, 1, 2, 2});
    e.notes = {"Kaehler-Einstein with Ric = 2g; fibers are 2-spheres of curvature 1 so c = 1",
               "beta_1 of the base is not available; no upper bound is recorded",
               "S^B = 12 from the Einstein identity"};
  } else if (id == "kobayashi") {
    e.geometry = einstein_geometry(
        "S^1 -> M^" + std::to_string(2 * k + 1) + " -> KE^" + std::to_string(2 * k),
        {2 * k + 1, 2 * k, 2L * k, 0, 2L * k, 0});
    e.notes = {"Sasaki-Einstein total space with Ric = 2n g over Kaehler-Einstein base with Ric = 2(n+1)",
               "beta_1 of the base depends on the base; no upper bound is recorded"};
  } else if (id == "konishi") {
    e.geometry = einstein_geometry(
        "S^3 -> M^" + std::to_string(4 * k + 3) + " -> QK^" + std::to_string(4 * k),
        {4 * k + 3, 4 * k, 4L * k + 2, 2, 12L * k, 6});
    e.alt_lower_bound = AffineBranch{8.0 * k, 8.0};
    e.notes = {"3-Sasakian total space with Ric = 4n+2 over quaternionic Kaehler base with Ric = 4n+8",
               "fiber of constant curvature 1: c = 2, S^F = 6",
               "for non-constant curvature lambda_1(g_t) >= 8(n + t^-2) for all t > 0"};
  } else if (id == "twistor") {
    e.geometry = einstein_geometry(
        "S^2(1/2) -> Z^" + std::to_string(4 * k + 2) + " -> QK^" + std::to_string(4 * k),
        {4 * k + 2, 4 * k, 4L * (k + 1), 4, 8L * k, 8});
    e.notes = {"Kaehler-Einstein twistor space with Ric = 4(n+1) over a base with Ric = 4(n+2)",
               "fiber S^2(1/2): sectional curvature 4, c = 4, S^F = 8",
               "beta_1 of the base is not available; no upper bound is recorded"};
  }
  return finish(std::move(e));
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& id : catalog_ids()) out.push_back(make_entry(id));
  return out;
}

std::optional<JointSpectrum> CatalogEntry::joint_spectrum(double cutoff) const {
  switch (oracle) {
    case OracleKind::none:
      return std::nullopt;
    case OracleKind::torus_lattice: {
      const int max_norm_sq = std::max(1, static_cast<int>(std::floor(cutoff / kFourPiSq)));
      return torus_joint_spectrum(geometry.n, {max_norm_sq});
    }
    case OracleKind::circle_product: {
      const int m_max = std::max(1, static_cast<int>(std::floor(std::sqrt(cutoff))));
      const auto circle = circle_spectrum(m_max);
      const double cut = static_cast<double>(m_max) * m_max;
      return product_joint_spectrum(circle, circle, cut);
    }
    case OracleKind::hopf: {
      int k_max = 2;
      while (static_cast<double>(k_max + 1) * (k_max + 1 + 2 * family_n) <= cutoff) ++k_max;
      return hopf_joint_spectrum(family_n, k_max);
    }
  }
  return std::nullopt;
}

std::optional<double> entry_lambda1_at_one(const CatalogEntry& entry) {
  if (entry.has_exact()) return min_branch(entry.exact_lambda1, 1.0);
  return std::nullopt;
}

Lambda1Estimate entry_lambda1(const CatalogEntry& entry, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("entry_lambda1: t must be positive");
  }
  Lambda1Estimate est;
  if (entry.has_exact()) {
    est.exact = min_branch(entry.exact_lambda1, t);
  } else if (entry.oracle != OracleKind::none) {
    try {
      const double cutoff = 256.0 * std::max(1.0, t * t);
      if (auto spec = entry.joint_spectrum(cutoff)) est.exact = lambda1_of_t(*spec, t);
    } catch (const InsufficientCutoff&) {
    }
  }

  auto raise = [&](double v) { est.lower = est.lower ? std::max(*est.lower, v) : v; };
  if (entry.applicable && t >= 1.0) raise(theorem_lower_bound(entry.geometry, t));
  if (entry.alt_lower_bound) raise((*entry.alt_lower_bound)(t));
  if (t <= 1.0) {
    if (const auto l1 = entry_lambda1_at_one(entry)) {
      raise(*l1);
    } else if (entry.applicable) {
      raise(lichnerowicz_obata_floor(entry.geometry.n, entry.geometry.c_tilde));
    }
  }
  est.upper = entry.geometry.beta1;
  return est;
}

StabilityReport entry_stability_report(const CatalogEntry& entry) {
  if (!entry.geometry.einstein || !entry.applicable) {
    throw std::invalid_argument("entry '" + entry.id +
                                "' is not an Einstein submersion satisfying the hypotheses");
  }
  if (!entry.geometry.a_norm_sq || !(*entry.geometry.a_norm_sq > 0.0)) {
    throw std::invalid_argument("entry '" + entry.id + "' has no positive |A|^2");
  }
  return make_stability_report(entry.geometry, entry.exact_lambda1, entry.alt_lower_bound);
}

}  // namespace cvspec
