#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cvspec/model.hpp"
#include "cvspec/rational.hpp"
#include "cvspec/yamabe.hpp"

namespace cvspec {

/// Which independent enumeration can regenerate an entry's joint spectrum.
enum class OracleKind { none, torus_lattice, circle_product, hopf };

std::string to_string(OracleKind k);
OracleKind oracle_kind_from_string(const std::string& s);

struct CatalogEntry {
  std::string id;       // stable lookup key, e.g. "hopf"
  int family_n = 0;     // family parameter n; 0 for entries without one
  SubmersionGeometry geometry;
  bool applicable = false;  // satisfies the lower-bound hypotheses
  bool round_sphere = false;  // (M, g) is an odd-dimensional round sphere
  std::vector<AffineBranch> exact_lambda1;  // λ_1(g_t) = min_i(A_i + B_i t^-2)
  std::optional<AffineBranch> alt_lower_bound;
  OracleKind oracle = OracleKind::none;
  std::vector<std::string> notes;
  std::map<std::string, Rational> rationals;

  bool has_exact() const { return !exact_lambda1.empty(); }

  /// Enumerated joint spectrum complete up to roughly `cutoff`; nullopt when
  /// the entry has no enumeration oracle.
  std::optional<JointSpectrum> joint_spectrum(double cutoff) const;

  bool operator==(const CatalogEntry&) const = default;
};

/// λ_1(g_t) when it is known, otherwise the best available bracket.
struct Lambda1Estimate {
  std::optional<double> exact;
  std::optional<double> lower;
  std::optional<double> upper;

  bool known() const { return exact.has_value(); }
};

/// Canonical entry ids in catalog order.
const std::vector<std::string>& catalog_ids();

/// Smallest admissible family parameter (0 for entries without one).
int default_family_n(const std::string& id);

/// Builds one entry. Throws std::invalid_argument for an unknown id or a
/// family parameter below the entry's minimum.
CatalogEntry make_entry(const std::string& id, std::optional<int> family_n = std::nullopt);

/// All ten entries at their smallest admissible parameter.
std::vector<CatalogEntry> build_catalog();

Lambda1Estimate entry_lambda1(const CatalogEntry& entry, double t);

/// λ_1(g) = λ_1 at t = 1 when known.
std::optional<double> entry_lambda1_at_one(const CatalogEntry& entry);

/// Throws std::invalid_argument for entries that are not Einstein or lack |A|^2.
StabilityReport entry_stability_report(const CatalogEntry& entry);

}  // namespace cvspec
