#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cvspec/catalog.hpp"

namespace cvspec::cli {

struct CurveRow {
  double t = 0.0;
  std::optional<double> lambda1_exact;
  std::optional<double> lower_bound;
  std::optional<double> upper_bound;
  std::optional<double> big_lambda1;
  std::optional<double> scalar_curv;
  std::string verdict = "unknown";
};

/// Geometric grid of `steps` points from t_min to t_max inclusive.
std::vector<double> geometric_t_grid(double t_min, double t_max, int steps);

std::vector<CurveRow> compute_curve(const CatalogEntry& entry, double t_min,
                                    double t_max, int steps);

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<CurveRow>& rows);
void write_json(std::ostream& os, const std::vector<CurveRow>& rows);
void write_svg(std::ostream& os, const CatalogEntry& entry, const std::vector<CurveRow>& rows);

std::string format_list(const std::vector<CatalogEntry>& entries);
std::string format_stability(const CatalogEntry& entry, bool json);

/// Full command-line entry point; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cvspec::cli
