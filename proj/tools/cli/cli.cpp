#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cvspec/bounds.hpp"
#include "cvspec/catalog_json.hpp"
#include "cvspec/verify.hpp"
#include "cvspec/yamabe.hpp"

namespace cvspec::cli {

namespace {

using nlohmann::json;

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string opt_text(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string("null");
}

std::optional<StabilityReport> try_report(const CatalogEntry& entry) {
  const auto& g = entry.geometry;
  if (!g.einstein || !entry.applicable || !g.a_norm_sq || !(*g.a_norm_sq > 0.0)) {
    return std::nullopt;
  }
  return entry_stability_report(entry);
}

std::vector<double> region_boundaries(const StabilityRegion& region) {
  std::vector<double> pts;
  for (const auto& iv : region.stable) {
    if (iv.lo > 0.0) pts.push_back(iv.lo);
    if (std::isfinite(iv.hi)) pts.push_back(iv.hi);
  }
  pts.insert(pts.end(), region.degenerate_points.begin(), region.degenerate_points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, b); }),
            pts.end());
  return pts;
}

json region_json(const StabilityRegion& region) {
  json iv = json::array();
  for (const auto& s : region.stable) {
    iv.push_back({{"lo", s.lo},
                  {"hi", std::isinf(s.hi) ? json(nullptr) : json(s.hi)},
                  {"lo_open", s.lo_open},
                  {"hi_open", s.hi_open}});
  }
  return {{"description", region.describe()},
          {"intervals", iv},
          {"degenerate_points", region.degenerate_points},
          {"boundary_points", region_boundaries(region)}};
}

CatalogEntry lookup(const std::string& id, int n, bool has_n) {
  return has_n ? make_entry(id, n) : make_entry(id);
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<double> geometric_t_grid(double t_min, double t_max, int steps) {
  if (!(t_min > 0.0) || !std::isfinite(t_min) || !std::isfinite(t_max)) {
    throw std::invalid_argument("t-min must be a positive finite number");
  }
  if (!(t_max > t_min)) throw std::invalid_argument("t-max must exceed t-min");
  if (steps < 2) throw std::invalid_argument("steps must be at least 2");
  std::vector<double> out(steps);
  const double ratio = std::log(t_max / t_min);
  for (int i = 0; i < steps; ++i) {
    out[i] = t_min * std::exp(ratio * i / (steps - 1));
  }
  out.front() = t_min;
  out.back() = t_max;
  return out;
}

std::vector<CurveRow> compute_curve(const CatalogEntry& entry, double t_min,
                                    double t_max, int steps) {
  const auto grid = geometric_t_grid(t_min, t_max, steps);
  const auto& g = entry.geometry;
  const auto report = try_report(entry);
  const bool has_scalar = g.a_norm_sq.has_value() && g.base_scalar().has_value();

  std::vector<CurveRow> rows;
  rows.reserve(grid.size());
  for (double t : grid) {
    CurveRow row;
    row.t = t;
    const auto est = entry_lambda1(entry, t);
    row.lambda1_exact = est.exact;
    row.lower_bound = est.lower;
    row.upper_bound = est.upper;
    if (est.exact && g.vol_m) {
      row.big_lambda1 =
          scale_invariant_lambda1(*est.exact, volume_of_t(*g.vol_m, g.n, g.p, t), g.n);
    }
    if (has_scalar) row.scalar_curv = oneill_scalar(g, t);
    if (report) {
      row.verdict = to_string(report->verdict(t));
    } else if (g.n >= 3 && est.exact && row.scalar_curv) {
      const double gap = jacobi_gap(g.n, *est.exact, *row.scalar_curv);
      row.verdict = to_string(classify_gap(gap, std::max(1.0, std::abs(*row.scalar_curv))));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
  os << "t,lambda1,lower,upper,Lambda1,scalar,verdict\n";
  for (const auto& r : rows) {
    os << format_number(r.t) << ',' << opt_text(r.lambda1_exact) << ','
       << opt_text(r.lower_bound) << ',' << opt_text(r.upper_bound) << ','
       << opt_text(r.big_lambda1) << ',' << opt_text(r.scalar_curv) << ',' << r.verdict
       << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<CurveRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"t", r.t},
                   {"lambda1", opt_json(r.lambda1_exact)},
                   {"lower", opt_json(r.lower_bound)},
                   {"upper", opt_json(r.upper_bound)},
                   {"Lambda1", opt_json(r.big_lambda1)},
                   {"scalar", opt_json(r.scalar_curv)},
                   {"verdict", r.verdict}});
  }
  os << arr.dump(2) << '\n';
}

void write_svg(std::ostream& os, const CatalogEntry& entry, const std::vector<CurveRow>& rows) {
  constexpr double W = 720, H = 440, L = 70, R = 160, T = 40, B = 50;
  struct Series {
    const char* label;
    const char* color;
    std::optional<double> CurveRow::*field;
  };
  const Series series[] = {{"lambda1", "#1f77b4", &CurveRow::lambda1_exact},
                           {"lower", "#2ca02c", &CurveRow::lower_bound},
                           {"upper", "#d62728", &CurveRow::upper_bound}};

  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -ymin;
  for (const auto& r : rows) {
    for (const auto& s : series) {
      if (const auto& v = r.*(s.field)) {
        ymin = std::min(ymin, *v);
        ymax = std::max(ymax, *v);
      }
    }
  }
  if (!std::isfinite(ymin)) ymin = 0.0, ymax = 1.0;
  if (ymax - ymin < 1e-12) ymin -= 0.5, ymax += 0.5;
  const double lx0 = std::log(rows.front().t), lx1 = std::log(rows.back().t);
  auto px = [&](double t) { return L + (std::log(t) - lx0) / (lx1 - lx0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << L << "\" y=\"24\" font-size=\"14\">" << entry.id << ": "
     << entry.geometry.name << "</text>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\""
     << H - B << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << (W - R + L) / 2 << "\" y=\"" << H - 12 << "\">t (log scale)</text>\n";
  for (double t : {rows.front().t, rows.back().t}) {
    os << "<text x=\"" << px(t) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\">"
       << format_number(t) << "</text>\n";
  }
  for (double y : {ymin, ymax}) {
    os << "<text x=\"" << L - 6 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\">"
       << format_number(y) << "</text>\n";
  }
  double legend_y = T + 10;
  for (const auto& s : series) {
    std::ostringstream pts;
    pts << std::fixed << std::setprecision(2);
    bool any = false;
    for (const auto& r : rows) {
      if (const auto& v = r.*(s.field)) {
        pts << px(r.t) << ',' << py(*v) << ' ';
        any = true;
      }
    }
    if (!any) continue;
    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\""
       << pts.str() << "\"/>\n";
    os << "<line x1=\"" << W - R + 15 << "\" y1=\"" << legend_y << "\" x2=\"" << W - R + 40
       << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << W - R + 46 << "\" y=\"" << legend_y + 4 << "\">" << s.label
       << "</text>\n";
    legend_y += 18;
  }
  os << "</svg>\n";
}

std::string format_list(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  os << std::left << std::setw(11) << "id" << std::setw(4) << "n" << std::setw(34) << "fibration"
     << std::setw(5) << "dim" << std::setw(5) << "p" << std::setw(10) << "c~" << std::setw(6)
     << "c" << std::setw(20) << "beta1" << std::setw(8) << "|A|^2" << std::setw(6) << "thm"
     << std::setw(7) << "exact" << "oracle\n";
  for (const auto& e : entries) {
    const auto& g = e.geometry;
    os << std::setw(11) << e.id << std::setw(4) << (e.family_n ? std::to_string(e.family_n) : "-")
       << std::setw(34) << g.name << std::setw(5) << g.n << std::setw(5) << g.p << std::setw(10)
       << format_number(g.c_tilde) << std::setw(6) << format_number(g.c) << std::setw(20)
       << (g.beta1 ? format_number(*g.beta1) : "-") << std::setw(8)
       << (g.a_norm_sq ? format_number(*g.a_norm_sq) : "-") << std::setw(6)
       << (e.applicable ? "yes" : "no") << std::setw(7) << (e.has_exact() ? "yes" : "no")
       << to_string(e.oracle) << '\n';
  }
  return os.str();
}

std::string format_stability(const CatalogEntry& entry, bool as_json) {
  const auto rep = entry_stability_report(entry);
  const auto& g = entry.geometry;
  const double ratio_root = std::sqrt(rep.gamma_value / *g.a_norm_sq);
  const auto gamma_rat = entry.rationals.find("gamma");

  if (as_json) {
    json j = {{"id", entry.id},
              {"family_n", entry.family_n},
              {"name", g.name},
              {"gamma", rep.gamma_value},
              {"gamma_rational", nullptr},
              {"sqrt_gamma_over_a_norm_sq", ratio_root},
              {"threshold", rep.threshold_t},
              {"exact_region", nullptr},
              {"guaranteed_region", nullptr}};
    if (gamma_rat != entry.rationals.end()) j["gamma_rational"] = gamma_rat->second.str();
    if (rep.exact_region) j["exact_region"] = region_json(*rep.exact_region);
    if (rep.guaranteed_region) j["guaranteed_region"] = region_json(*rep.guaranteed_region);
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "entry: " << entry.id;
  if (entry.family_n) os << " (n = " << entry.family_n << ")";
  os << "  " << g.name << '\n';
  os << "Gamma = ";
  if (gamma_rat != entry.rationals.end() && gamma_rat->second.str() != format_number(rep.gamma_value)) {
    os << gamma_rat->second.str() << " = ";
  }
  os << format_number(rep.gamma_value) << '\n';
  os << "sqrt(Gamma/|A|^2) = " << format_number(ratio_root) << '\n';
  os << "threshold: stable for all t >= " << format_number(rep.threshold_t) << '\n';
  if (rep.exact_region) {
    os << "exact region: " << rep.exact_region->describe() << '\n';
    os << "boundary points:";
    for (double b : region_boundaries(*rep.exact_region)) os << ' ' << format_number(b);
    os << '\n';
  }
  if (rep.guaranteed_region) {
    os << "guaranteed region: " << rep.guaranteed_region->describe() << '\n';
  }
  return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra and Yamabe stability of canonical variations"};
  app.name("cvspec");
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List catalog entries");
  bool list_json = false;
  std::string filter;
  list->add_flag("--json", list_json, "Print the catalog as JSON");
  list->add_option("--filter", filter, "Restrict the listing")
      ->check(CLI::IsMember({"applicable"}));

  auto* curve = app.add_subcommand("curve", "Tabulate lambda_1 and bounds along t");
  std::string curve_id, format = "csv", out_path;
  int curve_n = 0, steps = 0;
  double t_min = 0.0, t_max = 0.0;
  curve->add_option("--entry", curve_id, "Catalog entry id")->required();
  auto* curve_n_opt = curve->add_option("--n", curve_n, "Family parameter");
  curve->add_option("--t-min", t_min, "Smallest t")->required();
  curve->add_option("--t-max", t_max, "Largest t")->required();
  curve->add_option("--steps", steps, "Number of grid points")->required();
  curve->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  curve->add_option("--out", out_path, "Output file ('-' for stdout)")->required();

  auto* stab = app.add_subcommand("stability", "Yamabe stability report");
  std::string stab_id;
  int stab_n = 0;
  bool stab_json = false;
  stab->add_option("--entry", stab_id, "Catalog entry id")->required();
  auto* stab_n_opt = stab->add_option("--n", stab_n, "Family parameter");
  stab->add_flag("--json", stab_json, "Print the report as JSON");

  auto* verify = app.add_subcommand("verify", "Run the invariant checks");
  std::string suite_name = "all";
  bool verify_json = false;
  verify->add_option("--suite", suite_name, "Which checks to run")
      ->check(CLI::IsMember({"all", "oracles", "bounds", "stability"}));
  verify->add_flag("--json", verify_json, "Print a JSON summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (list->parsed()) {
      auto entries = build_catalog();
      if (!filter.empty()) {
        std::erase_if(entries, [](const CatalogEntry& e) { return !e.applicable; });
      }
      out << (list_json ? catalog_to_json(entries) + "\n" : format_list(entries));
      return 0;
    }

    if (curve->parsed()) {
      const auto entry = lookup(curve_id, curve_n, curve_n_opt->count() > 0);
      const auto rows = compute_curve(entry, t_min, t_max, steps);
      std::ofstream file;
      std::ostream* dst = &out;
      if (out_path != "-") {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open '" + out_path + "' for writing");
        dst = &file;
      }
      dst->imbue(std::locale::classic());
      if (format == "csv") {
        write_csv(*dst, rows);
      } else if (format == "json") {
        write_json(*dst, rows);
      } else {
        write_svg(*dst, entry, rows);
      }
      return 0;
    }

    if (stab->parsed()) {
      const auto entry = lookup(stab_id, stab_n, stab_n_opt->count() > 0);
      out << format_stability(entry, stab_json);
      return 0;
    }

    if (verify->parsed()) {
      const auto opts = VerifyOptions::from_env();
      const auto results = run_suite(suite_from_string(suite_name), opts);
      std::vector<std::string> failed;
      for (const auto& r : results) {
        if (!r.passed) failed.push_back(r.suite + "/" + r.name);
      }
      if (verify_json) {
        json checks = json::array();
        for (const auto& r : results) {
          checks.push_back({{"suite", r.suite},
                            {"name", r.name},
                            {"passed", r.passed},
                            {"detail", r.detail}});
        }
        out << json{{"suite", suite_name},
                    {"passed", failed.empty()},
                    {"total", results.size()},
                    {"failed", failed},
                    {"checks", checks}}
                   .dump(2)
            << '\n';
      } else {
        for (const auto& r : results) {
          out << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name;
          if (!r.detail.empty()) out << "  " << r.detail;
          out << '\n';
        }
        out << results.size() - failed.size() << '/' << results.size() << " checks passed\n";
      }
      for (const auto& f : failed) err << "failed: " << f << '\n';
      return failed.empty() ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace cvspec::cli
