#include "cvspec/catalog_json.hpp"

#include <json.hpp>

namespace cvspec {

namespace {

using nlohmann::json;

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

json branch_json(const AffineBranch& b) { return {{"A", b.A}, {"B", b.B}}; }

AffineBranch branch_from(const json& j) {
  return {j.at("A").get<double>(), j.at("B").get<double>()};
}

json entry_json(const CatalogEntry& e) {
  const auto& g = e.geometry;
  json j;
  j["id"] = e.id;
  j["family_n"] = e.family_n;
  j["name"] = g.name;
  j["n"] = g.n;
  j["p"] = g.p;
  j["c_tilde"] = g.c_tilde;
  j["c"] = g.c;
  j["beta1"] = opt(g.beta1);
  j["a_norm_sq"] = opt(g.a_norm_sq);
  j["s_base"] = opt(g.s_base);
  j["s_fiber"] = opt(g.s_fiber);
  j["vol_m"] = opt(g.vol_m);
  j["einstein"] = g.einstein;
  j["applicable"] = e.applicable;
  j["round_sphere"] = e.round_sphere;
  j["exact_lambda1"] = json::array();
  for (const auto& b : e.exact_lambda1) j["exact_lambda1"].push_back(branch_json(b));
  j["alt_lower_bound"] =
      e.alt_lower_bound ? branch_json(*e.alt_lower_bound) : json(nullptr);
  j["oracle"] = to_string(e.oracle);
  j["notes"] = e.notes;
  json rats = json::object();
  for (const auto& [key, r] : e.rationals) {
    rats[key] = {{"num", r.num()}, {"den", r.den()}, {"value", r.to_double()}};
  }
  j["rationals"] = rats;
  return j;
}

CatalogEntry entry_from(const json& j) {
  CatalogEntry e;
  e.id = j.at("id").get<std::string>();
  e.family_n = j.at("family_n").get<int>();
  auto& g = e.geometry;
  g.name = j.at("name").get<std::string>();
  g.n = j.at("n").get<int>();
  g.p = j.at("p").get<int>();
  g.c_tilde = j.at("c_tilde").get<double>();
  g.c = j.at("c").get<double>();
  g.beta1 = opt_from(j, "beta1");
  g.a_norm_sq = opt_from(j, "a_norm_sq");
  g.s_base = opt_from(j, "s_base");
  g.s_fiber = opt_from(j, "s_fiber");
  g.vol_m = opt_from(j, "vol_m");
  g.einstein = j.at("einstein").get<bool>();
  g = SubmersionGeometry::validated(std::move(g));
  e.applicable = j.at("applicable").get<bool>();
  e.round_sphere = j.value("round_sphere", false);
  for (const auto& b : j.at("exact_lambda1")) e.exact_lambda1.push_back(branch_from(b));
  if (j.contains("alt_lower_bound") && !j.at("alt_lower_bound").is_null()) {
    e.alt_lower_bound = branch_from(j.at("alt_lower_bound"));
  }
  e.oracle = oracle_kind_from_string(j.value("oracle", std::string("none")));
  e.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("rationals")) {
    for (const auto& [key, r] : j.at("rationals").items()) {
      e.rationals[key] = Rational(r.at("num").get<std::int64_t>(),
                                  r.at("den").get<std::int64_t>());
    }
  }
  return e;
}

}  // namespace

std::string catalog_to_json(const std::vector<CatalogEntry>& entries, int indent) {
  json arr = json::array();
  for (const auto& e : entries) arr.push_back(entry_json(e));
  return arr.dump(indent);
}

std::vector<CatalogEntry> catalog_from_json(const std::string& text) {
  try {
    const json arr = json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("catalog JSON must be an array");
    std::vector<CatalogEntry> out;
    for (const auto& j : arr) out.push_back(entry_from(j));
    return out;
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed catalog JSON: ") + ex.what());
  }
}

}  // namespace cvspec
