#pragma once

#include <string>
#include <vector>

#include "cvspec/catalog.hpp"

namespace cvspec {

/// Serializes entries as a JSON array. Geometry fields are written under
/// their own names (absent optionals as null), together with
/// "exact_lambda1": [{"A":..,"B":..}], "applicable", "notes" and exact
/// rationals as {"num":..,"den":..}.
std::string catalog_to_json(const std::vector<CatalogEntry>& entries, int indent = 2);

/// Inverse of catalog_to_json. Throws std::invalid_argument on malformed input.
std::vector<CatalogEntry> catalog_from_json(const std::string& text);

}  // namespace cvspec
