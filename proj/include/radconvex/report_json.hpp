#pragma once

#include <json.hpp>

#include "radconvex/radical.hpp"
#include "radconvex/reports.hpp"

namespace radconvex {

// JSON views of the report types. Field names are lower_snake_case;
// ordered_json keeps emission order deterministic for byte-stable output.
nlohmann::ordered_json to_json(const InequalityReport& r);
nlohmann::ordered_json to_json(const IntegralReport& r);
nlohmann::ordered_json to_json(const RadicalProfile& r);
nlohmann::ordered_json to_json(const ConvexityVerdict& v);

}  // namespace radconvex
