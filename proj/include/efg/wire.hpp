#pragma once

#include <json.hpp>

#include "efg/bivariate.hpp"
#include "efg/rational.hpp"
#include "efg/series.hpp"

namespace efg {

using Json = nlohmann::json;

// Wire format shared by every report:
//   Rational          "num/den" ("num" when den = 1)
//   TruncatedSeries   {"truncation": N, "coeffs": ["c0", "c1", ...]}
//   BivariateSeries   {"truncation": N, "coeffs": [[i, j, "c"], ...]}  (sorted by (i, j))
Json to_json(const Rational& r);
Json to_json(const TruncatedSeries& s);
Json to_json(const BivariateSeries& s);

Rational rational_from_json(const Json& j);
TruncatedSeries series_from_json(const Json& j);
BivariateSeries bivariate_from_json(const Json& j);

}  // namespace efg
