#include "efg/wire.hpp"

#include "efg/errors.hpp"

namespace efg {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  return Json{{"truncation", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const BivariateSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [k, c] : s.terms()) coeffs.push_back(Json::array({k.first, k.second, c.str()}));
  return Json{{"truncation", s.order()}, {"coeffs", std::move(coeffs)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

TruncatedSeries series_from_json(const Json& j) {
  try {
    const auto order = j.at("truncation").get<std::size_t>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    if (coeffs.size() != order) throw ParseError("coefficient count != truncation");
    return TruncatedSeries(order, std::move(coeffs));
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

BivariateSeries bivariate_from_json(const Json& j) {
  try {
    BivariateSeries s(j.at("truncation").get<std::size_t>());
    for (const auto& t : j.at("coeffs")) {
      const auto i = t.at(0).get<std::size_t>();
      const auto k = t.at(1).get<std::size_t>();
      if (i + k >= s.order()) throw ParseError("term beyond truncation");
      s.set(i, k, rational_from_json(t.at(2)));
    }
    return s;
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace efg
