#include "efg/weierstrass.hpp"

#include <algorithm>

#include "efg/errors.hpp"

namespace efg {

namespace {

Rational num(std::size_t n) { return Rational(static_cast<long>(n)); }

// Order M of the p expansion that makes z / f_E exact through z^max_index.
std::size_t wp_order_for(std::size_t max_index) { return std::max<std::size_t>(2, max_index / 2); }

}  // namespace

void CurveInvariants::require_nonsingular() const {
  if (discriminant().is_zero())
    throw SingularCurve("g2^3 - 27 g3^2 = 0 for (g2, g3) = (" + g2.str() + ", " + g3.str() + ")");
}

Rational WpExpansion::eisenstein(std::size_t n) const {
  return Rational(factorial(static_cast<unsigned>(2 * n))) * c(n) / Rational(2);
}

TruncatedSeries WpExpansion::scaled() const {
  TruncatedSeries s(2 * order() + 4);
  s[0] = 1;
  for (std::size_t n = 1; n <= order(); ++n) s[2 * n + 2] = c(n);
  return s;
}

TruncatedSeries WpExpansion::scaled_derivative() const {
  TruncatedSeries s(2 * order() + 4);
  s[0] = -2;
  for (std::size_t n = 1; n <= order(); ++n) s[2 * n + 2] = num(2 * n) * c(n);
  return s;
}

Rational LaurentCoeffs::at(int exponent) const {
  const int idx = exponent - lowest_exponent;
  if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return Rational();
  return coeffs[static_cast<std::size_t>(idx)];
}

bool LaurentCoeffs::all_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); });
}

WpExpansion wp_laurent(const CurveInvariants& inv, std::size_t order) {
  inv.require_nonsingular();
  order = std::max<std::size_t>(order, 2);
  WpExpansion wp{inv.g2, inv.g3, {}};
  wp.regular.reserve(order);
  wp.regular.push_back(inv.g2 / Rational(20));
  wp.regular.push_back(inv.g3 / Rational(28));
  for (std::size_t n = 3; n <= order; ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n - 2; ++k) acc += wp.c(k) * wp.c(n - 1 - k);
    wp.regular.push_back(Rational(3) * acc / (num(2 * n + 3) * num(n - 2)));
  }
  return wp;
}

WpPrimeExpansion wp_prime(const WpExpansion& wp) {
  WpPrimeExpansion d;
  d.regular.reserve(wp.order());
  for (std::size_t n = 1; n <= wp.order(); ++n) d.regular.push_back(num(2 * n) * wp.c(n));
  return d;
}

LaurentCoeffs wp_ode_residual(const WpExpansion& wp) {
  // z^6 (p'^2 - 4p^3 + g2 p + g3) = Q^2 - 4P^3 + g2 z^4 P + g3 z^6
  const TruncatedSeries p = wp.scaled();
  const TruncatedSeries q = wp.scaled_derivative();
  TruncatedSeries r = q * q - Rational(4) * (p * p * p) + wp.g2 * series_shift(p, 4);
  r = r + TruncatedSeries::monomial(r.order(), 6, wp.g3);

  LaurentCoeffs out{-6, {}};
  const std::size_t top = 2 * wp.order();  // exponent 2M - 6 after the z^-6 shift
  for (std::size_t m = 0; m <= top; ++m) out.coeffs.push_back(r[m]);
  return out;
}

LaurentCoeffs verify_wp_ode(const CurveInvariants& inv, std::size_t order) {
  return wp_ode_residual(wp_laurent(inv, order));
}

ZetaSigma zeta_sigma_series(const CurveInvariants& inv, std::size_t order) {
  const WpExpansion wp = wp_laurent(inv, order);
  const std::size_t m = wp.order();
  TruncatedSeries zeta(2 * m + 2);
  for (std::size_t n = 1; n <= m; ++n) zeta[2 * n + 1] = -wp.c(n) / num(2 * n + 1);
  const TruncatedSeries sigma_unit = series_exp(series_int(zeta));
  return {zeta, series_shift(sigma_unit.truncated(2 * m + 4), 1)};
}

TruncatedSeries wp_formal_exponential(const WpExpansion& wp) {
  // -2 p / p' = z * (-2 P / Q)
  const TruncatedSeries ratio = series_div(Rational(-2) * wp.scaled(), wp.scaled_derivative());
  return series_shift(ratio.truncated(ratio.order() + 1), 1);
}

std::string to_string(BHSource s) { return s == BHSource::genfun ? "genfun" : "eisenstein"; }

BHSequence hurwitz_bernoulli_genfun(const CurveInvariants& inv, std::size_t max_index) {
  const WpExpansion wp = wp_laurent(inv, wp_order_for(max_index));
  // z / f_E(z) = -Q / (2P)
  const TruncatedSeries gen = series_div(-wp.scaled_derivative(), Rational(2) * wp.scaled());
  BHSequence seq{BHSource::genfun, inv.g2, inv.g3, {}};
  for (std::size_t n = 0; n <= max_index; ++n)
    seq.values[n] = Rational(factorial(static_cast<unsigned>(n))) * gen.at(n);
  return seq;
}

BHSequence hurwitz_bernoulli_eisenstein(const CurveInvariants& inv, std::size_t max_index) {
  const WpExpansion wp = wp_laurent(inv, wp_order_for(max_index));
  BHSequence seq{BHSource::eisenstein, inv.g2, inv.g3, {}};
  for (std::size_t k = 1; k <= max_index; ++k) {
    if (k % 2 == 1) {
      seq.values[k] = 0;
    } else if (k >= 4) {
      const std::size_t n = (k - 2) / 2;  // k = 2n + 2
      seq.values[k] = num(2 * k) * wp.eisenstein(n);
    }
  }
  return seq;
}

std::vector<Rational> bernoulli_classical(std::size_t max_index) {
  // (e^T - 1) / T = sum T^k / (k + 1)!
  const std::size_t order = max_index + 1;
  TruncatedSeries quotient(order);
  for (std::size_t k = 0; k < order; ++k)
    quotient[k] = Rational(Integer(1), factorial(static_cast<unsigned>(k + 1)));
  const TruncatedSeries gen = series_recip(quotient);
  std::vector<Rational> b;
  b.reserve(order);
  for (std::size_t n = 0; n < order; ++n)
    b.push_back(Rational(factorial(static_cast<unsigned>(n))) * gen[n]);
  return b;
}

Json to_json(const BHSequence& seq) {
  Json values = Json::object();
  for (const auto& [k, v] : seq.values) values[std::to_string(k)] = v.str();
  return Json{{"source", to_string(seq.source)},
              {"g2", seq.g2.str()},
              {"g3", seq.g3.str()},
              {"values", std::move(values)}};
}

Json to_json(const WpExpansion& wp) {
  Json c = Json::array();
  Json g = Json::object();
  for (std::size_t n = 1; n <= wp.order(); ++n) {
    c.push_back(wp.c(n).str());
    g[std::to_string(2 * n + 2)] = wp.eisenstein(n).str();
  }
  return Json{{"g2", wp.g2.str()}, {"g3", wp.g3.str()}, {"regular_coeffs", std::move(c)},
              {"eisenstein", std::move(g)}};
}

}  // namespace efg
