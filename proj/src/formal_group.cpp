#include "efg/formal_group.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "efg/errors.hpp"

namespace efg {

WeierstrassModel WeierstrassModel::short_form(const Rational& a, const Rational& b) {
  return {0, 0, 0, a, b};
}

Rational WeierstrassModel::c4() const { return b2() * b2() - Rational(24) * b4(); }

Rational WeierstrassModel::c6() const {
  return -(b2() * b2() * b2()) + Rational(36) * b2() * b4() - Rational(216) * b6();
}

Rational WeierstrassModel::discriminant() const {
  const Rational c = c4();
  const Rational d = c6();
  return (c * c * c - d * d) / Rational(1728);
}

bool WeierstrassModel::is_integral() const {
  return a1.is_integer() && a2.is_integer() && a3.is_integer() && a4.is_integer() &&
         a6.is_integer();
}

void WeierstrassModel::require_nonsingular() const {
  if (discriminant().is_zero()) throw SingularCurve("discriminant of " + id() + " is 0");
}

void WeierstrassModel::require_integral() const {
  if (!is_integral()) throw NonIntegralModel(id() + " has non-integral coefficients");
}

std::string WeierstrassModel::id() const {
  return "[" + a1.str() + "," + a2.str() + "," + a3.str() + "," + a4.str() + "," + a6.str() + "]";
}

namespace {

// Trial division; denominators of user-supplied invariants are small.
std::map<Integer, unsigned> factor(Integer n) {
  std::map<Integer, unsigned> f;
  for (Integer p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++f[p];
    }
  if (n > 1) ++f[n];
  return f;
}

// Smallest u >= 1 with d | u^e for each (d, e).
Integer least_clearing_scale(const std::vector<std::pair<Integer, unsigned>>& needs) {
  std::map<Integer, unsigned> exponent;
  for (const auto& [d, e] : needs)
    for (const auto& [p, v] : factor(d)) exponent[p] = std::max(exponent[p], (v + e - 1) / e);
  Integer u = 1;
  for (const auto& [p, k] : exponent)
    for (unsigned i = 0; i < k; ++i) u *= p;
  return u;
}

}  // namespace

ConvertedCurve curve_convert(const CurveInvariants& inv) {
  inv.require_nonsingular();
  const Rational a0 = -inv.g2 / Rational(4);
  const Rational b0 = -inv.g3 / Rational(4);
  const Integer u = least_clearing_scale({{a0.denominator(), 4}, {b0.denominator(), 6}});
  const Rational ru(u);
  return {WeierstrassModel::short_form(a0 * pow(ru, 4), b0 * pow(ru, 6)), u};
}

TruncatedSeries w_relation_residual(const WeierstrassModel& m, const TruncatedSeries& w) {
  const std::size_t order = w.order();
  const TruncatedSeries w2 = w * w;
  TruncatedSeries rhs = TruncatedSeries::monomial(order, 3);
  rhs = rhs + m.a1 * series_shift(w, 1) + m.a2 * series_shift(w, 2) + m.a3 * w2 +
        m.a4 * series_shift(w2, 1) + m.a6 * (w2 * w);
  return rhs - w;
}

TruncatedSeries formal_w_expansion(const WeierstrassModel& model, std::size_t order) {
  model.require_nonsingular();
  TruncatedSeries w = TruncatedSeries::monomial(order, 3);
  // each round fixes at least one more coefficient
  for (std::size_t round = 0; round <= order; ++round) {
    TruncatedSeries next = w + w_relation_residual(model, w);
    if (next == w) break;
    w = std::move(next);
  }
  return w;
}

FormalXY formal_xy(const TruncatedSeries& w) {
  const std::size_t order = w.order() >= 3 ? w.order() - 3 : 0;
  TruncatedSeries unit(order);
  for (std::size_t n = 0; n < order; ++n) unit[n] = w[n + 3];
  const TruncatedSeries inv = series_recip(unit);
  return {inv, inv};
}

TruncatedSeries invariant_differential(const WeierstrassModel& model, const FormalXY& xy) {
  // dx/dz = z^-3 (-2U + z U'),  2y + a1 x + a3 = z^-3 (-2V + a1 z U + a3 z^3)
  const TruncatedSeries& u = xy.x_unit;
  const TruncatedSeries& v = xy.y_unit;
  TruncatedSeries z_du(u.order());
  for (std::size_t n = 1; n < u.order(); ++n) z_du[n] = Rational(static_cast<long>(n)) * u[n];
  const TruncatedSeries numer = Rational(-2) * u + z_du;
  const TruncatedSeries denom = Rational(-2) * v + model.a1 * series_shift(u, 1) +
                                TruncatedSeries::monomial(u.order(), 3, model.a3);
  return series_div(numer, denom);
}

TruncatedSeries formal_log(const TruncatedSeries& omega) {
  return series_int(omega).truncated(omega.order());
}

TruncatedSeries formal_exp(const TruncatedSeries& f_log) { return series_revert(f_log); }

TruncatedSeries formal_inverse(const WeierstrassModel& model, const FormalXY& xy) {
  // x / (y + a1 x + a3) = z U / (-V + a1 z U + a3 z^3)
  const TruncatedSeries& u = xy.x_unit;
  const TruncatedSeries denom = -xy.y_unit + model.a1 * series_shift(u, 1) +
                                TruncatedSeries::monomial(u.order(), 3, model.a3);
  return series_shift(series_div(u, denom), 1);
}

BivariateSeries group_law_geometric(const WeierstrassModel& m, const TruncatedSeries& w,
                                    const TruncatedSeries& inverse, std::size_t order) {
  // slope (w(Y) - w(X)) / (Y - X) as the divided difference sum_k w_k sum_{a+b=k-1} X^a Y^b
  BivariateSeries lambda(order);
  for (std::size_t k = 1; k <= order && k < w.order(); ++k) {
    if (w[k].is_zero()) continue;
    for (std::size_t a = 0; a < k; ++a) lambda.set(a, k - 1 - a, w[k]);
  }
  const BivariateSeries x = BivariateSeries::x(order);
  const BivariateSeries y = BivariateSeries::y(order);
  const BivariateSeries nu = BivariateSeries::from_x(w, order) - lambda * x;

  // Substituting w = lambda z + nu into the w relation gives a cubic in z with
  //   [z^3] = 1 + a2 l + a4 l^2 + a6 l^3,
  //   [z^2] = a1 l + a2 nu + a3 l^2 + 2 a4 l nu + 3 a6 l^2 nu,
  // whose three roots are X, Y and z3.
  const BivariateSeries l2 = lambda * lambda;
  const BivariateSeries lead = BivariateSeries::constant(order, 1) + bivar_scale(lambda, m.a2) +
                               bivar_scale(l2, m.a4) + bivar_scale(l2 * lambda, m.a6);
  const BivariateSeries next = bivar_scale(lambda, m.a1) + bivar_scale(nu, m.a2) +
                               bivar_scale(l2, m.a3) + bivar_scale(lambda * nu, Rational(2) * m.a4) +
                               bivar_scale(l2 * nu, Rational(3) * m.a6);
  const BivariateSeries z3 = bivar_scale(x + y + next * bivar_recip(lead), -1);
  return bivar_compose_outer(inverse, z3);
}

BivariateSeries group_law_exp_log(const TruncatedSeries& f_log, const TruncatedSeries& f_exp,
                                  std::size_t order) {
  const BivariateSeries sum =
      BivariateSeries::from_x(f_log, order) + BivariateSeries::from_y(f_log, order);
  return bivar_compose_outer(f_exp, sum);
}

FormalGroupData build_formal_group(const WeierstrassModel& model, std::size_t order,
                                   bool with_group_laws) {
  FormalGroupData d;
  d.model = model;
  d.order = order;
  d.w_series = formal_w_expansion(model, order + 3);
  d.xy = formal_xy(d.w_series);
  d.omega = invariant_differential(model, d.xy);
  d.f_log = formal_log(d.omega);
  d.f_exp = formal_exp(d.f_log);
  d.inverse_series = formal_inverse(model, d.xy).truncated(order);
  if (with_group_laws) {
    d.F_geom = group_law_geometric(model, d.w_series, d.inverse_series, order);
    d.F_explog = group_law_exp_log(d.f_log, d.f_exp, order);
  } else {
    d.F_geom = BivariateSeries(order);
    d.F_explog = BivariateSeries(order);
  }
  return d;
}

Json to_json(const WeierstrassModel& m) {
  return Json{{"a1", m.a1.str()}, {"a2", m.a2.str()}, {"a3", m.a3.str()},
              {"a4", m.a4.str()}, {"a6", m.a6.str()}, {"discriminant", m.discriminant().str()}};
}

Json to_json(const FormalGroupData& d) {
  return Json{{"model", to_json(d.model)},
              {"truncation", d.order},
              {"w", to_json(d.w_series)},
              {"x_unit", to_json(d.xy.x_unit)},
              {"y_unit", to_json(d.xy.y_unit)},
              {"omega", to_json(d.omega)},
              {"f_log", to_json(d.f_log)},
              {"f_exp", to_json(d.f_exp)},
              {"inverse", to_json(d.inverse_series)},
              {"F_geom", to_json(d.F_geom)},
              {"F_explog", to_json(d.F_explog)}};
}

}  // namespace efg
