#pragma once

#include <cstddef>
#include <string>

#include "efg/bivariate.hpp"
#include "efg/rational.hpp"
#include "efg/series.hpp"
#include "efg/weierstrass.hpp"
#include "efg/wire.hpp"

namespace efg {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassModel {
  Rational a1, a2, a3, a4, a6;

  /// y^2 = x^3 + A x + B.
  static WeierstrassModel short_form(const Rational& a, const Rational& b);

  Rational b2() const { return a1 * a1 + Rational(4) * a2; }
  Rational b4() const { return Rational(2) * a4 + a1 * a3; }
  Rational b6() const { return a3 * a3 + Rational(4) * a6; }
  Rational c4() const;
  Rational c6() const;
  Rational discriminant() const;

  bool is_integral() const;
  bool is_short() const { return a1.is_zero() && a2.is_zero() && a3.is_zero(); }
  void require_nonsingular() const;
  void require_integral() const;

  /// "[a1,a2,a3,a4,a6]"
  std::string id() const;

  friend bool operator==(const WeierstrassModel&, const WeierstrassModel&) = default;
};

struct ConvertedCurve {
  WeierstrassModel model;
  Integer scale;  // u
};

/// y^2 = 4x^3 - g2 x - g3  ->  y'^2 = x^3 - (g2/4) x - g3/4 with y = 2y',
/// then (x, y') -> (u^2 x, u^3 y') for the least u >= 1 that makes
/// A = -g2 u^4 / 4 and B = -g3 u^6 / 4 integral.
ConvertedCurve curve_convert(const CurveInvariants& inv);

/// w(z) = z^3 (1 + ...) solving
///   w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3   (mod z^order)
/// by fixed-point iteration.
TruncatedSeries formal_w_expansion(const WeierstrassModel& model, std::size_t order);
/// Right side minus w for the given series; O(z^order) for a true solution.
TruncatedSeries w_relation_residual(const WeierstrassModel& model, const TruncatedSeries& w);

/// x = z^-2 * x_unit, y = -z^-3 * y_unit for the parameter z = -x/y.
struct FormalXY {
  TruncatedSeries x_unit;
  TruncatedSeries y_unit;
};
FormalXY formal_xy(const TruncatedSeries& w);

/// omega = dx / (2y + a1 x + a3) written as omega(T) dT with omega(0) = 1.
TruncatedSeries invariant_differential(const WeierstrassModel& model, const FormalXY& xy);
/// Integral of omega from 0, truncated to omega's order.
TruncatedSeries formal_log(const TruncatedSeries& omega);
TruncatedSeries formal_exp(const TruncatedSeries& f_log);
/// Parameter of (x, -y - a1 x - a3): x / (y + a1 x + a3).
TruncatedSeries formal_inverse(const WeierstrassModel& model, const FormalXY& xy);

/// Chord construction: the line through the points with parameters X and Y
/// meets the curve again at z3(X, Y); the sum is the inverse of that point.
/// `w` must be exact through z^order.
BivariateSeries group_law_geometric(const WeierstrassModel& model, const TruncatedSeries& w,
                                    const TruncatedSeries& inverse, std::size_t order);
/// f_exp(f_log(X) + f_log(Y)) truncated to total degree `order`.
BivariateSeries group_law_exp_log(const TruncatedSeries& f_log, const TruncatedSeries& f_exp,
                                  std::size_t order);

struct FormalGroupData {
  WeierstrassModel model;
  std::size_t order = 0;
  TruncatedSeries w_series;  // order + 3
  FormalXY xy;
  TruncatedSeries omega;
  TruncatedSeries f_log;
  TruncatedSeries f_exp;
  TruncatedSeries inverse_series;
  BivariateSeries F_geom;
  BivariateSeries F_explog;
};

/// Builds every series above at truncation `order`. The two group laws are
/// skipped when `with_group_laws` is false (they dominate the cost).
FormalGroupData build_formal_group(const WeierstrassModel& model, std::size_t order,
                                   bool with_group_laws = true);

Json to_json(const WeierstrassModel& model);
Json to_json(const FormalGroupData& data);

}  // namespace efg
