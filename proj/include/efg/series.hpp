#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "efg/rational.hpp"

namespace efg {

/// Dense univariate power series modulo T^N.
///
/// `coeffs()[n]` is the coefficient of T^n for 0 <= n < N; explicit zeros
/// are stored so the length always equals the truncation order. Binary
/// operations truncate to the smaller of the operand orders.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::size_t order) : coeffs_(order) {}
  /// Pads with zeros or drops terms so that the result has exactly `order` slots.
  TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);
  TruncatedSeries(std::size_t order, std::initializer_list<Rational> coeffs);

  static TruncatedSeries constant(std::size_t order, const Rational& c);
  static TruncatedSeries variable(std::size_t order);  // T
  static TruncatedSeries monomial(std::size_t order, std::size_t degree, const Rational& c = 1);

  std::size_t order() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
  /// Coefficient of T^n, or zero when n is beyond the truncation.
  Rational at(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(); }
  Rational& operator[](std::size_t n) { return coeffs_[n]; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient, or order() when all are zero.
  std::size_t valuation() const;
  bool is_zero() const { return valuation() == order(); }
  TruncatedSeries truncated(std::size_t order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_neg(const TruncatedSeries& a);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c);

/// Cauchy product. Large orders split the output coefficients across
/// OpenMP threads; every coefficient is summed in a fixed order, so the
/// result is identical to `series_mul_serial`.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul_serial(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse. Throws ZeroConstantTerm when a(0) = 0.
TruncatedSeries series_recip(const TruncatedSeries& a);
/// a / b, requires b(0) != 0.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// f(g(T)) by Horner evaluation. Throws NonzeroInnerConstant when g(0) != 0.
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Compositional inverse g with f(g(T)) = T = g(f(T)), solved one
/// coefficient at a time from the T^n coefficient of f(g). Throws
/// NotReversible unless f(0) = 0 and f'(0) != 0.
TruncatedSeries series_revert(const TruncatedSeries& f);

/// d/dT; the result has order N - 1.
TruncatedSeries series_diff(const TruncatedSeries& f);
/// Integral from 0; the result has order N + 1 (its T^N slot is determined by f).
TruncatedSeries series_int(const TruncatedSeries& f);

/// exp(h) for h(0) = 0 and log(a) for a(0) = 1.
TruncatedSeries series_exp(const TruncatedSeries& h);
TruncatedSeries series_log(const TruncatedSeries& a);

/// Multiply by T^k, keeping the order (top k terms fall off).
TruncatedSeries series_shift(const TruncatedSeries& a, std::size_t k);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return series_sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return series_neg(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }
inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) { return series_scale(a, c); }

}  // namespace efg
