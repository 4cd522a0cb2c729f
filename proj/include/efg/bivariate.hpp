#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

#include "efg/rational.hpp"
#include "efg/series.hpp"

namespace efg {

/// Exponent pair (i, j) of the monomial X^i Y^j.
using Bidegree = std::pair<std::size_t, std::size_t>;

/// Sparse power series in X, Y modulo all monomials of total degree >= N.
///
/// Only nonzero coefficients with i + j < N are stored; an absent key is
/// a zero coefficient.
class BivariateSeries {
 public:
  using Terms = std::map<Bidegree, Rational>;

  BivariateSeries() = default;
  explicit BivariateSeries(std::size_t order) : order_(order) {}

  static BivariateSeries constant(std::size_t order, const Rational& c);
  static BivariateSeries x(std::size_t order);
  static BivariateSeries y(std::size_t order);
  /// f(X) and f(Y) embedded as bivariate series; order is min(N_f, order).
  static BivariateSeries from_x(const TruncatedSeries& f, std::size_t order);
  static BivariateSeries from_y(const TruncatedSeries& f, std::size_t order);

  std::size_t order() const { return order_; }
  const Terms& terms() const { return terms_; }
  Rational coeff(std::size_t i, std::size_t j) const;
  /// Stores c at (i, j); zero values and out-of-range degrees are dropped.
  void set(std::size_t i, std::size_t j, const Rational& c);
  void add_to(std::size_t i, std::size_t j, const Rational& c);

  BivariateSeries truncated(std::size_t order) const;
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  std::size_t order_ = 0;
  Terms terms_;
};

BivariateSeries bivar_add(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries bivar_sub(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries bivar_scale(const BivariateSeries& a, const Rational& c);
BivariateSeries bivar_mul(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries bivar_recip(const BivariateSeries& a);

/// f(g(X, Y)) truncated to min(N_f, g's total degree). Throws
/// NonzeroInnerConstant when g(0, 0) != 0.
BivariateSeries bivar_compose_outer(const TruncatedSeries& f, const BivariateSeries& g);

/// F(Y, X).
BivariateSeries bivar_swap(const BivariateSeries& a);

/// F(a(T), b(T)) as a univariate series; needs a(0) = b(0) = 0.
TruncatedSeries bivar_substitute(const BivariateSeries& f, const TruncatedSeries& a,
                                 const TruncatedSeries& b);

/// First monomial (in key order) where the two series differ, if any.
/// Compares through the smaller of the two orders.
std::optional<Bidegree> first_difference(const BivariateSeries& a, const BivariateSeries& b);

inline BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) { return bivar_add(a, b); }
inline BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) { return bivar_sub(a, b); }
inline BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) { return bivar_mul(a, b); }

}  // namespace efg
