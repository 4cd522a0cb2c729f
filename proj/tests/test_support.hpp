#pragma once

#include <random>
#include <vector>

#include <doctest.h>

#include "efg/bivariate.hpp"
#include "efg/rational.hpp"
#include "efg/series.hpp"

namespace efg::testing {

inline Rational q(const char* s) { return Rational::parse(s); }

/// Small random rationals for property tests; fixed seeds keep runs reproducible.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  Rational rational(int range = 9, int max_den = 6) {
    std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
    return Rational(Integer(num(rng_)), Integer(den(rng_)));
  }
  Rational nonzero_rational(int range = 9, int max_den = 6) {
    for (;;) {
      Rational r = rational(range, max_den);
      if (!r.is_zero()) return r;
    }
  }
  TruncatedSeries series(std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t n = 0; n < order; ++n) s[n] = rational();
    return s;
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

inline bool canonical(const Rational& r) {
  return r.denominator() > 0 && gcd(r.numerator(), r.denominator()) == 1;
}

inline bool all_canonical(const TruncatedSeries& s) {
  for (const auto& c : s.coeffs())
    if (!canonical(c)) return false;
  return true;
}

}  // namespace efg::testing
