#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "efg/rational.hpp"
#include "efg/series.hpp"
#include "efg/wire.hpp"

namespace efg {

/// Invariants of y^2 = 4x^3 - g2 x - g3.
struct CurveInvariants {
  Rational g2;
  Rational g3;

  Rational discriminant() const { return g2 * g2 * g2 - Rational(27) * g3 * g3; }
  /// Throws SingularCurve when the discriminant vanishes.
  void require_nonsingular() const;
};

/// Laurent data of the Weierstrass function:
///   p(z) = z^-2 + sum_{n=1}^{M} c_n z^{2n}
/// The pole term is implied; `regular[n - 1]` holds c_n.
struct WpExpansion {
  Rational g2;
  Rational g3;
  std::vector<Rational> regular;

  std::size_t order() const { return regular.size(); }
  const Rational& c(std::size_t n) const { return regular.at(n - 1); }
  /// G_{2n+2} = (2n)! c_n / 2.
  Rational eisenstein(std::size_t n) const;

  /// z^2 p(z) = 1 + sum c_n z^{2n+2}, exact modulo z^{2M+4}.
  TruncatedSeries scaled() const;
  /// z^3 p'(z) = -2 + sum 2n c_n z^{2n+2}, exact modulo z^{2M+4}.
  TruncatedSeries scaled_derivative() const;
};

/// Derivative p'(z) = -2 z^-3 + sum 2n c_n z^{2n-1}; `regular[n - 1]` is
/// the coefficient of z^{2n-1}.
struct WpPrimeExpansion {
  Rational pole{-2};
  std::vector<Rational> regular;
};

/// Coefficients of a Laurent series starting at z^lowest_exponent.
struct LaurentCoeffs {
  int lowest_exponent = 0;
  std::vector<Rational> coeffs;

  Rational at(int exponent) const;
  bool all_zero() const;
};

/// c_1 = g2/20, c_2 = g3/28 and for n >= 3
///   c_n = 3 / ((2n + 3)(n - 2)) * sum_{k=1}^{n-2} c_k c_{n-1-k}.
WpExpansion wp_laurent(const CurveInvariants& inv, std::size_t order);
WpPrimeExpansion wp_prime(const WpExpansion& wp);

/// p'^2 - (4 p^3 - g2 p - g3) for exponents -6 .. 2M - 6, taken from the
/// stored coefficients as they are (so corruption shows up).
LaurentCoeffs wp_ode_residual(const WpExpansion& wp);
LaurentCoeffs verify_wp_ode(const CurveInvariants& inv, std::size_t order);

struct ZetaSigma {
  /// zeta(z) - 1/z = -sum c_n z^{2n+1} / (2n + 1), order 2M + 2.
  TruncatedSeries zeta_regular;
  /// sigma(z) = z exp(integral of zeta_regular), order 2M + 4.
  TruncatedSeries sigma;
};
ZetaSigma zeta_sigma_series(const CurveInvariants& inv, std::size_t order);

/// The formal exponential -2 p(z) / p'(z) = z + 2 c_1 z^5 + 3 c_2 z^7 + ...,
/// exact modulo z^{2M+5}.
TruncatedSeries wp_formal_exponential(const WpExpansion& wp);

enum class BHSource { genfun, eisenstein };
std::string to_string(BHSource s);

/// Hurwitz-Bernoulli numbers keyed by index. The eisenstein source only
/// carries indices it defines (odd k, and even k >= 4).
struct BHSequence {
  BHSource source = BHSource::genfun;
  Rational g2;
  Rational g3;
  std::map<std::size_t, Rational> values;
};

/// BH_n = n! [z^n] z / f_E(z) for 0 <= n <= max_index, f_E = -2p/p'.
BHSequence hurwitz_bernoulli_genfun(const CurveInvariants& inv, std::size_t max_index);
/// BH_k = 2k G_k for even k >= 4 (zero for odd k), 0 <= k <= max_index.
BHSequence hurwitz_bernoulli_eisenstein(const CurveInvariants& inv, std::size_t max_index);

/// B_0 .. B_max_index from T / (e^T - 1).
std::vector<Rational> bernoulli_classical(std::size_t max_index);

Json to_json(const BHSequence& seq);
Json to_json(const WpExpansion& wp);

}  // namespace efg
