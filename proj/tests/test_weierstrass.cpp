#include "test_support.hpp"

#include "efg/errors.hpp"
#include "efg/weierstrass.hpp"

using namespace efg;
using efg::testing::q;

namespace {

CurveInvariants random_curve(efg::testing::Gen& gen) {
  for (;;) {
    CurveInvariants inv{gen.rational(), gen.rational()};
    if (!inv.discriminant().is_zero()) return inv;
  }
}

// c_n from p'' = 6 p^2 - g2/2, matched at z^{2n-2}:
//   (2n(2n-1) - 12) c_n = 6 sum_{j+k=n-1} c_j c_k - [n = 1] g2/2
// The factor vanishes at n = 2; there c_2 = g3/28 is the integration constant.
std::vector<Rational> wp_by_second_order_ode(const CurveInvariants& inv, std::size_t m) {
  std::vector<Rational> c(m + 1);
  c[1] = inv.g2 / Rational(20);  // 2 c_1 = 12 c_1 - g2/2
  for (std::size_t n = 2; n <= m; ++n) {
    Rational s;
    for (std::size_t j = 1; j + 1 < n; ++j) s += c[j] * c[n - 1 - j];
    const auto lhs = static_cast<long>(2 * n * (2 * n - 1)) - 12;
    c[n] = n == 2 ? inv.g3 / Rational(28) : Rational(6) * s / Rational(lhs);
  }
  return c;
}

}  // namespace

TEST_CASE("wp_laurent leading coefficients") {
  const CurveInvariants inv{q("3/2"), q("-5/7")};
  const WpExpansion wp = wp_laurent(inv, 2);
  CHECK(wp.c(1) == inv.g2 / Rational(20));
  CHECK(wp.c(2) == inv.g3 / Rational(28));
  CHECK(wp_laurent(inv, 3).c(3) == inv.g2 * inv.g2 / Rational(1200));
  CHECK_THROWS_AS(wp_laurent({0, 0}, 4), SingularCurve);
  CHECK_THROWS_AS(wp_laurent({3, 1}, 4), SingularCurve);  // 27 - 27 = 0
}

TEST_CASE("wp_laurent matches the second-order ODE oracle") {
  efg::testing::Gen gen(8);
  for (int trial = 0; trial < 10; ++trial) {
    const CurveInvariants inv = random_curve(gen);
    const WpExpansion wp = wp_laurent(inv, 12);
    const auto oracle = wp_by_second_order_ode(inv, 12);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(wp.c(n) == oracle[n]);
  }
}

TEST_CASE("Eisenstein coefficients") {
  const WpExpansion wp = wp_laurent({q("20"), q("28")}, 3);
  CHECK(wp.eisenstein(1) == Rational(1));   // 2! c_1 / 2
  CHECK(wp.eisenstein(2) == Rational(12));  // 4! c_2 / 2
}

TEST_CASE("wp_prime") {
  const CurveInvariants inv{q("2/3"), q("7")};
  const WpPrimeExpansion d = wp_prime(wp_laurent(inv, 4));
  CHECK(d.pole == Rational(-2));
  CHECK(d.regular[0] == inv.g2 / Rational(10));
  CHECK(d.regular[1] == inv.g3 / Rational(7));
  CHECK(d.regular[2] == Rational(6) * inv.g2 * inv.g2 / Rational(1200));
}

TEST_CASE("ODE residual") {
  efg::testing::Gen gen(12);
  for (int trial = 0; trial < 6; ++trial) CHECK(verify_wp_ode(random_curve(gen), 6).all_zero());
  const LaurentCoeffs lem = verify_wp_ode({4, 0}, 8);
  CHECK(lem.lowest_exponent == -6);
  CHECK(lem.coeffs.size() == 17);  // exponents -6 .. 10
  CHECK(lem.all_zero());
}

TEST_CASE("ODE residual detects a corrupted coefficient") {
  WpExpansion wp = wp_laurent({q("1/3"), q("2")}, 6);
  wp.regular[1] += 1;
  const LaurentCoeffs r = wp_ode_residual(wp);
  for (int e = -6; e < 0; ++e) CHECK(r.at(e).is_zero());
  // c_2 enters at z^0 with weight -8*2 - 12
  CHECK(r.at(0) == Rational(-28));
}

TEST_CASE("zeta and sigma") {
  const CurveInvariants inv{q("5/3"), q("-2")};
  const ZetaSigma zs = zeta_sigma_series(inv, 6);
  CHECK(zs.zeta_regular[1].is_zero());
  CHECK(zs.zeta_regular[3] == -inv.g2 / Rational(60));
  CHECK(zs.sigma[1] == Rational(1));
  CHECK(zs.sigma[3].is_zero());
  CHECK(zs.sigma[5] == -inv.g2 / Rational(240));
  CHECK(zs.sigma[7] == -inv.g3 / Rational(840));

  // zeta' = -(p - z^-2)
  const WpExpansion wp = wp_laurent(inv, 6);
  const TruncatedSeries dz = series_diff(zs.zeta_regular);
  for (std::size_t n = 1; n <= 6 && 2 * n < dz.order(); ++n) CHECK(dz[2 * n] == -wp.c(n));

  // sigma'/sigma = zeta  <=>  z sigma' = sigma (1 + z zeta_regular)
  const TruncatedSeries lhs = series_shift(series_diff(zs.sigma), 1);
  const TruncatedSeries rhs =
      zs.sigma * (TruncatedSeries::constant(zs.zeta_regular.order(), 1) + series_shift(zs.zeta_regular, 1));
  const std::size_t n = std::min(lhs.order(), rhs.order());
  CHECK(n == 14);
  CHECK(lhs.truncated(n) == rhs.truncated(n));
}

TEST_CASE("formal exponential from p") {
  const WpExpansion wp = wp_laurent({q("6"), q("-1/5")}, 5);
  const TruncatedSeries f = wp_formal_exponential(wp);
  CHECK(f.order() == 15);
  CHECK(f[1] == Rational(1));
  for (std::size_t n : {0, 2, 3, 4, 6}) CHECK(f[n].is_zero());
  CHECK(f[5] == Rational(2) * wp.c(1));
  CHECK(f[7] == Rational(3) * wp.c(2));
}

TEST_CASE("Hurwitz-Bernoulli from the generating function") {
  const CurveInvariants inv{q("7/3"), q("-4/5")};
  const BHSequence bh = hurwitz_bernoulli_genfun(inv, 12);
  CHECK(bh.source == BHSource::genfun);
  CHECK(bh.values.size() == 13);
  CHECK(bh.values.at(0) == Rational(1));
  CHECK(bh.values.at(2).is_zero());
  CHECK(bh.values.at(4) == q("-12/5") * inv.g2);
  // 6! * (-3 c_2) and 8! * (2 c_1^2 - 4 c_3) expanded by hand
  CHECK(bh.values.at(6) == q("-540/7") * inv.g3);
  CHECK(bh.values.at(8) == q("336/5") * inv.g2 * inv.g2);
  for (std::size_t k = 1; k <= 12; k += 2) CHECK(bh.values.at(k).is_zero());
}

TEST_CASE("Hurwitz-Bernoulli from Eisenstein coefficients") {
  const CurveInvariants inv{q("7/3"), q("-4/5")};
  const BHSequence bh = hurwitz_bernoulli_eisenstein(inv, 10);
  CHECK(bh.source == BHSource::eisenstein);
  CHECK(bh.values.at(4) == q("2/5") * inv.g2);
  CHECK(bh.values.at(5).is_zero());
  CHECK(bh.values.at(6) == q("36/7") * inv.g3);
  CHECK(bh.values.at(8) == q("24/5") * inv.g2 * inv.g2);
  CHECK(bh.values.count(0) == 0);
  CHECK(bh.values.count(2) == 0);
}

TEST_CASE("property: homogeneity of weight") {
  efg::testing::Gen gen(41);
  for (int trial = 0; trial < 6; ++trial) {
    const CurveInvariants inv = random_curve(gen);
    const Rational lambda = gen.nonzero_rational(3, 3);
    const CurveInvariants scaled{inv.g2 * pow(lambda, 4), inv.g3 * pow(lambda, 6)};
    const WpExpansion a = wp_laurent(inv, 8), b = wp_laurent(scaled, 8);
    for (std::size_t n = 1; n <= 8; ++n)
      CHECK(b.c(n) == a.c(n) * pow(lambda, static_cast<unsigned>(2 * n + 2)));
    for (auto src : {hurwitz_bernoulli_genfun, hurwitz_bernoulli_eisenstein}) {
      const BHSequence x = src(inv, 14), y = src(scaled, 14);
      for (const auto& [k, v] : x.values) CHECK(y.values.at(k) == v * pow(lambda, static_cast<unsigned>(k)));
    }
  }
}

TEST_CASE("classical Bernoulli numbers") {
  const auto b = bernoulli_classical(20);
  REQUIRE(b.size() == 21);
  // independent oracle: sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1, B_0 = 1
  std::vector<Rational> oracle{1};
  for (unsigned n = 1; n <= 20; ++n) {
    Rational s;
    for (unsigned k = 0; k < n; ++k) s += Rational(binomial(n + 1, k)) * oracle[k];
    oracle.push_back(-s / Rational(static_cast<long>(n + 1)));
  }
  for (std::size_t n = 0; n <= 20; ++n) CHECK(b[n] == oracle[n]);
  CHECK(b[0] == Rational(1));
  CHECK(b[1] == q("-1/2"));
  CHECK(b[2] == q("1/6"));
  CHECK(b[3].is_zero());
  CHECK(b[12] == q("-691/2730"));
  for (std::size_t n = 3; n <= 20; n += 2) CHECK(b[n].is_zero());
}

TEST_CASE("BH JSON report") {
  const Json j = to_json(hurwitz_bernoulli_eisenstein({20, 0}, 5));
  CHECK(j.dump() == R"({"g2":"20","g3":"0","source":"eisenstein","values":{"1":"0","3":"0","4":"8","5":"0"}})");
}
