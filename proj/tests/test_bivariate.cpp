#include "test_support.hpp"

#include "efg/errors.hpp"
#include "efg/wire.hpp"

using namespace efg;
using efg::testing::q;

namespace {

BivariateSeries poly(std::size_t n, std::initializer_list<std::tuple<int, int, Rational>> terms) {
  BivariateSeries b(n);
  for (const auto& [i, j, c] : terms) b.set(i, j, c);
  return b;
}

}  // namespace

TEST_CASE("bivar_mul") {
  const auto x = BivariateSeries::x(6), y = BivariateSeries::y(6);
  CHECK((x + y) * (x + y) == poly(6, {{2, 0, 1}, {1, 1, 2}, {0, 2, 1}}));
  const auto a = poly(6, {{0, 0, q("1/2")}, {2, 1, 3}});
  CHECK(a * BivariateSeries::constant(6, 1) == a);
  CHECK((x + y) * (x - y) == poly(6, {{2, 0, 1}, {0, 2, -1}}));
  // truncation by total degree
  CHECK(((x + y) * (x + y)).truncated(2).is_zero());
}

TEST_CASE("terms respect the truncation") {
  BivariateSeries b(3);
  b.set(2, 1, 5);
  b.set(1, 1, 0);
  CHECK(b.is_zero());
  b.add_to(1, 1, 2);
  b.add_to(1, 1, -2);
  CHECK(b.is_zero());
}

TEST_CASE("bivar_compose_outer") {
  efg::testing::Gen gen(1);
  BivariateSeries g = poly(7, {{1, 0, 2}, {0, 1, -1}, {1, 2, q("1/3")}});
  CHECK(bivar_compose_outer(TruncatedSeries::variable(7), g) == g);
  const auto sum = BivariateSeries::x(7) + BivariateSeries::y(7);
  CHECK(bivar_compose_outer(TruncatedSeries::monomial(7, 2), sum) ==
        poly(7, {{2, 0, 1}, {1, 1, 2}, {0, 2, 1}}));
  TruncatedSeries geom(7);
  for (std::size_t n = 0; n < 7; ++n) geom[n] = 1;
  // 1/(1 - XY) = 1 + XY + X^2 Y^2 + X^3 Y^3 within total degree < 7
  CHECK(bivar_compose_outer(geom, poly(7, {{1, 1, 1}})) ==
        poly(7, {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}}));
  CHECK_THROWS_AS(bivar_compose_outer(geom, BivariateSeries::constant(7, 1)), NonzeroInnerConstant);
}

TEST_CASE("bivar_recip") {
  const auto a = poly(6, {{0, 0, 2}, {1, 0, 1}, {1, 1, -3}});
  CHECK(a * bivar_recip(a) == BivariateSeries::constant(6, 1));
}

TEST_CASE("substitute and first_difference") {
  const auto f = poly(6, {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  const auto t = TruncatedSeries::variable(6);
  // T + (-T) + T(-T) = -T^2
  CHECK(bivar_substitute(f, t, -t) == TruncatedSeries::monomial(6, 2, -1));
  auto g = f;
  g.set(0, 1, 2);
  g.set(3, 0, 1);
  CHECK(first_difference(f, g) == Bidegree{0, 1});
  CHECK(!first_difference(f, f));
  CHECK(bivar_swap(poly(6, {{2, 1, 3}})) == poly(6, {{1, 2, 3}}));
}

TEST_CASE("bivariate wire format") {
  const auto f = poly(4, {{1, 0, 1}, {0, 1, q("-1/2")}});
  const Json j = to_json(f);
  CHECK(j.dump() == R"({"coeffs":[[0,1,"-1/2"],[1,0,"1"]],"truncation":4})");
  CHECK(bivariate_from_json(j) == f);
  CHECK_THROWS_AS(bivariate_from_json(Json::parse(R"({"truncation":2,"coeffs":[[1,1,"1"]]})")),
                  ParseError);
}
