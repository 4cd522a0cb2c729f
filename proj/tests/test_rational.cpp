#include "test_support.hpp"

#include "efg/errors.hpp"
#include "efg/wire.hpp"

using namespace efg;
using efg::testing::q;

TEST_CASE("parse and print") {
  CHECK(q("6/4").str() == "3/2");
  CHECK(q("-6/4").str() == "-3/2");
  CHECK(q("6/-4").str() == "-3/2");
  CHECK(q("0/7").str() == "0");
  CHECK(q("0/7").denominator() == 1);
  CHECK(q("+12").str() == "12");
  CHECK(q("-691/2730").str() == "-691/2730");
}

TEST_CASE("parse rejects garbage") {
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
  CHECK_THROWS_AS(Rational::parse("-"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
}

TEST_CASE("arithmetic stays canonical") {
  efg::testing::Gen gen(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a = gen.rational(), b = gen.nonzero_rational();
    for (const Rational& r : {a + b, a - b, a * b, a / b, -a})
      CHECK(efg::testing::canonical(r));
  }
  CHECK((q("1/3") + q("2/3")).str() == "1");
  CHECK((q("1/2") - q("1/2")).denominator() == 1);
  CHECK_THROWS(q("1") / Rational(0));
}

TEST_CASE("pow factorial binomial") {
  CHECK(pow(q("-2/3"), 3) == q("-8/27"));
  CHECK(pow(q("5"), 0) == Rational(1));
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("wire format") {
  CHECK(to_json(q("-3/2")) == Json("-3/2"));
  CHECK(to_json(q("4")) == Json("4"));
  CHECK(rational_from_json(Json("10/4")) == q("5/2"));
  CHECK(rational_from_json(Json(3)) == Rational(3));
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), ParseError);
}
