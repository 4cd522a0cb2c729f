#include "test_support.hpp"

#include <numeric>

#include "efg/errors.hpp"
#include "efg/lseries.hpp"

using namespace efg;
using efg::testing::q;

namespace {

const WeierstrassModel kCongruent = WeierstrassModel::short_form(-1, 0);
const WeierstrassModel k11a{0, -1, 1, -10, -20};

// q prod_{n>=1} (1 - q^n)^2 (1 - q^{11n})^2, the weight-2 newform of level 11.
std::vector<std::int64_t> eta_product_11(std::size_t n_max) {
  std::vector<std::int64_t> c(n_max + 1, 0);
  c[1] = 1;  // the leading q
  auto times_one_minus = [&](std::size_t k) {
    for (std::size_t i = n_max; i >= k + 1; --i) c[i] -= c[i - k];
  };
  for (std::size_t n = 1; n < n_max; ++n) {
    times_one_minus(n);
    times_one_minus(n);
    if (11 * n < n_max) {
      times_one_minus(11 * n);
      times_one_minus(11 * n);
    }
  }
  return c;
}

}  // namespace

TEST_CASE("an table basics") {
  const AnTable t = an_table(kCongruent, 30);
  CHECK(t.values.at(1) == 1);
  CHECK(t.values.at(5) == -2);
  CHECK(t.values.at(25) == -1);
  CHECK(t.values.count(2) == 0);
  CHECK(std::find(t.omitted.begin(), t.omitted.end(), 10) != t.omitted.end());
  CHECK(!t.notes.empty());
}

TEST_CASE("an table matches the level 11 eta product") {
  const std::size_t n_max = 120;
  const AnTable t = an_table(k11a, static_cast<std::int64_t>(n_max));
  const auto oracle = eta_product_11(n_max);
  CHECK(t.omitted.empty());
  for (std::size_t n = 1; n <= n_max; ++n) {
    CAPTURE(n);
    CHECK(t.values.at(static_cast<std::int64_t>(n)) == oracle[n]);
  }
}

TEST_CASE("property: multiplicativity on coprime indices") {
  const AnTable t = an_table(k11a, 150);
  for (std::int64_t m = 1; m <= 150; ++m)
    for (std::int64_t n = 1; m * n <= 150; ++n)
      if (std::gcd(m, n) == 1) CHECK(t.values.at(m * n) == t.values.at(m) * t.values.at(n));
  CHECK(t.values.at(15) == t.values.at(3) * t.values.at(5));
}

TEST_CASE("log series") {
  AnTable trivial;
  trivial.n_max = 6;
  trivial.values = {{1, 1}, {2, 0}, {3, 0}, {4, 0}, {5, 0}};
  CHECK(lseries_log_series(trivial, 6) == TruncatedSeries::variable(6));

  const AnTable t = an_table(k11a, 20);
  const TruncatedSeries s = lseries_log_series(t, 12);
  CHECK(s[1] == Rational(1));
  CHECK(s[2] == q("-1"));  // a_2 = -2
  CHECK(s[0].is_zero());

  AnTable cong = an_table(kCongruent, 10);
  cong.values[2] = 0;  // fill the gap at 2 to reach T^5; other even n stay absent
  CHECK_THROWS_AS(lseries_log_series(cong, 6), IncompleteTable);
  cong.values[4] = 0;
  CHECK(lseries_log_series(cong, 6)[5] == q("-2/5"));
}
