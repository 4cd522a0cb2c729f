#include "efg/lseries.hpp"

#include "efg/errors.hpp"

namespace efg {

namespace {

std::int64_t prime_power_coeff(const ApEntry& e, std::int64_t p, unsigned k) {
  if (e.type != ReductionType::good) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r *= e.ap;
    return r;
  }
  std::int64_t prev = 1, cur = e.ap;  // a_{p^0}, a_{p^1}
  for (unsigned i = 1; i < k; ++i) {
    const std::int64_t next = e.ap * cur - p * prev;
    prev = cur;
    cur = next;
  }
  return k == 0 ? 1 : cur;
}

}  // namespace

AnTable an_table(const ApTable& primes, std::int64_t n_max) {
  AnTable out;
  out.n_max = n_max;
  for (const auto& [p, why] : primes.unsupported)
    if (p <= n_max)
      out.notes.push_back("omitting multiples of " + std::to_string(p) + ": " + why);

  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::int64_t m = n, value = 1;
    bool known = true;
    for (std::int64_t p = 2; m > 1; ++p) {
      if (p * p > m) p = m;  // m is prime
      if (m % p != 0) continue;
      unsigned k = 0;
      while (m % p == 0) {
        m /= p;
        ++k;
      }
      auto it = primes.entries.find(p);
      if (it == primes.entries.end()) {
        known = false;
        break;
      }
      value *= prime_power_coeff(it->second, p, k);
    }
    if (known)
      out.values[n] = value;
    else
      out.omitted.push_back(n);
  }
  return out;
}

AnTable an_table(const WeierstrassModel& model, std::int64_t n_max, Execution exec) {
  return an_table(ap_table(model, n_max, exec), n_max);
}

TruncatedSeries lseries_log_series(const AnTable& table, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t n = 1; n < order; ++n) {
    auto it = table.values.find(static_cast<std::int64_t>(n));
    if (it == table.values.end())
      throw IncompleteTable("a_" + std::to_string(n) + " is not in the table");
    s[n] = Rational(static_cast<long>(it->second)) / Rational(static_cast<long>(n));
  }
  return s;
}

Json to_json(const AnTable& table) {
  Json values = Json::object();
  for (const auto& [n, a] : table.values) values[std::to_string(n)] = a;
  return Json{{"nmax", table.n_max},
              {"values", std::move(values)},
              {"omitted", table.omitted},
              {"notes", table.notes}};
}

}  // namespace efg
