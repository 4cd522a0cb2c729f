#include "efg/point_count.hpp"

#include <exception>
#include <optional>

#include "efg/errors.hpp"

namespace efg {

namespace {

std::int64_t mod_p(const Rational& r, std::int64_t p) {
  return static_cast<std::int64_t>(mpz_fdiv_ui(r.numerator().get_mpz_t(),
                                               static_cast<unsigned long>(p)));
}

bool divides(std::int64_t p, const Rational& r) { return mod_p(r, p) == 0; }

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::int64_t count_with(const kernels::ModelModP& m, Execution exec) {
  return exec == Execution::parallel ? kernels::count_points_parallel(m)
                                     : kernels::count_points_serial(m);
}

}  // namespace

std::string to_string(ReductionType t) {
  switch (t) {
    case ReductionType::good: return "good";
    case ReductionType::multiplicative_split: return "multiplicative_split";
    case ReductionType::multiplicative_nonsplit: return "multiplicative_nonsplit";
    case ReductionType::additive: return "additive";
  }
  return "unknown";
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

kernels::ModelModP reduce_model(const WeierstrassModel& m, std::int64_t p) {
  return {p, mod_p(m.a1, p), mod_p(m.a2, p), mod_p(m.a3, p), mod_p(m.a4, p), mod_p(m.a6, p)};
}

std::int64_t count_points(const WeierstrassModel& model, std::int64_t p, Execution exec) {
  model.require_integral();
  require_prime(p);
  return count_with(reduce_model(model, p), exec);
}

ReductionType reduction_type(const WeierstrassModel& model, std::int64_t p) {
  model.require_integral();
  model.require_nonsingular();
  require_prime(p);
  if (!divides(p, model.discriminant())) return ReductionType::good;
  if (p <= 3) {
    if (divides(p, model.c4()))
      throw SmallPrimeUnsupported("reduction type of " + model.id() + " at p = " +
                                  std::to_string(p) + " needs Tate's algorithm");
    // multiplicative: #E~(F_p) = p (split) or p + 2 (nonsplit), singular point included
    const std::int64_t n = count_points(model, p, Execution::serial);
    return n == p ? ReductionType::multiplicative_split : ReductionType::multiplicative_nonsplit;
  }
  if (divides(p, model.c4())) return ReductionType::additive;
  const auto chi = kernels::quadratic_character_table(p);
  const std::int64_t minus_c6 = (p - mod_p(model.c6(), p)) % p;
  return chi[static_cast<std::size_t>(minus_c6)] == 1 ? ReductionType::multiplicative_split
                                                      : ReductionType::multiplicative_nonsplit;
}

std::int64_t ap_good(const WeierstrassModel& model, std::int64_t p, Execution exec) {
  model.require_integral();
  require_prime(p);
  if (divides(p, model.discriminant()))
    throw BadReduction(model.id() + " has bad reduction at p = " + std::to_string(p));
  std::int64_t ap;
  if (p <= 3) {
    ap = p + 1 - count_points(model, p, exec);
  } else {
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    const kernels::CubicModP f{p, 4 % p, mod_p(model.b2(), p), mod_p(Rational(2) * model.b4(), p),
                               mod_p(model.b6(), p)};
    const auto chi = kernels::quadratic_character_table(p);
    ap = -(exec == Execution::parallel ? kernels::character_sum_parallel(f, chi)
                                       : kernels::character_sum_serial(f, chi));
  }
  if (ap * ap > 4 * p) throw std::logic_error("Hasse bound violated at p = " + std::to_string(p));
  return ap;
}

std::int64_t ap_bad(const WeierstrassModel& model, std::int64_t p, ReductionType type) {
  model.require_integral();
  if (!divides(p, model.discriminant()))
    throw GoodReduction(model.id() + " has good reduction at p = " + std::to_string(p));
  switch (type) {
    case ReductionType::multiplicative_split: return 1;
    case ReductionType::multiplicative_nonsplit: return -1;
    case ReductionType::additive: return 0;
    case ReductionType::good: break;
  }
  throw GoodReduction("ap_bad called with type good at p = " + std::to_string(p));
}

ApTable ap_table(const WeierstrassModel& model, std::int64_t p_max, Execution exec) {
  model.require_integral();
  model.require_nonsingular();
  const std::vector<std::int64_t> primes = primes_up_to(p_max);
  std::vector<std::optional<ApEntry>> slots(primes.size());
  std::vector<std::string> reasons(primes.size());
  std::vector<std::exception_ptr> failures(primes.size());

  auto fill = [&](std::size_t i) {
    const std::int64_t p = primes[i];
    try {
      const ReductionType t = reduction_type(model, p);
      // the outer loop already owns the threads
      const std::int64_t ap =
          t == ReductionType::good ? ap_good(model, p, Execution::serial) : ap_bad(model, p, t);
      slots[i] = ApEntry{ap, t};
    } catch (const SmallPrimeUnsupported& e) {
      reasons[i] = e.what();
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };

  const auto count = static_cast<long>(primes.size());
  if (exec == Execution::parallel) {
    // primes grow, so later iterations are heavier
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) fill(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < count; ++i) fill(static_cast<std::size_t>(i));
  }

  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  ApTable table{model, p_max, {}, {}};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (slots[i])
      table.entries.emplace(primes[i], *slots[i]);
    else
      table.unsupported.emplace(primes[i], reasons[i]);
  }
  return table;
}

Json to_json(std::int64_t p, const ApEntry& e) {
  return Json{{"p", p}, {"ap", e.ap}, {"type", to_string(e.type)}};
}

Json to_json(const ApTable& table) {
  Json entries = Json::array();
  for (const auto& [p, e] : table.entries) entries.push_back(to_json(p, e));
  Json unsupported = Json::array();
  for (const auto& [p, why] : table.unsupported)
    unsupported.push_back(Json{{"p", p}, {"reason", why}});
  return Json{{"model", to_json(table.model)},
              {"pmax", table.p_max},
              {"entries", std::move(entries)},
              {"unclassified", std::move(unsupported)}};
}

}  // namespace efg
