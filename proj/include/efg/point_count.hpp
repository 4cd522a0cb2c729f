#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "efg/formal_group.hpp"
#include "efg/point_count_kernels.hpp"
#include "efg/wire.hpp"

namespace efg {

enum class ReductionType { good, multiplicative_split, multiplicative_nonsplit, additive };
std::string to_string(ReductionType t);

enum class Execution { serial, parallel };

std::vector<std::int64_t> primes_up_to(std::int64_t n);
bool is_prime(std::int64_t n);

/// Classification of the given integral model at p.
///
/// p > 3: good iff p does not divide the discriminant; otherwise additive
/// iff p | c4, else multiplicative, split iff -c6 is a nonzero square mod p.
/// p in {2, 3}: good iff p does not divide the discriminant; multiplicative
/// when p does not divide c4 (split read off the point count of the
/// reduction); anything else throws SmallPrimeUnsupported.
ReductionType reduction_type(const WeierstrassModel& model, std::int64_t p);

/// a_p = p + 1 - #E(F_p) at a prime of good reduction. Odd p use the
/// character sum of 4x^3 + b2 x^2 + 2 b4 x + b6 (the completed square);
/// p = 2 and p = 3 enumerate every (x, y).
std::int64_t ap_good(const WeierstrassModel& model, std::int64_t p,
                     Execution exec = Execution::parallel);
/// +1 split, -1 nonsplit, 0 additive. Throws GoodReduction when p does not
/// divide the discriminant.
std::int64_t ap_bad(const WeierstrassModel& model, std::int64_t p, ReductionType type);

/// #E(F_p) of the reduced model by enumeration, point at infinity included.
std::int64_t count_points(const WeierstrassModel& model, std::int64_t p,
                          Execution exec = Execution::parallel);

kernels::ModelModP reduce_model(const WeierstrassModel& model, std::int64_t p);

struct ApEntry {
  std::int64_t ap = 0;
  ReductionType type = ReductionType::good;
};

struct ApTable {
  WeierstrassModel model;
  std::int64_t p_max = 0;
  std::map<std::int64_t, ApEntry> entries;
  /// Primes that could not be classified, with the reason.
  std::map<std::int64_t, std::string> unsupported;
};

/// a_p for every prime p <= p_max. Primes are distributed over threads
/// with `Execution::parallel`; the merge is keyed by p, so the table does
/// not depend on scheduling.
ApTable ap_table(const WeierstrassModel& model, std::int64_t p_max,
                 Execution exec = Execution::parallel);

Json to_json(std::int64_t p, const ApEntry& e);
Json to_json(const ApTable& table);

}  // namespace efg
