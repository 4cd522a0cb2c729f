#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "efg/point_count.hpp"
#include "efg/series.hpp"
#include "efg/wire.hpp"

namespace efg {

/// Dirichlet coefficients a_n of L_E(s) = sum a_n n^-s for n <= n_max.
///
/// Indices divisible by an unclassified prime are omitted and listed in
/// `omitted`; `notes` explains why.
struct AnTable {
  std::int64_t n_max = 0;
  std::map<std::int64_t, std::int64_t> values;
  std::vector<std::int64_t> omitted;
  std::vector<std::string> notes;
};

/// a_1 = 1; a_{p^{k+1}} = a_p a_{p^k} - p a_{p^{k-1}} at good p,
/// a_{p^k} = a_p^k at bad p; a_{mn} = a_m a_n for coprime m, n.
AnTable an_table(const ApTable& primes, std::int64_t n_max);
AnTable an_table(const WeierstrassModel& model, std::int64_t n_max,
                 Execution exec = Execution::parallel);

/// sum_{1 <= n < order} (a_n / n) T^n. Throws IncompleteTable when some
/// a_n with n < order is missing.
TruncatedSeries lseries_log_series(const AnTable& table, std::size_t order);

Json to_json(const AnTable& table);

}  // namespace efg
