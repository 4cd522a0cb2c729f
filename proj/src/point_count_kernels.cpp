#include "efg/point_count_kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace efg::kernels {

namespace {

std::int64_t affine_solutions_at(const ModelModP& m, std::int64_t x) {
  const std::int64_t p = m.p;
  const std::int64_t rhs = (((x + m.a2) % p * x + m.a4) % p * x + m.a6) % p;
  const std::int64_t lin = (m.a1 * x + m.a3) % p;
  std::int64_t count = 0;
  for (std::int64_t y = 0; y < p; ++y)
    if (((y + lin) % p * y) % p == rhs) ++count;
  return count;
}

}  // namespace

std::vector<std::int8_t> quadratic_character_table(std::int64_t p) {
  std::vector<std::int8_t> chi(static_cast<std::size_t>(p), -1);
  chi[0] = 0;
  for (std::int64_t y = 1; y <= p / 2; ++y) chi[static_cast<std::size_t>(y * y % p)] = 1;
  return chi;
}

std::int64_t character_sum_serial(const CubicModP& f, std::span<const std::int8_t> chi) {
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < f.p; ++x) sum += chi[static_cast<std::size_t>(f(x))];
  return sum;
}

std::int64_t character_sum_parallel(const CubicModP& f, std::span<const std::int8_t> chi) {
  std::int64_t sum = 0;
  const std::int64_t p = f.p;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::int64_t x = 0; x < p; ++x) sum += chi[static_cast<std::size_t>(f(x))];
  return sum;
}

std::int64_t count_points_serial(const ModelModP& m) {
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < m.p; ++x) count += affine_solutions_at(m, x);
  return count;
}

std::int64_t count_points_parallel(const ModelModP& m) {
  std::int64_t count = 1;
  const std::int64_t p = m.p;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t x = 0; x < p; ++x) count += affine_solutions_at(m, x);
  return count;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace efg::kernels
