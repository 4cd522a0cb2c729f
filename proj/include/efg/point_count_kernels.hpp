#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Inner loops of the point counter. Each kernel has a serial reference and
// an OpenMP version; both reduce integers, so they agree bit for bit.
namespace efg::kernels {

/// Coefficients of c3 x^3 + c2 x^2 + c1 x + c0 reduced into [0, p).
struct CubicModP {
  std::int64_t p;
  std::int64_t c3, c2, c1, c0;

  std::int64_t operator()(std::int64_t x) const {
    return (((c3 * x + c2) % p * x + c1) % p * x + c0) % p;
  }
};

/// Weierstrass coefficients reduced into [0, p).
struct ModelModP {
  std::int64_t p;
  std::int64_t a1, a2, a3, a4, a6;
};

/// chi[v] = Legendre symbol (v / p) for 0 <= v < p, p an odd prime.
std::vector<std::int8_t> quadratic_character_table(std::int64_t p);

/// sum_{x mod p} chi(f(x)).
std::int64_t character_sum_serial(const CubicModP& f, std::span<const std::int8_t> chi);
std::int64_t character_sum_parallel(const CubicModP& f, std::span<const std::int8_t> chi);

/// Number of projective points of the (possibly singular) reduced curve:
/// affine solutions (x, y) plus the point at infinity.
std::int64_t count_points_serial(const ModelModP& m);
std::int64_t count_points_parallel(const ModelModP& m);

int max_threads();

}  // namespace efg::kernels
