#pragma once

#include <cstdint>
#include <string_view>

#include "bergman/disc.hpp"
#include "bergman/projection.hpp"

namespace bergman {

/// splitmix64 stream. Doubles are built from the top 53 bits, so sequences
/// are identical on every platform for a given seed.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}
  // Stream for one named consumer, independent of the order consumers run in.
  SeededRng(std::uint64_t seed, std::string_view stream);

  std::uint64_t next_u64() noexcept;
  double uniform() noexcept;                          // [0, 1)
  double uniform(double lo, double hi) noexcept;      // [lo, hi)
  std::size_t below(std::size_t n) noexcept;          // [0, n)

 private:
  std::uint64_t state_;
};

/// Degree uniform in [0, max_degree], coefficients with real and imaginary
/// parts uniform in [-1, 1).
TaylorPoly random_poly(SeededRng& rng, std::size_t max_degree);

/// Up to `terms` monomials zeta^j conj(zeta)^k with j, k <= max_power.
MixedPoly random_mixed_poly(SeededRng& rng, std::size_t terms, std::size_t max_power);

}  // namespace bergman
