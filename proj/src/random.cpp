#include "bergman/random.hpp"

#include <vector>

namespace bergman {

SeededRng::SeededRng(std::uint64_t seed, std::string_view stream) : state_(seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (const char c : stream) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  state_ ^= h;
}

std::uint64_t SeededRng::next_u64() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SeededRng::uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double SeededRng::uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

std::size_t SeededRng::below(std::size_t n) noexcept { return static_cast<std::size_t>(next_u64() % n); }

TaylorPoly random_poly(SeededRng& rng, std::size_t max_degree) {
  const std::size_t degree = rng.below(max_degree + 1);
  std::vector<cplx> c(degree + 1);
  for (auto& v : c) {
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    v = {re, im};
  }
  return TaylorPoly(std::move(c));
}

MixedPoly random_mixed_poly(SeededRng& rng, std::size_t terms, std::size_t max_power) {
  std::vector<MixedPoly::Term> out;
  for (std::size_t i = 0; i < terms; ++i) {
    const std::size_t j = rng.below(max_power + 1);
    const std::size_t k = rng.below(max_power + 1);
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    out.push_back({j, k, {re, im}});
  }
  return MixedPoly(std::move(out));
}

}  // namespace bergman
