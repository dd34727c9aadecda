#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cst/hash.hpp"

namespace cst {

// All randomness in the project flows through this generator. It is a
// splitmix64 counter stream, implemented here rather than via <random> so
// that results are identical across standard libraries and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, n). Multiply-shift bounding; bias is < 2^-64 * n.
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Uniform double in [0, 1) with 53 bits of precision.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    bounded(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Fisher-Yates; deterministic for a given seed regardless of toolchain.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

  // Index draw proportional to non-negative weights.
  std::size_t weighted(std::span<const double> weights);

 private:
  std::uint64_t state_;
};

// Derives an independent seed for a named consumer from the root seed.
// Adding a new purpose string never perturbs existing streams.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view purpose) {
  Rng mix(root ^ fnv1a64(purpose));
  return mix.next_u64();
}

}  // namespace cst
