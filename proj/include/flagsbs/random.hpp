#pragma once

#include <cstdint>

#include "flagsbs/types.hpp"

namespace flagsbs {

/// Counter-based generator: the n-th draw is splitmix64(seed, n), so any
/// stream position can be reproduced from (seed, counter) alone.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (platform independent, unlike std::normal_distribution).
  double normal();

  /// Complex standard normal, E|z|^2 = 1.
  Complex complex_normal();

  std::uint64_t counter() const { return counter_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0;
};

/// Uniformly distributed point of the unit sphere S^3 in C^2.
Vec2c random_unit_c2(CounterRng& rng);

/// Complex Ginibre matrix (iid standard complex normal entries).
Mat3c random_ginibre(CounterRng& rng);

}  // namespace flagsbs
