#pragma once

#include <cstdint>
#include <random>

#include "fairpursuit/geometry.hpp"

namespace fairpursuit {

// Seeded random source with a fixed draw discipline. All sampling goes
// through uniform() so that streams are reproducible bit-for-bit for a
// given seed, independent of standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform double in [0, 1) with 53 bits of randomness.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double angle() { return uniform(-kPi, kPi); }

  // Standard normal via Box-Muller; the spare value is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = kTwoPi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  // Uniform index in [0, n). Bias is below 2^-40 for any n we use.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n));
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stable FNV-1a combine for deriving per-cell seeds from run coordinates.
inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  constexpr std::uint64_t kPrime = 0x100000001b3ULL;
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffULL;
    h *= kPrime;
  }
  return h;
}

inline std::uint64_t fnv1a_seed() { return 0xcbf29ce484222325ULL; }

}  // namespace fairpursuit
