#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace afl {

// Seeded random stream. Uniform and normal draws are implemented here rather
// than through <random> distributions so sequences are identical across
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via the polar Box-Muller method.
  double normal();

  // Uniform integer in [0, n).
  std::size_t index(std::size_t n);

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Seed splitting: every sub-stream seed is splitmix64(master ^ fnv1a(tag) +
// golden * (index + 1)). Streams keyed by distinct (tag, index) pairs are
// statistically independent and do not depend on scheduling order.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::uint64_t index = 0);

}  // namespace afl
