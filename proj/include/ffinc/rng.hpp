#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace ffinc {

// Deterministic RNG. Uses the fully specified mt19937_64 engine but never the
// standard distributions, whose output is implementation-defined.
class DetRng {
 public:
  explicit DetRng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniform in [0, n), n >= 1. Rejection sampling, bias-free.
  uint64_t below(uint64_t n) {
    uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      uint64_t x = eng_();
      if (x >= threshold) return x % n;
    }
  }
};

// Seed for trial `index` of a suite seeded with `base`.
inline uint64_t trial_seed(uint64_t base, uint64_t index) { return base + index; }

// Uniform n-subset of {0, ..., population-1} via a partial Fisher-Yates
// shuffle; returned sorted. Throws nothing; caller validates n <= population.
inline std::vector<uint64_t> sample_without_replacement(uint64_t population, uint64_t n,
                                                        DetRng& rng) {
  std::vector<uint64_t> idx(population);
  std::iota(idx.begin(), idx.end(), uint64_t{0});
  for (uint64_t i = 0; i < n; ++i) {
    uint64_t j = i + rng.below(population - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(n);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace ffinc
