#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rbs {

// Deterministic random source. The engine (std::mt19937_64) has a
// standard-pinned output sequence, and every distribution here is derived
// from raw 64-bit words by fixed arithmetic, so equal seeds produce
// bit-identical streams on every platform and standard library.
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  // Number of 64-bit words consumed so far.
  std::uint64_t draws() const { return draws_; }

  std::uint64_t raw() {
    ++draws_;
    return engine_();
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(raw() >> 11) * 0x1.0p-53;
  }

  // Uniform on [-1, 1); the transform 2u - 1 is exact in binary64.
  double uniform_pm1() { return 2.0 * uniform01() - 1.0; }

  // Fair +-1.
  double rademacher() { return (raw() & 1u) ? 1.0 : -1.0; }

  // Unbiased integer in [0, bound) by bottom-band rejection.
  std::uint64_t uniform_index(std::uint64_t bound);

  // Fisher-Yates permutation of {0, ..., n-1}.
  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
};

}  // namespace rbs
