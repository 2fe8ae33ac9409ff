#include "rbs/random.hpp"

#include <stdexcept>

namespace rbs {

std::uint64_t SeededGenerator::uniform_index(std::uint64_t bound) {
  if (bound == 0)
    throw std::invalid_argument("uniform_index: bound must be positive");
  // Reject the bottom (2^64 mod bound) values; what remains is a whole
  // number of congruence classes, so the modulus below is unbiased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = raw();
    if (x >= threshold) return x % bound;
  }
}

std::vector<int> SeededGenerator::permutation(int n) {
  if (n < 0) throw std::invalid_argument("permutation: negative size");
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(
        uniform_index(static_cast<std::uint64_t>(i) + 1));
    std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]);
  }
  return p;
}

}  // namespace rbs
