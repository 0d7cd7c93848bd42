#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace reduktor {

// Deterministic seeded generator.  mt19937_64 output is pinned by the
// standard, and rejection sampling below avoids the implementation-defined
// behaviour of std::uniform_int_distribution, so a seed reproduces the same
// stream on every platform.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t rem =
        (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;  // 2^64 mod n
    const std::uint64_t bound = 0 - rem;  // largest multiple of n, wrapped
    for (;;) {
      const std::uint64_t u = gen_();
      if (rem == 0 || u < bound) return u % n;
    }
  }

  // Derive an independent stream for subtask `index`.
  SeededRng fork(std::uint64_t index) {
    return SeededRng(next() ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace reduktor
