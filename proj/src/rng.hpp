#pragma once

#include <cstdint>

#include "ints.hpp"

namespace morincob {

// splitmix64: tiny, stateless-quality generator with identical output on
// every platform, which the byte-identical-output contract needs (the
// standard <random> distributions are implementation-defined).
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Uniform integer in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Rational with numerator in [-num_bound, num_bound], denominator in
  // [1, den_bound].
  Rat rational(long long num_bound, long long den_bound) {
    return Rat(Int(range(-num_bound, num_bound)), Int(range(1, den_bound)));
  }

  Rat nonnegative_rational(long long num_bound, long long den_bound) {
    return Rat(Int(range(0, num_bound)), Int(range(1, den_bound)));
  }
};

}  // namespace morincob
