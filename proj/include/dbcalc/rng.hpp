#pragma once

#include <cstdint>
#include <vector>

#include "dbcalc/rational.hpp"

namespace dbcalc {

/// SplitMix64 stream. Hand-rolled so that identical seeds give identical
/// streams on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound > 0. Rejection-free modulo bias is
  /// irrelevant for test-case generation but kept small via 64-bit space.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Uniform integer in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1u) != 0; }

  /// Small exact rational with numerator in [-max_num, max_num] and
  /// denominator in [1, max_den].
  Rat rat(long max_num = 6, long max_den = 4) {
    Rat q(range(-max_num, max_num), range(1, max_den));
    q.canonicalize();
    return q;
  }

  /// Small integer in [-m, m].
  Int integer(long m = 3) { return Int(range(-m, m)); }

  /// Derives an independent child stream; used to make per-case seeds
  /// reportable and replayable.
  Rng fork() { return Rng(next() ^ 0xd1b54a32d192ed03ull); }

 private:
  std::uint64_t state_;
};

}  // namespace dbcalc
