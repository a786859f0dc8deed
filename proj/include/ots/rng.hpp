#pragma once

#include <cstdint>
#include <vector>

#include "ots/rational.hpp"

namespace ots {

// splitmix64; self-contained so generated streams are identical across
// platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  // Random exact rational num/den with num in [-max_num, max_num],
  // den in [1, max_den].
  Rational rational(long max_num, long max_den) {
    return Rational(range(-max_num, max_num), range(1, max_den));
  }

  // Random rational drawn from a fixed small grid (multiples of 1/den_grid).
  Rational grid(long lo_times_den, long hi_times_den, long den_grid) {
    return Rational(range(lo_times_den, hi_times_den), den_grid);
  }

  // Derive an independent stream (for per-item seeding in parallel loops).
  Rng fork(std::uint64_t salt) {
    Rng r(state_ ^ (0xd1342543de82ef95ull * (salt + 1)));
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ots
