#pragma once

#include <cstdint>

#include "valmat/rational.hpp"

namespace valmat {

/// Canonicalized rational; the mpq two-argument constructor does not
/// reduce, and GMP arithmetic assumes reduced operands.
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// SplitMix64 generator. Used instead of <random> distributions so that
/// seeded runs are byte-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound).
  int below(int bound) { return bound <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

  /// Uniform integer in [lo, hi].
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool coin() { return next() & 1; }

  /// Random rational p/q with |p| <= max_num and 1 <= q <= max_den.
  Rat rational(int max_num = 20, int max_den = 1000) {
    int p = range(-max_num, max_num);
    int q = range(1, max_den);
    Rat r(p, q);
    r.canonicalize();
    return r;
  }

  /// Random strictly negative rational in (-bound, 0).
  Rat negative_rational(int max_den = 1000) {
    int q = range(2, max_den);
    int p = range(1, q - 1);
    Rat r(-p, q);
    r.canonicalize();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace valmat
