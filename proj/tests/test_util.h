#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "usc/piece.h"
#include "usc/rational.h"

namespace usc::testing {

// Small deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return rng_() % 2 == 0; }
  // Multiple of 1/den in [0,1].
  Rational grid(long den) { return Rational(integer(0, den), den); }

  Piece piece(long den) {
    const Rational x0 = grid(den), x1 = grid(den), y0 = grid(den), y1 = grid(den);
    if (coin()) return Piece::segment({x0, y0}, {x1, y1});
    return Piece::rect(Interval(min(x0, x1), max(x0, x1)), Interval(min(y0, y1), max(y0, y1)));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace usc::testing
