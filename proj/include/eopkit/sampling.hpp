#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "eopkit/rat.hpp"

namespace eop {

/// Deterministic generator of small rationals p/q with |p| <= bound, 1 <= q <= bound.
/// Draws use plain modular reduction of a mt19937_64 stream so the sequence is
/// identical across standard libraries.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long bound = 20) : engine_(seed), bound_(bound) {}

  Rat next() {
    long p = uniform(2 * bound_ + 1) - bound_;
    long q = uniform(bound_) + 1;
    return Rat(p, q);
  }

  /// Non-integer rational; keeps clear of the integer poles that every
  /// prefactor in this library has.
  Rat next_non_integer() {
    for (;;) {
      Rat r = next();
      if (!r.is_integer()) return r;
    }
  }

  /// Pair (a, b) with a, b, a + b and a - b all non-integer, which keeps
  /// every Jacobi normalization and prefactor in this library nonzero.
  std::pair<Rat, Rat> next_generic_pair() {
    for (;;) {
      Rat a = next_non_integer(), b = next_non_integer();
      if (!(a + b).is_integer() && !(a - b).is_integer()) return {a, b};
    }
  }

  long uniform(long range) { return static_cast<long>(engine_() % static_cast<std::uint64_t>(range)); }

 private:
  std::mt19937_64 engine_;
  long bound_;
};

}  // namespace eop
