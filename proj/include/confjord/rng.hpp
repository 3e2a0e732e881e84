#pragma once

#include <random>

#include "confjord/rational.hpp"

namespace confjord {

/// Deterministic sampler. Draws go through explicit modulo reduction on the
/// engine output so sequences are identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    long uniform(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Entry in [-5, 5] with denominator <= 4.
    Rational rational_entry() {
        long den = uniform(1, 4);
        long num = uniform(-5 * den, 5 * den);
        return Rational(num, den);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace confjord
