#pragma once

#include <cstdint>
#include <random>

#include "bireflect/rational.hpp"

namespace bireflect {

// Deterministic source of small rationals. Every randomized routine takes a
// Rng (or a seed) explicitly so runs are reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    long uniform(long lo, long hi) {  // inclusive
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

    // Rational with numerator in [-height, height] and denominator in [1, height].
    Rat rat(long height) {
        if (height < 1) height = 1;
        return make_rat(uniform(-height, height), uniform(1, height));
    }

    // Nonzero variant.
    Rat nonzero_rat(long height) {
        for (;;) {
            Rat r = rat(height);
            if (sgn(r) != 0) return r;
        }
    }

    Rng fork() { return Rng(raw() ^ 0x9e3779b97f4a7c15ull); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace bireflect
