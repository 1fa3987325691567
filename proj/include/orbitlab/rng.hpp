#pragma once

#include <cstdint>

#include "orbitlab/rational.hpp"

namespace orbitlab {

/// Deterministic splittable RNG (splitmix64 core). State is explicit and
/// passed by value where forking is needed; nothing global.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent child stream; deterministic in (current state, salt).
    Rng split(std::uint64_t salt) {
        return Rng(next_u64() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x1234567a9bcdef01ULL));
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    /// Uniform integer in [-b, b].
    long integer(long b) { return (long)below(2 * (std::uint64_t)b + 1) - b; }

    /// Random rational with numerator in [-bound, bound], denominator in [1, bound].
    Rational rational(long bound) {
        const long num = integer(bound);
        const long den = 1 + (long)below((std::uint64_t)bound);
        return Rational(num, den);
    }

    /// Nonzero variant of rational().
    Rational nonzero_rational(long bound) {
        for (;;) {
            Rational r = rational(bound);
            if (!r.is_zero()) return r;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace orbitlab
