#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rational.hpp"

namespace gtkit {

// Deterministic random source.  Only the raw mt19937_64 stream is used --
// the derived draws below are implemented here rather than with
// std::uniform_int_distribution, whose output is implementation-defined.
// Equal seeds therefore give equal streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [lo, hi] (inclusive).  Plain modulo; the tiny bias is
    // irrelevant for sampling and keeps the draw reproducible.
    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    bool coin() { return next() & 1; }

    // Small rational with numerator in [-bound, bound] and denominator
    // in [1, den_bound].
    Rational rational(long bound, long den_bound) {
        return Rational(uniform(-bound, bound), uniform(1, den_bound));
    }

    // Nonzero variant for places where a zero sample would be degenerate.
    Rational nonzero_rational(long bound, long den_bound) {
        for (;;) {
            Rational r = rational(bound, den_bound);
            if (!r.is_zero()) return r;
        }
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(next() % i)]);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace gtkit
