#pragma once

// Deterministic sample generation for the randomized smoke layers. Exhaustive
// basis sweeps are the real decision procedure everywhere in this project;
// samples only add coverage on non-basis rationals.
//
// Reproducibility matters more than statistical quality here, so values come
// straight from mt19937_64 (whose output sequence is fixed by the standard)
// with plain modulo reduction. std::uniform_int_distribution is deliberately
// avoided: its mapping is implementation-defined and would break byte-stable
// reports across toolchains.

#include "octocheck/octonion.hpp"
#include "octocheck/rational.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace octo {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

class SampleGen {
public:
    explicit SampleGen(std::uint64_t seed) : eng_(seed) {}

    // Distinct suites draw from distinct streams so that a suite's samples do
    // not depend on which other suites ran before it.
    static SampleGen for_suite(std::uint64_t seed, std::string_view tag) {
        return SampleGen(fnv1a64(tag) ^ (seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
    }

    std::uint64_t next_u64() { return eng_(); }

    // Inclusive on both ends.
    long long next_int(long long lo, long long hi) {
        if (lo > hi)
            throw std::invalid_argument("SampleGen::next_int: empty range");
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(eng_() % span);
    }

    // Numerator in [-9, 9], denominator in [1, 9].
    Rational next_rational() { return Rational(next_int(-9, 9), next_int(1, 9)); }

    Octonion next_octonion() {
        std::array<Rational, 8> c;
        for (auto& t : c)
            t = next_rational();
        return Octonion(c);
    }

    Octonion next_nonzero_octonion() {
        for (;;) {
            Octonion x = next_octonion();
            if (!x.is_zero())
                return x;
        }
    }

    // Exact point of the unit 6-sphere: conjugating a basis unit by an
    // arbitrary invertible y lands on a rational unit imaginary octonion.
    // The two elements generate an associative subalgebra, so the bracketing
    // cannot matter; that and the unit/imaginary invariants are re-checked
    // on every draw.
    Octonion next_unit_imaginary() {
        const Octonion y = next_nonzero_octonion();
        const Octonion yi = inverse(y);
        const Octonion u = Octonion::unit(static_cast<int>(next_int(1, 7)));
        const Octonion a = (y * u) * yi;
        const Octonion b = y * (u * yi);
        if (a != b || norm_sq(a) != Rational(1) || !a.is_imaginary())
            throw std::logic_error("SampleGen::next_unit_imaginary: construction invariants violated");
        return a;
    }

    // Exact (c, s) with c^2 + s^2 = 1 and s != 0, from the classic integer
    // parametrization c = (m^2 - n^2) / (m^2 + n^2), s = 2mn / (m^2 + n^2).
    std::pair<Rational, Rational> next_unit_pair() {
        const long long m = next_int(2, 6);
        const long long n = next_int(1, m - 1);
        Rational c(m * m - n * n, m * m + n * n);
        Rational s(2 * m * n, m * m + n * n);
        if (next_int(0, 1) == 1)
            std::swap(c, s);
        if (next_int(0, 1) == 1)
            c = -c;
        return {c, s};
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace octo
