#pragma once

#include <random>
#include <vector>

#include "liequad/rootdata.hpp"

namespace liequad {

/// A factor exp(s * rho F[i]) or exp(s * rho E[i]) of an orbit word.
struct WordStep {
    bool lowering = true;
    int index = 0;  // 0-based generator index
    Rational amount = 1;
};

// All sampling is keyed to std::mt19937_64, whose output sequence is fixed
// by the standard, so sampled vectors and words are identical across
// platforms and runs.

inline Rational sample_rational(std::mt19937_64& rng) {
    const int num = static_cast<int>(rng() % 7) - 3;
    const int den = 1 + static_cast<int>(rng() % 3);
    return Rational(num, den);
}

inline RMatrix sample_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        RMatrix v(n, 1);
        for (std::size_t i = 0; i < n; ++i) v.set(i, 0, sample_rational(rng));
        if (!v.is_zero()) return v;
    }
}

inline RMatrix sample_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, sample_rational(rng));
    return m;
}

/// Deterministic word of exponential steps; lowering steps dominate so the
/// samples spread away from the highest weight line.
inline std::vector<WordStep> sample_word(const RootSystemData& rs, std::uint64_t seed) {
    static const Rational amounts[] = {Rational(1),     Rational(-1),    Rational(1, 2),
                                       Rational(-1, 2), Rational(2),     Rational(1, 3),
                                       Rational(-2),    Rational(3, 2)};
    std::mt19937_64 rng(seed);
    const std::size_t length = 1 + rng() % 4;
    std::vector<WordStep> word;
    for (std::size_t j = 0; j < length; ++j) {
        WordStep step;
        step.lowering = rng() % 3 != 0;
        step.index = static_cast<int>(rng() % rs.rank);
        step.amount = amounts[rng() % 8];
        word.push_back(step);
    }
    return word;
}

} // namespace liequad
