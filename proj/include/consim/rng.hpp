#pragma once

#include "consim/cmatrix.hpp"

#include <cstdint>
#include <random>

namespace consim {

// Seeded generator for test data. mt19937_64 output is pinned by the C++
// standard, and range reduction avoids std::uniform_int_distribution, so the
// same seed yields the same draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform-ish integer in [0, n); modulo bias is irrelevant for test data.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    long long range(long long lo, long long hi) {  // inclusive bounds
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    // Small rational: numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational rational(long long max_num = 2, long long max_den = 2) {
        return Rational(BigInt(range(-max_num, max_num)), BigInt(range(1, max_den)));
    }

    GaussianRational gaussian(long long max_num = 2, long long max_den = 2) {
        return GaussianRational(rational(max_num, max_den), rational(max_num, max_den));
    }

    CMatrix matrix(std::size_t rows, std::size_t cols, long long max_num = 2,
                   long long max_den = 2);

    // Resamples until nonsingular; random small-entry matrices are singular
    // only rarely, but the loop makes the contract unconditional.
    CMatrix nonsingular_matrix(std::size_t n, long long max_num = 2, long long max_den = 2);

    // Derive an independent stream, e.g. one per trial index.
    Rng fork(std::uint64_t salt) {
        return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ULL));
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace consim
