#pragma once

/**
 * @file random.hpp
 * @brief Seeded random generation of test elements.
 *
 * Uniform variates are derived from raw 64-bit engine output by hand rather
 * than through the standard distributions, whose algorithms are unspecified,
 * so that a seed reproduces the same elements on every standard library.
 */

#include "fsem/gauss_poly.hpp"
#include "fsem/number.hpp"
#include "fsem/spaces.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fsem {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    /// Uniform integer in [lo, hi].
    long uniform_int(long lo, long hi);
    bool bernoulli(double p) { return uniform01() < p; }
    /// Exact rational k / den with k uniform in [-num_max, num_max].
    Real small_rational(long num_max, long den);
    /// Derive an independent seed for a sub-stream.
    std::uint64_t fork() { return engine_() ^ 0x9E3779B97F4A7C15ULL; }

private:
    std::mt19937_64 engine_;
};

struct GaussPolyOptions {
    std::size_t n = 1;
    int max_degree = 3;
    int max_terms = 2;
    /// Decay rates are drawn from this list (all exact, all positive).
    std::vector<Real> decays{Real(mpq_class(1, 2)), Real(1), Real(mpq_class(3, 2)), Real(2)};
    /// Probability that a later term reuses the first term's decay.
    double shared_decay = 0.0;
    long coeff_num_max = 8;
    long coeff_den = 4;
};

/// A nonzero random Gaussian polynomial with exact real coefficients.
GaussPolyFn random_gauss_poly(Rng& rng, const GaussPolyOptions& opt);

struct SeqOptions {
    std::size_t max_length = 8;
    /// Entries are (k / den) * 2^e with |k| <= num_max and min_exp2 <= e <= max_exp2.
    long num_max = 16;
    long den = 8;
    int min_exp2 = -6;
    int max_exp2 = 6;
    double zero_prob = 0.25;
    /// Probability of a nonzero tail when tails are allowed.
    double tail_prob = 0.5;
};

/// A nonzero random sequence with exact entries; the tail is 0 unless allow_tail.
SeqElement random_seq(Rng& rng, const SeqOptions& opt, bool allow_tail);

/// A nonzero random element of X with default options.
Element random_element(const Space& X, Rng& rng);

}  // namespace fsem
