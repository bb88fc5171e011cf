// Exact rational scalars and a few helpers shared by every module.
#ifndef CARTANFORGE_RATIONAL_HPP
#define CARTANFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cartanforge {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text ("p" when the denominator is 1).
std::string to_string(const Rational& r);

/// Deterministic rational sampler: numerator and denominator bounded in absolute value.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, long bound = 10000) : rng_(seed), bound_(bound) {}

    /// Numerator in [-bound, bound], denominator in [1, bound].
    Rational next();
    /// Small rational with numerator in [-n, n] and denominator in [1, d].
    Rational small(long n, long d);
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    long bound_;
};

/// Seed used by every randomized suite: CARTANFORGE_SEED if set, otherwise the fallback.
std::uint64_t default_seed(std::uint64_t fallback = 20240611ULL);

}  // namespace cartanforge

#endif
