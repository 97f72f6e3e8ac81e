#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace varkit {

// All lattice coefficients, diamond entries and cohomology dimensions are
// arbitrary-precision integers; ranks in the generality module use exact
// rationals. Kuenneth products and Koszul binomials overflow 64 bits quickly.
using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(n, k) for possibly huge n and small k; zero for
/// negative n (the cohomology formulas never need the signed extension).
inline Integer binomial(const Integer& n, unsigned long k) {
    if (n < 0)
        return 0;
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Deterministic small-integer stream used wherever the artifact needs
/// reproducible pseudo-random data (sections, property-test inputs).
/// std::mt19937_64 has a fixed algorithm; we avoid std::*_distribution,
/// whose output is implementation-defined, so streams are portable.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        // splitmix64; tiny, stable across platforms
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [lo, hi] via rejection sampling.
    long next_in(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v = next_u64();
        while (v >= limit)
            v = next_u64();
        return lo + static_cast<long>(v % span);
    }

private:
    std::uint64_t state_;
};

}  // namespace varkit
