#pragma once

#include <cstdint>
#include <random>

namespace quivext {

/**
 * Seeded generator for test instances. Only raw engine output is used, so
 * streams are identical across standard libraries.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    /** Uniform-ish in [0, n); n > 0. */
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }
    /** Integer in [-r, r]. */
    long long symmetric(long long r) { return static_cast<long long>(below(2 * r + 1)) - r; }
    /** Nonzero integer in [-r, r]. */
    long long nonzero(long long r) {
        long long v = static_cast<long long>(below(2 * r)) - r;
        return v >= 0 ? v + 1 : v;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace quivext
