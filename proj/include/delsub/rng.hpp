#ifndef DELSUB_RNG_HPP
#define DELSUB_RNG_HPP

#include <cstdint>
#include <random>

namespace delsub {

/// All randomized operations take an explicit seeded generator; runs are
/// replayable bit-for-bit. The identifier below is recorded in reports.
using Rng = std::mt19937_64;
inline constexpr const char* kRngAlgorithm = "mt19937_64+rejection";

/// Unbiased uniform draw from [0, bound) by rejection; avoids the
/// implementation-defined behaviour of std::uniform_int_distribution.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

}  // namespace delsub

#endif
