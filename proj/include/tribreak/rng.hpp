#ifndef TRIBREAK_RNG_HPP
#define TRIBREAK_RNG_HPP

#include <cassert>
#include <cstdint>
#include <random>

namespace tribreak {

// mt19937_64 output is pinned by the standard; the helpers below avoid
// std::uniform_int_distribution / generate_canonical, whose results are
// implementation-defined and would break cross-platform reproducibility.

/** Uniform integer in [0, bound), bound > 0, by rejection sampling. */
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/** Uniform double in [0, 1) with 53 random bits. */
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace tribreak

#endif
