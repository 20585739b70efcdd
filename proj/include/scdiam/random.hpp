/**
 * Portable seeded randomness.
 *
 * std::mt19937_64 is fully specified by the standard, but the standard
 * distributions are not, so bounded draws use rejection sampling on the
 * raw 64-bit output instead. Runs are then bit-identical across platforms
 * and standard libraries.
 */
#ifndef SCDIAM_RANDOM_HPP
#define SCDIAM_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace scdiam {

using Rng = std::mt19937_64;

inline constexpr std::string_view kRngName = "mt19937_64+rejection";

/// Uniform integer in [0, bound). `bound` must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound)
{
    constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    // Largest multiple of bound that fits, so every residue is equally likely.
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    std::uint64_t x;
    do
    {
        x = rng();
    } while (x > limit);
    return x % bound;
}

/// splitmix64 finalizer; used to derive independent seeds for bench cells.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}   // namespace scdiam

#endif
