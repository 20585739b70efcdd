#ifndef SCDIAM_MATH_HPP
#define SCDIAM_MATH_HPP

#include <algorithm>
#include <cstdint>

namespace scdiam {

/// e to more digits than long double can hold.
inline constexpr long double kE = 2.71828182845904523536028747135266249775724709369995L;

/// Exact C(n, k) for results that fit in 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return static_cast<std::uint64_t>(r);
}

}   // namespace scdiam

#endif
