/**
 * Closed-form diameter bounds for (d - 1)-dimensional complexes on n
 * vertices, in the general and the pseudomanifold case, plus the diameter
 * bound for connected regular graphs and the pseudomanifold f-vector
 * identity they rely on.
 *
 * The lower bounds are asymptotic constants: the (1 - o(1)) factor is
 * dropped and every lower-bound value is flagged as asymptotic.
 */
#ifndef SCDIAM_BOUNDS_HPP
#define SCDIAM_BOUNDS_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "scdiam/complex.hpp"
#include "scdiam/diameter.hpp"
#include "scdiam/error.hpp"
#include "scdiam/math.hpp"

namespace scdiam {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

inline BigInt big_factorial(std::uint64_t n)
{
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline BigInt big_power(std::uint64_t base, std::uint64_t exp)
{
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

inline long double to_ld(const BigInt& x) { return x.convert_to<long double>(); }

namespace detail {

inline void require_dim(int d, int min_d)
{
    if (d < min_d)
        throw Error(Errc::DimensionTooSmall,
                    "bound needs d >= " + std::to_string(min_d) + ", got " + std::to_string(d));
}

}   // namespace detail

/// n^(d-1) / (4 e d^2 d!), asymptotic.
inline long double hs_lower(std::uint64_t n, int d)
{
    detail::require_dim(d, 3);
    const auto dd = static_cast<std::uint64_t>(d);
    return to_ld(big_power(n, dd - 1)) / (4.0L * kE * dd * dd * to_ld(big_factorial(dd)));
}

/// n^(d-1) / ((d-1) (d-1)!).
inline long double hs_upper(std::uint64_t n, int d)
{
    detail::require_dim(d, 2);
    const auto dd = static_cast<std::uint64_t>(d);
    return to_ld(big_power(n, dd - 1)) / to_ld((dd - 1) * big_factorial(dd - 1));
}

/// n^(d-1) / (4 e d^4 d!), asymptotic.
inline long double hpm_lower(std::uint64_t n, int d)
{
    detail::require_dim(d, 3);
    const auto dd = static_cast<long double>(d);
    return to_ld(big_power(n, static_cast<std::uint64_t>(d) - 1))
           / (4.0L * kE * dd * dd * dd * dd * to_ld(big_factorial(static_cast<std::uint64_t>(d))));
}

struct PmUpperBound
{
    long double sharp;   // 6 C(n, d-1) / (d (d+1))
    long double loose;   // 6 n^(d-1) / (d+1)!
};

inline PmUpperBound hpm_upper(std::uint64_t n, int d)
{
    detail::require_dim(d, 2);
    const auto dd = static_cast<std::uint64_t>(d);
    PmUpperBound b;
    b.sharp = 6.0L * to_ld(big_binomial(n, dd - 1)) / static_cast<long double>(dd * (dd + 1));
    b.loose = 6.0L * to_ld(big_power(n, dd - 1)) / to_ld(big_factorial(dd + 1));
    return b;
}

/// Asymptotic constants of the normalised diameter diam * d! / n^(d-1).
inline long double hs_constant(int d) { return 1.0L / (4.0L * kE * d * d); }
inline long double hpm_constant(int d) { return 1.0L / (4.0L * kE * d * d * d * d); }

/// 3 n / (k + 1): diameter bound for a connected k-regular graph on n nodes.
inline long double regular_graph_diameter_bound(std::uint64_t n_nodes, std::uint64_t degree)
{
    return 3.0L * static_cast<long double>(n_nodes) / static_cast<long double>(degree + 1);
}

struct RegularBoundCheck
{
    std::size_t degree;
    std::size_t actual;
    long double bound;
    bool pass;
};

inline RegularBoundCheck check_regular_graph_bound(const DualGraph& g)
{
    auto degree = g.regular_degree();
    if (!degree)
        throw Error(Errc::NotRegular, "graph is not regular");
    std::size_t actual = diameter_exact(g);
    long double bound = regular_graph_diameter_bound(g.node_count(), *degree);
    return {*degree, actual, bound, static_cast<long double>(actual) <= bound};
}

/// d f_{d-1} = 2 f_{d-2}; holds for every pseudomanifold.
inline bool pm_fvector_check(const Complex& c)
{
    RidgeTable ridges = ridges_of(c);
    if (!is_pseudomanifold(ridges))
        throw Error(Errc::NotPseudomanifold, "f-vector identity needs a pseudomanifold");
    return static_cast<std::uint64_t>(c.facet_size()) * c.facet_count()
           == 2 * static_cast<std::uint64_t>(ridges.count());
}

struct BoundReport
{
    std::uint64_t n;
    int d;
    long double hs_lower;
    long double hs_upper;
    long double hpm_lower;
    PmUpperBound hpm_upper;
};

inline BoundReport bound_report(std::uint64_t n, int d)
{
    detail::require_dim(d, 3);
    return {n, d, hs_lower(n, d), hs_upper(n, d), hpm_lower(n, d), hpm_upper(n, d)};
}

}   // namespace scdiam

#endif
