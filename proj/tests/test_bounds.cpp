#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "scdiam/bounds.hpp"
#include "scdiam/constructions.hpp"

using namespace scdiam;

namespace {

DualGraph cycle(std::size_t n)
{
    std::vector<std::pair<FaceIndex, FaceIndex>> e;
    for (std::size_t i = 0; i < n; ++i)
        e.emplace_back(static_cast<FaceIndex>(i), static_cast<FaceIndex>((i + 1) % n));
    return DualGraph::from_edges(n, e);
}

template <class F>
void expect_code(Errc code, F&& f)
{
    try
    {
        f();
        FAIL() << "expected " << to_string(code);
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), code);
    }
}

}   // namespace

TEST(BoundsTest, HsLower)
{
    // e to 20 digits, written independently of the library constant.
    const long double e = 2.71828182845904523536L;
    EXPECT_NEAR(static_cast<double>(hs_lower(10, 3)), 100.0 / (4.0 * 2.718281828459045 * 9 * 6), 1e-12);
    EXPECT_NEAR(static_cast<double>(hs_lower(10, 3)) / 0.17032, 1.0, 1e-4);
    EXPECT_NEAR(static_cast<double>(hs_lower(20, 3) / hs_lower(10, 3)), 4.0, 1e-12);
    EXPECT_NEAR(static_cast<double>(hs_lower(20, 5) / hs_lower(10, 5)), 16.0, 1e-12);
    EXPECT_NEAR(static_cast<double>(hs_lower(10, 3)), static_cast<double>(100.0L / (4.0L * e * 54.0L)), 1e-15);
    expect_code(Errc::DimensionTooSmall, [] { hs_lower(10, 2); });
}

TEST(BoundsTest, HsUpper)
{
    EXPECT_DOUBLE_EQ(static_cast<double>(hs_upper(10, 3)), 25.0);
    for (int d = 2; d <= 6; ++d)
    {
        long double fact = 1;
        for (int k = 2; k <= d; ++k)
            fact *= k;
        const long double form = static_cast<long double>(d) / (d - 1) * std::pow(13.0L, d - 1) / fact;
        EXPECT_NEAR(static_cast<double>(hs_upper(13, d) / form), 1.0, 1e-15);
    }
    EXPECT_LE(7.0L, hs_upper(10, 3));
    EXPECT_LE(hs_lower(10, 3), hs_upper(10, 3));
    expect_code(Errc::DimensionTooSmall, [] { hs_upper(10, 1); });
}

TEST(BoundsTest, HpmLower)
{
    EXPECT_NEAR(static_cast<double>(hpm_lower(10, 3)) / 0.018925, 1.0, 1e-4);
    EXPECT_NEAR(static_cast<double>(hpm_lower(10, 3)), 100.0 / (4.0 * 2.718281828459045 * 81 * 6), 1e-12);
    EXPECT_NEAR(static_cast<double>(hpm_lower(20, 4) / hpm_lower(10, 4)), 8.0, 1e-12);
    for (int d = 3; d <= 7; ++d)
        EXPECT_LE(hpm_lower(30, d), hs_lower(30, d));
    expect_code(Errc::DimensionTooSmall, [] { hpm_lower(10, 2); });
}

TEST(BoundsTest, HpmUpper)
{
    PmUpperBound b = hpm_upper(10, 3);
    EXPECT_DOUBLE_EQ(static_cast<double>(b.sharp), 22.5);
    EXPECT_DOUBLE_EQ(static_cast<double>(b.loose), 25.0);
    // 6 C(6, 2) / 12 = 7.5
    EXPECT_DOUBLE_EQ(static_cast<double>(hpm_upper(6, 3).sharp), 7.5);
    EXPECT_LE(3.0L, hpm_upper(6, 3).sharp);
    for (int d = 2; d <= 6; ++d)
        for (std::uint64_t n = static_cast<std::uint64_t>(d - 1); n <= 60; ++n)
            EXPECT_LE(hpm_upper(n, d).sharp, hpm_upper(n, d).loose * (1 + 1e-15L));
}

TEST(BoundsProperty, MonotoneInN)
{
    for (int d = 3; d <= 6; ++d)
        for (std::uint64_t n = static_cast<std::uint64_t>(d); n < 200; ++n)
        {
            EXPECT_LT(hs_lower(n, d), hs_lower(n + 1, d));
            EXPECT_LT(hs_upper(n, d), hs_upper(n + 1, d));
            EXPECT_LT(hpm_lower(n, d), hpm_lower(n + 1, d));
            EXPECT_LT(hpm_upper(n, d).sharp, hpm_upper(n + 1, d).sharp);
            EXPECT_LT(hpm_upper(n, d).loose, hpm_upper(n + 1, d).loose);
            EXPECT_LE(hpm_lower(n, d), hpm_upper(n, d).sharp);
        }
}

TEST(BoundsProperty, StableAcrossEvaluations)
{
    for (int d = 3; d <= 6; ++d)
    {
        BoundReport a = bound_report(1000, d);
        BoundReport b = bound_report(1000, d);
        EXPECT_EQ(a.hs_lower, b.hs_lower);
        EXPECT_EQ(a.hpm_upper.sharp, b.hpm_upper.sharp);
        EXPECT_NEAR(static_cast<double>(a.hs_lower / (std::pow(1000.0L, d - 1) * hs_constant(d)) * std::tgamma(d + 1.0)),
                    1.0, 1e-12);
    }
    EXPECT_NEAR(static_cast<double>(hs_constant(3)), 0.010219, 1e-6);
}

TEST(RegularBoundTest, Cycle)
{
    RegularBoundCheck r = check_regular_graph_bound(cycle(8));
    EXPECT_EQ(r.degree, 2u);
    EXPECT_EQ(r.actual, 4u);
    EXPECT_DOUBLE_EQ(static_cast<double>(r.bound), 8.0);
    EXPECT_TRUE(r.pass);
}

TEST(RegularBoundTest, BoundaryCorridorSix)
{
    RegularBoundCheck r = check_regular_graph_bound(dual_graph(boundary_corridor(6, 3)));
    EXPECT_EQ(r.degree, 3u);
    EXPECT_EQ(r.actual, 3u);
    EXPECT_DOUBLE_EQ(static_cast<double>(r.bound), 6.0);
    EXPECT_TRUE(r.pass);
    EXPECT_DOUBLE_EQ(static_cast<double>(regular_graph_diameter_bound(8, 3)), 6.0);
}

TEST(RegularBoundTest, NotRegular)
{
    expect_code(Errc::NotRegular, [] { check_regular_graph_bound(dual_graph(straight_corridor({6, 3}))); });
}

TEST(RegularBoundProperty, BoundaryCorridors)
{
    for (int d = 2; d <= 5; ++d)
        for (Vertex n = static_cast<Vertex>(d) + 2; n <= 30; ++n)
        {
            RegularBoundCheck r = check_regular_graph_bound(dual_graph(boundary_corridor(n, d)));
            EXPECT_EQ(r.degree, static_cast<std::size_t>(d));
            EXPECT_TRUE(r.pass) << "N=" << n << " d=" << d;
        }
}

TEST(FVectorTest, Examples)
{
    Complex b = boundary_corridor(6, 3);
    EXPECT_EQ(ridges_of(b).count(), 12u);
    EXPECT_TRUE(pm_fvector_check(b));
    EXPECT_TRUE(pm_fvector_check(Complex::from_facets(2, 3, {{1, 2}, {2, 3}, {1, 3}})));
    expect_code(Errc::NotPseudomanifold, [] { pm_fvector_check(straight_corridor({5, 3})); });
}
