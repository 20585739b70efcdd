#include <cmath>
#include <map>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "scdiam/coloring.hpp"
#include "scdiam/constructions.hpp"
#include "support/naive_reference.hpp"

using namespace scdiam;
using Face = std::vector<Vertex>;

namespace {

// Brute force: no two distinct intersecting ridges share a pattern.
bool intersecting_ridges_distinct(const Complex& c, const Coloring& f)
{
    std::vector<Face> rs;
    for (auto& [r, owners] : naive::ridges(c))
        rs.push_back(r);
    auto pattern = [&](const Face& r) {
        std::multiset<Color> m;
        for (Vertex v : r)
            m.insert(f(v));
        return m;
    };
    for (std::size_t a = 0; a < rs.size(); ++a)
        for (std::size_t b = a + 1; b < rs.size(); ++b)
            if (naive::intersection_size(rs[a], rs[b]) > 0 && pattern(rs[a]) == pattern(rs[b]))
                return false;
    return true;
}

// Brute force: no two ridges at all share a pattern.
bool all_ridges_distinct(const Complex& c, const Coloring& f)
{
    std::set<std::multiset<Color>> seen;
    for (auto& [r, owners] : naive::ridges(c))
    {
        std::multiset<Color> m;
        for (Vertex v : r)
            m.insert(f(v));
        if (!seen.insert(m).second)
            return false;
    }
    return true;
}

}   // namespace

TEST(ColoringTest, RejectsOutOfRangeColors)
{
    EXPECT_THROW(Coloring({1, 2, 5}, 4), Error);
    EXPECT_THROW(Coloring({0, 1}, 4), Error);
    Complex c = straight_corridor({5, 3});
    EXPECT_THROW(verify_proper(c, Coloring::identity(4)), Error);
}

TEST(GreedyWindowTest, WindowPropertyOnCorridors)
{
    for (int d = 2; d <= 5; ++d)
        for (std::uint64_t seed = 1; seed <= 5; ++seed)
        {
            Complex c = straight_corridor({200, d});
            FirstColoringParams p{static_cast<Color>(6 * (d - 1) + 1), 0.1, 0};
            Coloring f = greedy_window_coloring(c, p, seed);
            const int w = 2 * (d - 1);
            for (Vertex i = 1; i <= 200; ++i)
                for (Vertex j = i + 1; j <= std::min<Vertex>(200, i + static_cast<Vertex>(w)); ++j)
                    ASSERT_NE(f(i), f(j)) << "d=" << d << " i=" << i << " j=" << j;
            EXPECT_TRUE(verify_proper(c, f));
        }
}

TEST(GreedyWindowTest, NoLegalColor)
{
    Complex c = straight_corridor({5, 3});
    try
    {
        greedy_window_coloring(c, FirstColoringParams{4, 0.1, 4}, 1);
        FAIL() << "expected NoLegalColor";
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::NoLegalColor);
    }
}

TEST(GreedyWindowTest, RequiresCorridor)
{
    try
    {
        greedy_window_coloring(boundary_corridor(6, 3), FirstColoringParams{13, 0.1, 0}, 1);
        FAIL() << "expected PreconditionViolated";
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::PreconditionViolated);
    }
}

TEST(GreedyWindowTest, Deterministic)
{
    Complex c = straight_corridor({1000, 3});
    FirstColoringParams p{13, 0.1, 0};
    EXPECT_EQ(greedy_window_coloring(c, p, 42), greedy_window_coloring(c, p, 42));
    EXPECT_NE(greedy_window_coloring(c, p, 42), greedy_window_coloring(c, p, 43));
}

TEST(GreedyWindowTest, ClassSizeAtTenThousand)
{
    Complex c = straight_corridor({10000, 3});
    FirstColoringParams p{13, 0.1, 0};
    const std::uint64_t s = class_size_bound(10000, 3, 1, 13, 0.1);
    EXPECT_EQ(s, 282u);
    PatternHistogram h = pattern_class_histogram(c, greedy_window_coloring(c, p, 11), 1);
    EXPECT_EQ(h.face_count, ridges_of(c).count());
    EXPECT_LE(h.max_class, s);
    // 19997 ridges over the 78 color pairs.
    EXPECT_NEAR(h.mean_class(), 19997.0 / 78.0, 1e-9);
}

// Window property implies unique patterns among intersecting ridges.
TEST(GreedyWindowProperty, IntersectingRidgesHaveDistinctPatterns)
{
    for (int d = 2; d <= 5; ++d)
        for (Vertex n : {static_cast<Vertex>(d), static_cast<Vertex>(d + 3), Vertex{40}, Vertex{200}})
        {
            if (n > 60 && d > 3)
                continue;
            Complex c = straight_corridor({n, d});
            Coloring f = greedy_window_coloring(c, FirstColoringParams{static_cast<Color>(2 * d), 0.1, 0}, n * 7 + d);
            EXPECT_TRUE(intersecting_ridges_distinct(c, f)) << "N=" << n << " d=" << d;
            // Equivalent library-side statement: the refinement preconditions hold.
            EXPECT_NO_THROW(check_refinement_preconditions(c, ridges_of(c), f, ridges_of(c).count()));
        }
}

TEST(GreedyWindowProperty, IntersectingRidgesLargeCorridors)
{
    for (int d = 4; d <= 5; ++d)
    {
        Complex c = straight_corridor({200, d});
        Coloring f = greedy_window_coloring(c, FirstColoringParams{static_cast<Color>(2 * d), 0.1, 0}, 99);
        EXPECT_TRUE(intersecting_ridges_distinct(c, f)) << "d=" << d;
    }
}

TEST(CorridorSkeleton, MaxVertexDegree)
{
    for (int d = 2; d <= 6; ++d)
    {
        Complex c = straight_corridor({60, d});
        std::vector<std::set<Vertex>> nbr(61);
        for (const auto& f : naive::facets(c))
            for (Vertex a : f)
                for (Vertex b : f)
                    if (a != b)
                        nbr[a].insert(b);
        std::size_t best = 0;
        for (const auto& s : nbr)
            best = std::max(best, s.size());
        EXPECT_EQ(best, static_cast<std::size_t>(2 * (d - 1)));
    }
}

TEST(DistanceTwoBaseline, ProperAndUnique)
{
    Complex c = straight_corridor({30, 3});
    Coloring f = greedy_distance_two_coloring(c);
    EXPECT_TRUE(verify_proper(c, f));
    EXPECT_LE(f.color_count(), 4u * 4u + 1u);
    EXPECT_TRUE(intersecting_ridges_distinct(c, f));
}

TEST(HistogramTest, IdentityColoring)
{
    Complex c = straight_corridor({5, 3});
    PatternHistogram h = pattern_class_histogram(c, Coloring::identity(5), 1);
    EXPECT_EQ(h.counts.size(), 7u);
    for (auto& [key, n] : h.counts)
        EXPECT_EQ(n, 1u);
    EXPECT_EQ(h.max_class, 1u);
    PatternHistogram h2 = pattern_class_histogram(c, Coloring::identity(5), 2);
    EXPECT_EQ(h2.counts.size(), 5u);
    EXPECT_EQ(h2.max_class, 1u);
}

TEST(HistogramTest, ExpectedClassSize)
{
    // 10^5 * 2 / C(13, 2) = 200000 / 78
    EXPECT_NEAR(static_cast<double>(expected_class_size(100000, 3, 1, 13)), 2564.1026, 1e-3);
    EXPECT_EQ(class_size_bound(100000, 3, 1, 13, 0.1), 2820u);
    // codim 2 on facet size 4: N C(3, 2) / C(13, 2)
    EXPECT_NEAR(static_cast<double>(expected_class_size(1000, 4, 2, 13)), 3000.0 / 78.0, 1e-9);
}

TEST(IntersectingRidgeBoundTest, Examples)
{
    EXPECT_EQ(intersecting_ridge_bound(ComplexShape::Corridor, 3), 18u);
    EXPECT_EQ(intersecting_ridge_bound(ComplexShape::Boundary, 3), 64u);
}

TEST(IntersectingRidgeBoundProperty, BruteForce)
{
    for (int d = 2; d <= 5; ++d)
    {
        EXPECT_LE(naive::max_intersecting_ridges(straight_corridor({20, d})),
                  intersecting_ridge_bound(ComplexShape::Corridor, d));
        EXPECT_LE(naive::max_intersecting_ridges(boundary_corridor(20, d)),
                  intersecting_ridge_bound(ComplexShape::Boundary, d));
    }
}

TEST(LllTargetTest, Examples)
{
    EXPECT_EQ(lll_target_colors(18, 10, 3), 32u);
    EXPECT_GE(32.0L * 32.0L, kE * 361.0L);
    EXPECT_LT(31.0L * 31.0L, kE * 361.0L);
    EXPECT_EQ(lll_target_colors(18, 0, 3), 2u);
    EXPECT_EQ(lll_target_colors(1000, 0, 3), 2u);
    EXPECT_THROW(lll_target_colors(18, 10, 2), Error);
}

TEST(LllTargetProperty, SmallestSatisfyingValue)
{
    for (int d = 3; d <= 6; ++d)
        for (std::uint64_t t : {18u, 64u, 125u})
            for (std::uint64_t s : {0u, 1u, 7u, 282u, 2820u})
            {
                const Color c2 = lll_target_colors(t, s, d);
                const long double x = kE * (2.0L * t * s + 1.0L);
                EXPECT_GE(std::pow(static_cast<long double>(c2), d - 1), x);
                EXPECT_LT(std::pow(static_cast<long double>(c2 - 1), d - 1), x);
            }
}

TEST(UniquenessTest, Examples)
{
    Complex c = straight_corridor({5, 3});
    EXPECT_TRUE(verify_unique_ridge_patterns(c, Coloring::identity(5)).unique);
    UniquenessCheck u = verify_unique_ridge_patterns(c, Coloring::constant(5));
    EXPECT_FALSE(u.unique);
    ASSERT_TRUE(u.witness);
    EXPECT_EQ(u.witness->first, (Face{1, 2}));
    EXPECT_EQ(u.witness->second, (Face{1, 3}));
}

TEST(ProperTest, Examples)
{
    Complex c = straight_corridor({5, 3});
    EXPECT_TRUE(verify_proper(c, Coloring::identity(5)));
    EXPECT_FALSE(verify_proper(c, Coloring::constant(5)));
    EXPECT_FALSE(verify_proper(Complex::from_facets(2, 2, {{1, 2}}), Coloring::constant(2)));
}

TEST(ProductColoringTest, Formula)
{
    Coloring f({1, 2, 3}, 3);
    Coloring g({2, 1, 2}, 2);
    Coloring p = product_coloring(f, g);
    EXPECT_EQ(p.color_count(), 6u);
    EXPECT_EQ(p.colors(), (std::vector<Color>{2, 3, 6}));
}

TEST(RefineTest, AlreadyUniqueNeedsNoResamples)
{
    Complex c = straight_corridor({12, 3});
    for (Color c2 : {1u, 2u, 7u})
    {
        RefinementResult r = moser_tardos_refine(c, Coloring::identity(12), RefinementParams{18, 1, c2}, 5);
        EXPECT_EQ(r.resamples, 0u);
        EXPECT_TRUE(verify_unique_ridge_patterns(c, r.product).unique);
    }
}

TEST(RefineTest, CorridorFortyWithLllColors)
{
    Complex c = straight_corridor({40, 3});
    Rng rng(2024);
    FirstColoringParams fp{13, 0.2, 0};
    Coloring f = greedy_window_coloring(c, fp, rng);
    const std::uint64_t s = pattern_class_histogram(c, f, 1).max_class;
    const Color c2 = lll_target_colors(18, s, 3);
    RefinementResult r = moser_tardos_refine(c, f, RefinementParams{18, s, c2}, rng);
    EXPECT_TRUE(verify_unique_ridge_patterns(c, r.product).unique);
    EXPECT_TRUE(all_ridges_distinct(c, r.product));
    EXPECT_TRUE(verify_proper(c, r.product));
    EXPECT_EQ(r.product, product_coloring(f, r.g));
    EXPECT_LE(r.product.color_count(), 13u * c2);
}

TEST(RefineTest, AdversarialConstantStart)
{
    Complex c = straight_corridor({10, 3});
    Coloring f = greedy_window_coloring(c, FirstColoringParams{13, 0.2, 0}, 3);
    Rng rng(11);
    RefinementParams p{18, ridges_of(c).count(), 64};
    RefinementResult r = moser_tardos_refine_from(c, f, Coloring::constant(10, 64), p, rng);
    EXPECT_TRUE(all_ridges_distinct(c, r.product));
    EXPECT_TRUE(verify_proper(c, r.product));
}

TEST(RefineTest, CapExceeded)
{
    // One color for g cannot separate the collisions of a constant-ish f.
    Complex c = straight_corridor({30, 3});
    Coloring f = greedy_window_coloring(c, FirstColoringParams{5, 0.2, 0}, 1);
    try
    {
        moser_tardos_refine(c, f, RefinementParams{18, 1000, 1, 50}, 1);
        FAIL() << "expected ResampleCapExceeded";
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::ResampleCapExceeded);
    }
}

TEST(RefineTest, PreconditionsChecked)
{
    Complex c = straight_corridor({10, 3});
    EXPECT_THROW(moser_tardos_refine(c, Coloring::constant(10), RefinementParams{18, 100, 8}, 1), Error);
    Coloring f = greedy_window_coloring(c, FirstColoringParams{13, 0.2, 0}, 3);
    try
    {
        moser_tardos_refine(c, f, RefinementParams{18, 0, 8}, 1);
        FAIL() << "expected PreconditionViolated";
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::PreconditionViolated);
    }
}

TEST(RefineTest, Deterministic)
{
    Complex c = straight_corridor({300, 3});
    Coloring f = greedy_window_coloring(c, FirstColoringParams{13, 0.2, 0}, 8);
    const std::uint64_t s = pattern_class_histogram(c, f, 1).max_class;
    RefinementParams p{18, s, lll_target_colors(18, s, 3)};
    RefinementResult a = moser_tardos_refine(c, f, p, 77);
    RefinementResult b = moser_tardos_refine(c, f, p, 77);
    EXPECT_EQ(a.product, b.product);
    EXPECT_EQ(a.resamples, b.resamples);
}

TEST(RefineProperty, SuccessImpliesProperAndUnique)
{
    for (int d = 3; d <= 4; ++d)
        for (std::uint64_t seed = 1; seed <= 6; ++seed)
        {
            Complex c = straight_corridor({60, d});
            const Color c1 = static_cast<Color>(6 * (d - 1) + 1);
            Rng rng(seed);
            Coloring f = greedy_window_coloring(c, FirstColoringParams{c1, 0.2, 0}, rng);
            const std::uint64_t s = pattern_class_histogram(c, f, 1).max_class;
            RefinementParams p{intersecting_ridge_bound(ComplexShape::Corridor, d), s,
                               lll_target_colors(intersecting_ridge_bound(ComplexShape::Corridor, d), s, d)};
            RefinementResult r = moser_tardos_refine(c, f, p, rng);
            EXPECT_TRUE(verify_proper(c, r.product));
            EXPECT_TRUE(all_ridges_distinct(c, r.product));
        }
}

TEST(RefineProperty, BoundaryWithCodimTwoColoring)
{
    const int d = 3;
    Complex host = straight_corridor({60, d + 1});
    Complex b = boundary_corridor(60, d);
    Rng rng(4);
    Coloring f = greedy_window_coloring(host, FirstColoringParams{13, 0.2, 0}, rng);
    EXPECT_EQ(effective_window(host, FirstColoringParams{13, 0.2, 0}), 2 * d);
    const std::uint64_t s = pattern_class_histogram(host, f, 2).max_class;
    const std::uint64_t t = intersecting_ridge_bound(ComplexShape::Boundary, d);
    RefinementResult r = moser_tardos_refine(b, f, RefinementParams{t, s, lll_target_colors(t, s, d)}, rng);
    EXPECT_TRUE(verify_proper(b, r.product));
    EXPECT_TRUE(all_ridges_distinct(b, r.product));
}
