/**
 * Deterministic seed complexes: the straight corridor SC(N, d), whose facets
 * are the windows {i, ..., i + d - 1}, and the boundary of SC(N, d + 1),
 * a (d - 1)-dimensional pseudomanifold (a stacked sphere).
 *
 * Facets of the boundary are labelled alpha = {1..d}, omega = {N-d+1..N}
 * and middle(i, j) = {i, ..., i + d} \ {i + j} for i in [1, N - d],
 * j in [1, d - 1].
 */
#ifndef SCDIAM_CONSTRUCTIONS_HPP
#define SCDIAM_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "scdiam/complex.hpp"
#include "scdiam/error.hpp"

namespace scdiam {

struct CorridorSpec
{
    Vertex n;
    int d;
};

inline Complex straight_corridor(const CorridorSpec& spec)
{
    if (spec.d < 2 || spec.n < static_cast<Vertex>(spec.d))
        throw Error(Errc::InvalidSpec, "straight corridor needs N >= d >= 2");
    const Vertex d = static_cast<Vertex>(spec.d);
    FaceList facets(spec.d);
    facets.reserve(spec.n - d + 1);
    std::vector<Vertex> f(d);
    for (Vertex i = 1; i + d - 1 <= spec.n; ++i)
    {
        for (Vertex j = 0; j < d; ++j)
            f[j] = i + j;
        facets.push_back(f);
    }
    return Complex(spec.d, spec.n, std::move(facets));
}

/// True iff `c` is exactly SC(n, d) in facet order.
inline bool is_straight_corridor(const Complex& c)
{
    const Vertex n = c.n_vertices();
    const auto d = static_cast<Vertex>(c.facet_size());
    if (d < 2 || n < d || c.facet_count() != n - d + 1)
        return false;
    for (std::size_t i = 0; i < c.facet_count(); ++i)
    {
        auto f = c.facet(i);
        for (Vertex j = 0; j < d; ++j)
        {
            if (f[j] != static_cast<Vertex>(i) + 1 + j)
                return false;
        }
    }
    return true;
}

struct BoundaryFacetLabel
{
    enum class Kind { Alpha, Omega, Middle };

    Kind kind;
    int i = 0;
    int j = 0;

    static BoundaryFacetLabel alpha() { return {Kind::Alpha}; }
    static BoundaryFacetLabel omega() { return {Kind::Omega}; }
    static BoundaryFacetLabel middle(int i, int j) { return {Kind::Middle, i, j}; }

    bool operator==(const BoundaryFacetLabel&) const = default;
};

inline std::string to_string(const BoundaryFacetLabel& label)
{
    switch (label.kind)
    {
        case BoundaryFacetLabel::Kind::Alpha: return "alpha";
        case BoundaryFacetLabel::Kind::Omega: return "omega";
        case BoundaryFacetLabel::Kind::Middle:
            return "middle " + std::to_string(label.i) + " " + std::to_string(label.j);
    }
    return {};
}

/// The facet carrying a given label in the boundary of SC(n, d + 1).
inline std::vector<Vertex> boundary_facet(Vertex n, int d, const BoundaryFacetLabel& label)
{
    std::vector<Vertex> f;
    f.reserve(static_cast<std::size_t>(d));
    switch (label.kind)
    {
        case BoundaryFacetLabel::Kind::Alpha:
            for (int k = 1; k <= d; ++k)
                f.push_back(static_cast<Vertex>(k));
            break;
        case BoundaryFacetLabel::Kind::Omega:
            for (int k = d - 1; k >= 0; --k)
                f.push_back(n - static_cast<Vertex>(k));
            break;
        case BoundaryFacetLabel::Kind::Middle:
            for (int k = 0; k <= d; ++k)
            {
                if (k != label.j)
                    f.push_back(static_cast<Vertex>(label.i + k));
            }
            break;
    }
    return f;
}

/**
 * The boundary of SC(n, d + 1), enumerated directly as alpha, then
 * middle(i, j) in (i, j) order, then omega: (n - d)(d - 1) + 2 facets of
 * size d.
 */
inline Complex boundary_corridor(Vertex n, int d)
{
    if (d < 2 || n < static_cast<Vertex>(d) + 2)
        throw Error(Errc::InvalidSpec, "boundary corridor needs d >= 2 and N >= d + 2");
    const int span = static_cast<int>(n) - d;
    FaceList facets(d);
    facets.reserve(static_cast<std::size_t>(span) * static_cast<std::size_t>(d - 1) + 2);
    facets.push_back(boundary_facet(n, d, BoundaryFacetLabel::alpha()));
    for (int i = 1; i <= span; ++i)
        for (int j = 1; j <= d - 1; ++j)
            facets.push_back(boundary_facet(n, d, BoundaryFacetLabel::middle(i, j)));
    facets.push_back(boundary_facet(n, d, BoundaryFacetLabel::omega()));
    return Complex(d, n, std::move(facets));
}

/// Label of a facet of the boundary of SC(n, d + 1), computed from its vertices.
inline BoundaryFacetLabel facet_label(Vertex n, int d, std::span<const Vertex> facet)
{
    if (facet.size() != static_cast<std::size_t>(d) || d < 2 || n < static_cast<Vertex>(d) + 2)
        throw Error(Errc::UnknownFacet, "facet does not fit the boundary corridor shape");
    auto consecutive_from = [&](Vertex start) {
        for (std::size_t k = 0; k < facet.size(); ++k)
        {
            if (facet[k] != start + static_cast<Vertex>(k))
                return false;
        }
        return true;
    };
    if (consecutive_from(1))
        return BoundaryFacetLabel::alpha();
    if (consecutive_from(n - static_cast<Vertex>(d) + 1))
        return BoundaryFacetLabel::omega();

    // Middle facets span exactly d + 1 consecutive values with one interior gap.
    const int i = static_cast<int>(facet.front());
    if (static_cast<int>(facet.back()) != i + d || i < 1 || i > static_cast<int>(n) - d)
        throw Error(Errc::UnknownFacet, "facet is not a boundary facet of the corridor");
    int gap = -1;
    for (std::size_t k = 1; k < facet.size(); ++k)
    {
        int step = static_cast<int>(facet[k] - facet[k - 1]);
        if (step == 2 && gap < 0)
            gap = static_cast<int>(facet[k - 1]) + 1 - i;
        else if (step != 1)
            throw Error(Errc::UnknownFacet, "facet is not a boundary facet of the corridor");
    }
    if (gap < 1 || gap > d - 1)
        throw Error(Errc::UnknownFacet, "facet is not a boundary facet of the corridor");
    return BoundaryFacetLabel::middle(i, gap);
}

/// Label of a facet of `c`, which must be a boundary corridor.
inline BoundaryFacetLabel facet_label(const Complex& c, std::span<const Vertex> facet)
{
    if (!c.find_facet(facet))
        throw Error(Errc::UnknownFacet, "facet does not belong to the complex");
    return facet_label(c.n_vertices(), c.facet_size(), facet);
}

/**
 * The potential i - j/(d - 1) of a middle facet, scaled by d - 1 so it stays
 * integral. Ordering and step sizes are preserved under the scaling.
 */
inline std::int64_t scaled_potential(const BoundaryFacetLabel& label, int d)
{
    if (label.kind != BoundaryFacetLabel::Kind::Middle)
        throw Error(Errc::NotMiddleFacet, "potential is only defined on middle facets");
    return static_cast<std::int64_t>(label.i) * (d - 1) - label.j;
}

/// (d - 1) N / d - d, the lower bound on the alpha-omega distance.
inline boost::rational<std::int64_t> diameter_lower_bound_boundary(Vertex n, int d)
{
    if (d < 2 || n < static_cast<Vertex>(d) + 2)
        throw Error(Errc::InvalidSpec, "boundary corridor needs d >= 2 and N >= d + 2");
    return boost::rational<std::int64_t>(static_cast<std::int64_t>(d - 1) * n, d) - d;
}

/// ceil((d - 1) N / d) - d; distances are integers so this is the usable form.
inline std::int64_t diameter_lower_bound_boundary_ceil(Vertex n, int d)
{
    auto q = diameter_lower_bound_boundary(n, d);
    std::int64_t fl = q.numerator() / q.denominator();
    if (q.numerator() % q.denominator() != 0 && q.numerator() > 0)
        ++fl;
    return fl;
}

}   // namespace scdiam

#endif
