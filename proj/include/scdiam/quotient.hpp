/**
 * The pattern complex X/f: the complex on the colors of a proper coloring f
 * whose faces are the patterns of the faces of X.
 *
 * When every ridge of X has a distinct pattern, v -> f(v) is injective on
 * ridges and on facets and preserves ridge/facet incidence in both
 * directions, so X and X/f have the same boundary matrix over GF(2) up to
 * relabelling. Everything determined by that matrix (dual graph, diameter,
 * being a pseudomanifold) then carries over.
 */
#ifndef SCDIAM_QUOTIENT_HPP
#define SCDIAM_QUOTIENT_HPP

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scdiam/bounds.hpp"
#include "scdiam/coloring.hpp"
#include "scdiam/complex.hpp"
#include "scdiam/diameter.hpp"
#include "scdiam/error.hpp"

namespace scdiam {

struct QuotientResult
{
    Complex quotient;
    /// Source vertex v maps to quotient vertex vertex_map[v - 1].
    std::vector<Vertex> vertex_map;
    /// Quotient vertex u stands for color vertex_color[u - 1].
    std::vector<Color> vertex_color;
    /// Source facet index -> quotient facet index.
    std::vector<FaceIndex> facet_map;
    bool facets_injective = true;
    /// Source ridge index -> quotient ridge index (lexicographic orders);
    /// present only when the map is a bijection.
    std::optional<std::vector<FaceIndex>> ridge_map;

    std::size_t quotient_vertices() const noexcept { return quotient.n_vertices(); }
};

namespace detail {

inline std::vector<Vertex> image_of(std::span<const Vertex> face, const std::vector<Vertex>& vertex_map)
{
    std::vector<Vertex> img(face.size());
    for (std::size_t k = 0; k < face.size(); ++k)
        img[k] = vertex_map[face[k] - 1];
    std::sort(img.begin(), img.end());
    return img;
}

struct VectorHash
{
    std::size_t operator()(const std::vector<Vertex>& v) const noexcept
    {
        return boost::hash_range(v.begin(), v.end());
    }
};

}   // namespace detail

/**
 * Builds X/f from the facet patterns. Used colors are renumbered to
 * 1..n' in increasing color order. Quotient facets appear in order of
 * first occurrence among the source facets.
 *
 * Facets sharing a pattern do not make this fail: the result is flagged
 * with `facets_injective = false` and carries no ridge map.
 */
inline QuotientResult pattern_complex(const Complex& c, const Coloring& f)
{
    require_covers(c, f);
    if (!verify_proper(c, f))
        throw Error(Errc::ImproperColoring, "patterns of an improper coloring are not sets");

    std::vector<Color> used;
    for (std::size_t i = 0; i < c.facet_count(); ++i)
        for (Vertex v : c.facet(i))
            used.push_back(f(v));
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    std::vector<Vertex> vertex_map(c.n_vertices(), 0);
    for (Vertex v = 1; v <= c.n_vertices(); ++v)
    {
        auto it = std::lower_bound(used.begin(), used.end(), f(v));
        if (it != used.end() && *it == f(v))
            vertex_map[v - 1] = static_cast<Vertex>(it - used.begin()) + 1;
    }

    FaceList facets(c.facet_size());
    std::vector<FaceIndex> facet_map(c.facet_count());
    std::unordered_map<std::vector<Vertex>, FaceIndex, detail::VectorHash> seen;
    bool injective = true;
    for (std::size_t i = 0; i < c.facet_count(); ++i)
    {
        auto img = detail::image_of(c.facet(i), vertex_map);
        auto [it, fresh] = seen.try_emplace(img, static_cast<FaceIndex>(facets.count()));
        if (fresh)
            facets.push_back(img);
        else
            injective = false;
        facet_map[i] = it->second;
    }

    QuotientResult q{Complex(c.facet_size(), static_cast<Vertex>(used.size()), std::move(facets)),
                     std::move(vertex_map), std::move(used), std::move(facet_map), injective,
                     std::nullopt};
    if (!injective)
        return q;

    const RidgeTable source = ridges_of(c);
    const RidgeTable target = ridges_of(q.quotient);
    if (source.count() != target.count())
        return q;
    std::vector<FaceIndex> ridge_map(source.count());
    std::vector<char> hit(target.count(), 0);
    for (std::size_t r = 0; r < source.count(); ++r)
    {
        auto idx = target.find(detail::image_of(source.ridges[r], q.vertex_map));
        if (!idx || hit[*idx])
            return q;
        hit[*idx] = 1;
        ridge_map[r] = static_cast<FaceIndex>(*idx);
    }
    q.ridge_map = std::move(ridge_map);
    return q;
}

/// As `pattern_complex`, but facets sharing a pattern are an error.
inline QuotientResult pattern_complex_strict(const Complex& c, const Coloring& f)
{
    QuotientResult q = pattern_complex(c, f);
    if (!q.facets_injective)
        throw Error(Errc::NonInjectiveFacets, "two facets share a pattern");
    return q;
}

/**
 * Entry-exact comparison of the GF(2) boundary matrices of `c` and
 * `q.quotient` after permuting rows through `q.ridge_map` and columns
 * through `q.facet_map`. Both maps must also agree with the vertex map.
 */
inline bool verify_boundary_preservation(const Complex& c, const QuotientResult& q)
{
    if (!q.ridge_map || !q.facets_injective)
        throw Error(Errc::MissingBijection, "quotient carries no ridge/facet bijection");
    if (q.vertex_map.size() < c.n_vertices() || q.facet_map.size() != c.facet_count())
        return false;
    const auto& ridge_map = *q.ridge_map;

    const BoundaryMatrixGF2 src = boundary_matrix_gf2(c);
    const BoundaryMatrixGF2 dst = boundary_matrix_gf2(q.quotient);
    if (src.row_count() != dst.row_count() || src.col_count() != dst.col_count()
        || ridge_map.size() != src.row_count())
        return false;

    // Quotient facet index -> column of dst.
    std::vector<FaceIndex> dst_col(dst.col_count());
    for (std::size_t j = 0; j < dst.col_count(); ++j)
        dst_col[dst.col_source[j]] = static_cast<FaceIndex>(j);

    std::vector<FaceIndex> col_to(src.col_count());
    std::vector<char> col_hit(dst.col_count(), 0);
    for (std::size_t j = 0; j < src.col_count(); ++j)
    {
        const FaceIndex qf = q.facet_map[src.col_source[j]];
        if (qf >= dst.col_count() || col_hit[dst_col[qf]])
            return false;
        col_to[j] = dst_col[qf];
        col_hit[col_to[j]] = 1;
        if (detail::image_of(src.cols[j], q.vertex_map) != std::vector<Vertex>(dst.cols[col_to[j]].begin(), dst.cols[col_to[j]].end()))
            return false;
    }

    std::vector<char> row_hit(dst.row_count(), 0);
    std::vector<std::pair<FaceIndex, FaceIndex>> mapped, expected;
    for (std::size_t r = 0; r < src.row_count(); ++r)
    {
        const FaceIndex qr = ridge_map[r];
        if (qr >= dst.row_count() || row_hit[qr])
            return false;
        row_hit[qr] = 1;
        auto img = detail::image_of(src.rows[r], q.vertex_map);
        if (!same_face(img, dst.rows[qr]))
            return false;
        for (FaceIndex j : src.row(r))
            mapped.emplace_back(qr, col_to[j]);
    }
    for (std::size_t r = 0; r < dst.row_count(); ++r)
        for (FaceIndex j : dst.row(r))
            expected.emplace_back(static_cast<FaceIndex>(r), j);
    std::sort(mapped.begin(), mapped.end());
    return mapped == expected;
}

struct QuotientReport
{
    std::size_t source_vertices = 0;
    std::size_t quotient_vertices = 0;
    std::size_t facet_count = 0;
    std::size_t quotient_facet_count = 0;
    bool source_pseudomanifold = false;
    bool quotient_pseudomanifold = false;
    bool source_connected = false;
    bool quotient_connected = false;
    bool boundary_preserved = false;
    std::optional<std::size_t> source_diameter;
    std::optional<std::size_t> quotient_diameter;
    /// "bfs" when both diameters were computed directly, "structural" when
    /// the quotient value is inherited through boundary preservation.
    std::string diameter_method;
    /// diameter * d! / n'^(d - 1)
    double normalised_diameter = 0.0;
    double hs_upper_ratio = 0.0;
    std::optional<double> hpm_upper_ratio;
};

struct QuotientReportOptions
{
    std::size_t exact_limit = kExactDiameterLimit;
    /// Known diameter of the source, used above the exact limit.
    std::optional<std::size_t> known_source_diameter;
};

inline QuotientReport quotient_report(const Complex& c, const QuotientResult& q,
                                      const QuotientReportOptions& opt = {})
{
    QuotientReport rep;
    rep.source_vertices = c.n_vertices();
    rep.quotient_vertices = q.quotient.n_vertices();
    rep.facet_count = c.facet_count();
    rep.quotient_facet_count = q.quotient.facet_count();

    const RidgeTable src_ridges = ridges_of(c);
    const RidgeTable dst_ridges = ridges_of(q.quotient);
    rep.source_pseudomanifold = is_pseudomanifold(src_ridges);
    rep.quotient_pseudomanifold = is_pseudomanifold(dst_ridges);
    const DualGraph src_graph = dual_graph(src_ridges, c.facet_count());
    const DualGraph dst_graph = dual_graph(dst_ridges, q.quotient.facet_count());
    rep.source_connected = is_connected(src_graph);
    rep.quotient_connected = is_connected(dst_graph);
    rep.boundary_preserved = q.ridge_map && q.facets_injective && verify_boundary_preservation(c, q);

    if (c.facet_count() <= opt.exact_limit && rep.source_connected && rep.quotient_connected)
    {
        rep.source_diameter = diameter_exact(src_graph);
        rep.quotient_diameter = diameter_exact(dst_graph);
        rep.diameter_method = "bfs";
    }
    else if (rep.boundary_preserved && opt.known_source_diameter)
    {
        rep.source_diameter = opt.known_source_diameter;
        rep.quotient_diameter = opt.known_source_diameter;
        rep.diameter_method = "structural";
    }
    else
    {
        rep.diameter_method = "unavailable";
    }

    if (rep.quotient_diameter)
    {
        const int d = c.facet_size();
        const double diam = static_cast<double>(*rep.quotient_diameter);
        const auto np = static_cast<std::uint64_t>(rep.quotient_vertices);
        rep.normalised_diameter = static_cast<double>(
            diam * to_ld(big_factorial(static_cast<std::uint64_t>(d)))
            / to_ld(big_power(np, static_cast<std::uint64_t>(d - 1))));
        if (d >= 2)
        {
            rep.hs_upper_ratio = static_cast<double>(diam / hs_upper(np, d));
            if (rep.quotient_pseudomanifold)
                rep.hpm_upper_ratio = static_cast<double>(diam / hpm_upper(np, d).sharp);
        }
    }
    return rep;
}

}   // namespace scdiam

#endif
