/**
 * Pure simplicial complexes stored by their facets, together with the
 * objects derived from them: ridges, the dual graph, and the ridge/facet
 * incidence (boundary) matrix over GF(2).
 *
 * Vertices are 1-based. A complex with facet size `d` has dimension d - 1;
 * its ridges have d - 1 vertices. Every facet is stored as a strictly
 * increasing tuple, so ridges and patterns are canonical without any
 * orientation bookkeeping.
 */
#ifndef SCDIAM_COMPLEX_HPP
#define SCDIAM_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scdiam/error.hpp"

namespace scdiam {

using Vertex = std::uint32_t;
using FaceIndex = std::uint32_t;

/**
 * A list of faces of a common size, stored contiguously.
 */
class FaceList
{
    public:
        FaceList() = default;

        explicit FaceList(int face_size) : face_size_(face_size)
        {
            if (face_size < 0)
                throw Error(Errc::InvalidComplex, "negative face size");
        }

        int face_size() const noexcept { return face_size_; }
        std::size_t count() const noexcept { return count_; }
        bool empty() const noexcept { return count_ == 0; }

        std::span<const Vertex> operator[](std::size_t i) const noexcept
        {
            return {data_.data() + i * static_cast<std::size_t>(face_size_),
                    static_cast<std::size_t>(face_size_)};
        }

        void push_back(std::span<const Vertex> face)
        {
            if (face.size() != static_cast<std::size_t>(face_size_))
                throw Error(Errc::InvalidComplex, "face has wrong size");
            data_.insert(data_.end(), face.begin(), face.end());
            ++count_;
        }

        void reserve(std::size_t faces)
        {
            data_.reserve(faces * static_cast<std::size_t>(face_size_));
        }

        const std::vector<Vertex>& data() const noexcept { return data_; }

        bool operator==(const FaceList&) const = default;

    private:
        int face_size_ = 0;
        std::size_t count_ = 0;
        std::vector<Vertex> data_;
};

inline bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool same_face(std::span<const Vertex> a, std::span<const Vertex> b)
{
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

/**
 * A pure complex of facets with `facet_size()` vertices each on the vertex
 * set [1..n]. The constructor validates the invariants: strictly increasing
 * facets, vertices in range, no duplicate facets, at least one facet.
 */
class Complex
{
    public:
        Complex(int facet_size, Vertex n_vertices, FaceList facets)
            : facet_size_(facet_size), n_vertices_(n_vertices), facets_(std::move(facets))
        {
            validate();
        }

        static Complex from_facets(int facet_size, Vertex n_vertices,
                                   const std::vector<std::vector<Vertex>>& facets)
        {
            FaceList list(facet_size);
            list.reserve(facets.size());
            for (const auto& f : facets)
                list.push_back(f);
            return Complex(facet_size, n_vertices, std::move(list));
        }

        int facet_size() const noexcept { return facet_size_; }
        int dimension() const noexcept { return facet_size_ - 1; }
        Vertex n_vertices() const noexcept { return n_vertices_; }
        std::size_t facet_count() const noexcept { return facets_.count(); }
        std::span<const Vertex> facet(std::size_t i) const noexcept { return facets_[i]; }
        const FaceList& facets() const noexcept { return facets_; }

        /// Index of `face` among the facets, if present. Linear scan.
        std::optional<std::size_t> find_facet(std::span<const Vertex> face) const
        {
            for (std::size_t i = 0; i < facets_.count(); ++i)
            {
                if (same_face(facets_[i], face))
                    return i;
            }
            return std::nullopt;
        }

        bool operator==(const Complex&) const = default;

    private:
        void validate() const
        {
            if (facet_size_ < 1)
                throw Error(Errc::InvalidComplex, "facet size must be at least 1");
            if (facets_.face_size() != facet_size_)
                throw Error(Errc::InvalidComplex, "facet list has the wrong face size");
            if (facets_.empty())
                throw Error(Errc::InvalidComplex, "complex has no facets");
            for (std::size_t i = 0; i < facets_.count(); ++i)
            {
                auto f = facets_[i];
                for (std::size_t j = 0; j < f.size(); ++j)
                {
                    if (f[j] < 1 || f[j] > n_vertices_)
                        throw Error(Errc::InvalidComplex,
                                    "vertex " + std::to_string(f[j]) + " out of range in facet "
                                    + std::to_string(i));
                    if (j > 0 && f[j - 1] >= f[j])
                        throw Error(Errc::InvalidComplex,
                                    "facet " + std::to_string(i) + " is not strictly increasing");
                }
            }
            std::vector<std::size_t> order(facets_.count());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return lex_less(facets_[a], facets_[b]);
            });
            for (std::size_t k = 1; k < order.size(); ++k)
            {
                if (same_face(facets_[order[k - 1]], facets_[order[k]]))
                    throw Error(Errc::InvalidComplex, "duplicate facet");
            }
        }

        int facet_size_;
        Vertex n_vertices_;
        FaceList facets_;
};

/**
 * Ridges in lexicographic order with, for each ridge, the sorted indices of
 * the facets containing it (CSR layout).
 */
struct RidgeTable
{
    FaceList ridges;
    std::vector<std::size_t> offsets;   // size count() + 1
    std::vector<FaceIndex> containing;

    std::size_t count() const noexcept { return ridges.count(); }

    std::span<const FaceIndex> facets_of(std::size_t r) const noexcept
    {
        return {containing.data() + offsets[r], offsets[r + 1] - offsets[r]};
    }

    /// Binary search for a ridge by its vertices.
    std::optional<std::size_t> find(std::span<const Vertex> ridge) const
    {
        std::size_t lo = 0, hi = count();
        while (lo < hi)
        {
            std::size_t mid = lo + (hi - lo) / 2;
            if (lex_less(ridges[mid], ridge))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo < count() && same_face(ridges[lo], ridge))
            return lo;
        return std::nullopt;
    }
};

namespace detail {

/**
 * All (face, source facet) pairs obtained by deleting one vertex from each
 * facet, grouped into distinct faces in lexicographic order.
 */
inline RidgeTable enumerate_ridges(const FaceList& facets)
{
    const int d = facets.face_size();
    const int k = d - 1;
    const std::size_t m = facets.count();

    // Candidate ridge e = facet (e / d) minus its (e % d)-th vertex.
    std::vector<Vertex> flat(m * static_cast<std::size_t>(d) * static_cast<std::size_t>(k));
    std::vector<FaceIndex> owner(m * static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < m; ++i)
    {
        auto f = facets[i];
        for (int drop = 0; drop < d; ++drop)
        {
            std::size_t e = i * static_cast<std::size_t>(d) + static_cast<std::size_t>(drop);
            Vertex* out = flat.data() + e * static_cast<std::size_t>(k);
            for (int j = 0; j < d; ++j)
            {
                if (j != drop)
                    *out++ = f[static_cast<std::size_t>(j)];
            }
            owner[e] = static_cast<FaceIndex>(i);
        }
    }
    auto candidate = [&](std::size_t e) {
        return std::span<const Vertex>(flat.data() + e * static_cast<std::size_t>(k),
                                       static_cast<std::size_t>(k));
    };
    std::vector<std::size_t> order(owner.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto ca = candidate(a), cb = candidate(b);
        if (lex_less(ca, cb))
            return true;
        if (lex_less(cb, ca))
            return false;
        return owner[a] < owner[b];
    });

    RidgeTable table{FaceList(k), {0}, {}};
    table.containing.reserve(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
    {
        std::size_t e = order[pos];
        if (pos == 0 || !same_face(candidate(order[pos - 1]), candidate(e)))
        {
            if (pos != 0)
                table.offsets.push_back(table.containing.size());
            table.ridges.push_back(candidate(e));
        }
        table.containing.push_back(owner[e]);
    }
    if (!order.empty())
        table.offsets.push_back(table.containing.size());
    return table;
}

}   // namespace detail

/// Distinct ridges in lexicographic order, each with its containing facets.
inline RidgeTable ridges_of(const Complex& c)
{
    return detail::enumerate_ridges(c.facets());
}

/**
 * Undirected simple graph on facet indices, stored as sorted adjacency
 * lists in CSR form.
 */
class DualGraph
{
    public:
        DualGraph() : offsets_{0} {}

        /// Builds a graph from an edge list; duplicates collapse, loops are dropped.
        static DualGraph from_edges(std::size_t n_nodes,
                                    std::vector<std::pair<FaceIndex, FaceIndex>> edges)
        {
            std::vector<std::pair<FaceIndex, FaceIndex>> arcs;
            arcs.reserve(2 * edges.size());
            for (auto [u, v] : edges)
            {
                if (u == v)
                    continue;
                if (u >= n_nodes || v >= n_nodes)
                    throw Error(Errc::InvalidComplex, "edge endpoint out of range");
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
            }
            std::sort(arcs.begin(), arcs.end());
            arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

            DualGraph g;
            g.offsets_.assign(n_nodes + 1, 0);
            for (auto [u, v] : arcs)
                ++g.offsets_[u + 1];
            for (std::size_t i = 0; i < n_nodes; ++i)
                g.offsets_[i + 1] += g.offsets_[i];
            g.adjacency_.reserve(arcs.size());
            for (auto [u, v] : arcs)
                g.adjacency_.push_back(v);
            return g;
        }

        std::size_t node_count() const noexcept { return offsets_.size() - 1; }
        std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

        std::span<const FaceIndex> neighbors(std::size_t u) const noexcept
        {
            return {adjacency_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
        }

        std::size_t degree(std::size_t u) const noexcept { return offsets_[u + 1] - offsets_[u]; }

        bool adjacent(std::size_t u, std::size_t v) const
        {
            auto nb = neighbors(u);
            return std::binary_search(nb.begin(), nb.end(), static_cast<FaceIndex>(v));
        }

        /// Common degree if every node has the same degree.
        std::optional<std::size_t> regular_degree() const
        {
            if (node_count() == 0)
                return std::nullopt;
            std::size_t deg = degree(0);
            for (std::size_t u = 1; u < node_count(); ++u)
            {
                if (degree(u) != deg)
                    return std::nullopt;
            }
            return deg;
        }

        bool operator==(const DualGraph&) const = default;

    private:
        std::vector<std::size_t> offsets_;
        std::vector<FaceIndex> adjacency_;
};

/// Dual graph from an already-computed ridge table.
inline DualGraph dual_graph(const RidgeTable& ridges, std::size_t n_facets)
{
    std::vector<std::pair<FaceIndex, FaceIndex>> edges;
    for (std::size_t r = 0; r < ridges.count(); ++r)
    {
        auto owners = ridges.facets_of(r);
        for (std::size_t a = 0; a < owners.size(); ++a)
            for (std::size_t b = a + 1; b < owners.size(); ++b)
                edges.emplace_back(owners[a], owners[b]);
    }
    return DualGraph::from_edges(n_facets, std::move(edges));
}

/// Facets are adjacent iff they share a ridge.
inline DualGraph dual_graph(const Complex& c)
{
    return dual_graph(ridges_of(c), c.facet_count());
}

/**
 * Ridge/facet incidence matrix over GF(2) in canonical form: rows are the
 * ridges in lexicographic order, columns the facets in lexicographic order.
 * `col_source[j]` records which facet of the originating complex column j
 * is, so results can be mapped back to facet indices.
 *
 * Equality compares the canonical form only (rows, columns, entries).
 */
struct BoundaryMatrixGF2
{
    FaceList rows;
    FaceList cols;
    std::vector<FaceIndex> col_source;
    std::vector<std::size_t> row_offsets;
    std::vector<FaceIndex> row_entries;   // sorted column indices per row

    std::size_t row_count() const noexcept { return rows.count(); }
    std::size_t col_count() const noexcept { return cols.count(); }

    std::span<const FaceIndex> row(std::size_t r) const noexcept
    {
        return {row_entries.data() + row_offsets[r], row_offsets[r + 1] - row_offsets[r]};
    }

    std::size_t row_weight(std::size_t r) const noexcept { return row_offsets[r + 1] - row_offsets[r]; }

    bool entry(std::size_t r, std::size_t col) const
    {
        auto rr = row(r);
        return std::binary_search(rr.begin(), rr.end(), static_cast<FaceIndex>(col));
    }

    std::vector<std::size_t> column_weights() const
    {
        std::vector<std::size_t> w(col_count(), 0);
        for (FaceIndex j : row_entries)
            ++w[j];
        return w;
    }

    bool operator==(const BoundaryMatrixGF2& o) const
    {
        return rows == o.rows && cols == o.cols && row_offsets == o.row_offsets
               && row_entries == o.row_entries;
    }
};

inline BoundaryMatrixGF2 boundary_matrix_gf2(const Complex& c)
{
    const std::size_t m = c.facet_count();
    std::vector<FaceIndex> order(m);
    std::iota(order.begin(), order.end(), FaceIndex{0});
    std::sort(order.begin(), order.end(), [&](FaceIndex a, FaceIndex b) {
        return lex_less(c.facet(a), c.facet(b));
    });

    BoundaryMatrixGF2 bm;
    bm.cols = FaceList(c.facet_size());
    bm.cols.reserve(m);
    for (FaceIndex src : order)
        bm.cols.push_back(c.facet(src));
    bm.col_source = order;

    // Ridges of the sorted column list carry column indices directly.
    RidgeTable table = detail::enumerate_ridges(bm.cols);
    bm.rows = std::move(table.ridges);
    bm.row_offsets = std::move(table.offsets);
    bm.row_entries = std::move(table.containing);
    return bm;
}

/**
 * Dual graph read off the off-diagonal support of the integer product
 * B^T B, where B is the incidence pattern of `bm`. Node i is facet
 * `bm.col_source[...]` of the originating complex, so the result is
 * directly comparable with `dual_graph(c)`.
 */
inline DualGraph adjacency_from_boundary(const BoundaryMatrixGF2& bm)
{
    const std::size_t n = bm.col_count();
    std::vector<std::vector<FaceIndex>> col_rows(n);
    for (std::size_t r = 0; r < bm.row_count(); ++r)
        for (FaceIndex j : bm.row(r))
            col_rows[j].push_back(static_cast<FaceIndex>(r));

    std::vector<std::pair<FaceIndex, FaceIndex>> edges;
    std::vector<std::uint32_t> product(n, 0);
    std::vector<FaceIndex> touched;
    for (std::size_t a = 0; a < n; ++a)
    {
        for (FaceIndex r : col_rows[a])
        {
            for (FaceIndex b : bm.row(r))
            {
                if (product[b]++ == 0)
                    touched.push_back(b);
            }
        }
        for (FaceIndex b : touched)
        {
            if (b != a && product[b] > 0)
                edges.emplace_back(bm.col_source[a], bm.col_source[b]);
            product[b] = 0;
        }
        touched.clear();
    }
    return DualGraph::from_edges(n, std::move(edges));
}

inline bool is_pseudomanifold(const RidgeTable& ridges)
{
    for (std::size_t r = 0; r < ridges.count(); ++r)
    {
        if (ridges.facets_of(r).size() != 2)
            return false;
    }
    return true;
}

/// Every ridge lies in exactly two facets.
inline bool is_pseudomanifold(const Complex& c)
{
    return is_pseudomanifold(ridges_of(c));
}

inline bool is_connected(const DualGraph& g)
{
    const std::size_t n = g.node_count();
    if (n == 0)
        return false;
    std::vector<char> seen(n, 0);
    std::vector<FaceIndex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty())
    {
        FaceIndex u = stack.back();
        stack.pop_back();
        for (FaceIndex v : g.neighbors(u))
        {
            if (!seen[v])
            {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

inline bool is_strongly_connected(const Complex& c)
{
    return is_connected(dual_graph(c));
}

}   // namespace scdiam

#endif
