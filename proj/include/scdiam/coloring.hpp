/**
 * Vertex colorings of complexes and the two-stage construction that makes
 * every ridge pattern unique:
 *
 *  1. a randomized greedy coloring of a straight corridor in which any two
 *     vertices within `window` positions get distinct colors, so that no
 *     two intersecting faces share a pattern and pattern classes stay
 *     close to uniform;
 *  2. a refinement g, realised by Moser-Tardos resampling, such that the
 *     product coloring (f, g) gives every ridge a distinct pattern.
 *
 * Colors are 1-based. A product color (a, b) with a in [1, c1] and
 * b in [1, c2] is flattened to (a - 1) * c2 + b.
 */
#ifndef SCDIAM_COLORING_HPP
#define SCDIAM_COLORING_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

#include "scdiam/complex.hpp"
#include "scdiam/constructions.hpp"
#include "scdiam/error.hpp"
#include "scdiam/math.hpp"
#include "scdiam/random.hpp"

namespace scdiam {

using Color = std::uint32_t;

/**
 * A total map from vertices [1..n] to colors [1..c].
 */
class Coloring
{
    public:
        Coloring() = default;

        Coloring(std::vector<Color> colors, Color color_count)
            : colors_(std::move(colors)), color_count_(color_count)
        {
            for (std::size_t v = 0; v < colors_.size(); ++v)
            {
                if (colors_[v] < 1 || colors_[v] > color_count_)
                    throw Error(Errc::IncompleteColoring,
                                "vertex " + std::to_string(v + 1) + " has color "
                                + std::to_string(colors_[v]) + " outside [1, "
                                + std::to_string(color_count_) + "]");
            }
        }

        static Coloring identity(Vertex n)
        {
            std::vector<Color> c(n);
            for (Vertex v = 0; v < n; ++v)
                c[v] = v + 1;
            return Coloring(std::move(c), n);
        }

        static Coloring constant(Vertex n, Color count = 1)
        {
            return Coloring(std::vector<Color>(n, 1), count);
        }

        Color operator()(Vertex v) const noexcept { return colors_[v - 1]; }
        Vertex vertex_count() const noexcept { return static_cast<Vertex>(colors_.size()); }
        Color color_count() const noexcept { return color_count_; }
        const std::vector<Color>& colors() const noexcept { return colors_; }

        /// Number of distinct colors actually used.
        std::size_t used_colors() const
        {
            std::vector<char> seen(color_count_ + 1, 0);
            std::size_t used = 0;
            for (Color c : colors_)
            {
                if (!seen[c])
                {
                    seen[c] = 1;
                    ++used;
                }
            }
            return used;
        }

        bool operator==(const Coloring&) const = default;

    private:
        std::vector<Color> colors_;
        Color color_count_ = 0;
};

inline void require_covers(const Complex& c, const Coloring& f)
{
    if (f.vertex_count() < c.n_vertices())
        throw Error(Errc::IncompleteColoring,
                    "coloring covers " + std::to_string(f.vertex_count()) + " of "
                    + std::to_string(c.n_vertices()) + " vertices");
}

/// Sorted tuple of the colors on a face.
struct PatternKey
{
    boost::container::small_vector<Color, 8> colors;

    bool operator==(const PatternKey& o) const
    {
        return std::equal(colors.begin(), colors.end(), o.colors.begin(), o.colors.end());
    }

    bool operator<(const PatternKey& o) const
    {
        return std::lexicographical_compare(colors.begin(), colors.end(), o.colors.begin(), o.colors.end());
    }
};

struct PatternKeyHash
{
    std::size_t operator()(const PatternKey& k) const noexcept
    {
        return boost::hash_range(k.colors.begin(), k.colors.end());
    }
};

inline PatternKey pattern_of(std::span<const Vertex> face, const Coloring& f)
{
    PatternKey key;
    key.colors.reserve(face.size());
    for (Vertex v : face)
        key.colors.push_back(f(v));
    std::sort(key.colors.begin(), key.colors.end());
    return key;
}

inline std::string to_string(const PatternKey& key)
{
    std::string s = "{";
    for (std::size_t i = 0; i < key.colors.size(); ++i)
        s += (i ? "," : "") + std::to_string(key.colors[i]);
    return s + "}";
}

/// Endpoints of every 1-skeleton edge receive distinct colors.
inline bool verify_proper(const Complex& c, const Coloring& f)
{
    require_covers(c, f);
    for (std::size_t i = 0; i < c.facet_count(); ++i)
    {
        PatternKey key = pattern_of(c.facet(i), f);
        if (std::adjacent_find(key.colors.begin(), key.colors.end()) != key.colors.end())
            return false;
    }
    return true;
}

struct UniquenessCheck
{
    bool unique = true;
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> witness;
};

/**
 * Exhaustive check that no two ridges share a pattern. On failure the
 * witness is the first ridge (in lexicographic order) whose pattern was
 * already seen, paired with the earliest ridge carrying that pattern.
 */
inline UniquenessCheck verify_unique_ridge_patterns(const RidgeTable& ridges, const Coloring& f)
{
    std::unordered_map<PatternKey, std::size_t, PatternKeyHash> first;
    first.reserve(ridges.count());
    for (std::size_t r = 0; r < ridges.count(); ++r)
    {
        auto [it, fresh] = first.try_emplace(pattern_of(ridges.ridges[r], f), r);
        if (!fresh)
        {
            auto a = ridges.ridges[it->second];
            auto b = ridges.ridges[r];
            return {false, std::make_pair(std::vector<Vertex>(a.begin(), a.end()),
                                          std::vector<Vertex>(b.begin(), b.end()))};
        }
    }
    return {};
}

inline UniquenessCheck verify_unique_ridge_patterns(const Complex& c, const Coloring& f)
{
    require_covers(c, f);
    return verify_unique_ridge_patterns(ridges_of(c), f);
}

// ------------------------------------------------------------------------
// First coloring
// ------------------------------------------------------------------------

struct FirstColoringParams
{
    Color c1 = 13;
    double epsilon = 0.1;
    /// Distinctness window; 0 selects the default 2(d - 1).
    int window = 0;
};

inline int effective_window(const Complex& corridor, const FirstColoringParams& p)
{
    return p.window > 0 ? p.window : 2 * (corridor.facet_size() - 1);
}

/**
 * Colors v_1, ..., v_N in order, each with a uniformly random color not used
 * on the previous `window` vertices. One draw per vertex, in vertex order.
 */
inline Coloring greedy_window_coloring(const Complex& corridor, const FirstColoringParams& p, Rng& rng)
{
    if (!is_straight_corridor(corridor))
        throw Error(Errc::PreconditionViolated, "greedy window coloring needs a straight corridor");
    const int window = effective_window(corridor, p);
    if (p.c1 <= static_cast<Color>(window))
        throw Error(Errc::NoLegalColor,
                    "c1 = " + std::to_string(p.c1) + " must exceed the window " + std::to_string(window));

    const Vertex n = corridor.n_vertices();
    std::vector<Color> colors(n);
    std::vector<char> blocked(p.c1 + 1, 0);
    std::vector<Color> allowed;
    allowed.reserve(p.c1);
    for (Vertex v = 0; v < n; ++v)
    {
        const Vertex lo = v >= static_cast<Vertex>(window) ? v - static_cast<Vertex>(window) : 0;
        for (Vertex u = lo; u < v; ++u)
            blocked[colors[u]] = 1;
        allowed.clear();
        for (Color col = 1; col <= p.c1; ++col)
        {
            if (!blocked[col])
                allowed.push_back(col);
        }
        colors[v] = allowed[uniform_below(rng, allowed.size())];
        for (Vertex u = lo; u < v; ++u)
            blocked[colors[u]] = 0;
    }
    return Coloring(std::move(colors), p.c1);
}

inline Coloring greedy_window_coloring(const Complex& corridor, const FirstColoringParams& p,
                                       std::uint64_t seed)
{
    Rng rng(seed);
    return greedy_window_coloring(corridor, p, rng);
}

/// Deterministic greedy coloring of the square of the 1-skeleton (test baseline only).
inline Coloring greedy_distance_two_coloring(const Complex& c)
{
    const Vertex n = c.n_vertices();
    std::vector<std::set<Vertex>> nbr(n + 1);
    for (std::size_t i = 0; i < c.facet_count(); ++i)
    {
        auto f = c.facet(i);
        for (Vertex a : f)
            for (Vertex b : f)
                if (a != b)
                    nbr[a].insert(b);
    }
    std::vector<Color> colors(n, 0);
    Color used = 1;
    for (Vertex v = 1; v <= n; ++v)
    {
        std::set<Color> taken;
        for (Vertex u : nbr[v])
        {
            taken.insert(colors[u - 1]);
            for (Vertex w : nbr[u])
                taken.insert(colors[w - 1]);
        }
        Color col = 1;
        while (taken.count(col))
            ++col;
        colors[v - 1] = col;
        used = std::max(used, col);
    }
    return Coloring(std::move(colors), used);
}

/**
 * floor((1 + eps) N C(d - 1, k) / C(c1, d - k)): the pattern-class size bound
 * for codimension-k faces of a corridor with facet size d.
 */
inline std::uint64_t class_size_bound(Vertex n, int d, int codim, Color c1, double epsilon)
{
    const long double value = (1.0L + static_cast<long double>(epsilon)) * n
                              * static_cast<long double>(binomial(d - 1, codim))
                              / static_cast<long double>(binomial(c1, d - codim));
    return static_cast<std::uint64_t>(std::floor(value));
}

/// The same expression with eps = 0.
inline long double expected_class_size(Vertex n, int d, int codim, Color c1)
{
    return static_cast<long double>(n) * binomial(d - 1, codim)
           / static_cast<long double>(binomial(c1, d - codim));
}

/// Distinct faces with `size` vertices contained in some facet, lexicographic.
inline FaceList faces_of_size(const Complex& c, int size)
{
    const int d = c.facet_size();
    if (size < 0 || size > d)
        throw Error(Errc::InvalidSpec, "face size out of range");
    std::vector<std::vector<Vertex>> faces;
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (std::size_t i = 0; i < c.facet_count(); ++i)
    {
        auto f = c.facet(i);
        for (int k = 0; k < size; ++k)
            pick[k] = k;
        while (true)
        {
            std::vector<Vertex> face(static_cast<std::size_t>(size));
            for (int k = 0; k < size; ++k)
                face[k] = f[pick[k]];
            faces.push_back(std::move(face));
            int k = size - 1;
            while (k >= 0 && pick[k] == d - size + k)
                --k;
            if (k < 0)
                break;
            ++pick[k];
            for (int m = k + 1; m < size; ++m)
                pick[m] = pick[m - 1] + 1;
        }
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    FaceList out(size);
    out.reserve(faces.size());
    for (const auto& face : faces)
        out.push_back(face);
    return out;
}

struct PatternHistogram
{
    std::map<PatternKey, std::size_t> counts;
    std::size_t face_count = 0;
    std::size_t max_class = 0;

    double mean_class() const
    {
        return counts.empty() ? 0.0 : static_cast<double>(face_count) / counts.size();
    }
};

inline PatternHistogram histogram_of(const FaceList& faces, const Coloring& f)
{
    std::unordered_map<PatternKey, std::size_t, PatternKeyHash> counts;
    for (std::size_t i = 0; i < faces.count(); ++i)
        ++counts[pattern_of(faces[i], f)];
    PatternHistogram h;
    h.face_count = faces.count();
    for (auto& [key, n] : counts)
    {
        h.max_class = std::max(h.max_class, n);
        h.counts.emplace(key, n);
    }
    return h;
}

/// Pattern class sizes over all faces of codimension `codim`.
inline PatternHistogram pattern_class_histogram(const Complex& c, const Coloring& f, int codim)
{
    require_covers(c, f);
    if (codim < 0 || codim >= c.facet_size())
        throw Error(Errc::InvalidSpec, "codimension out of range");
    if (codim == 1)
        return histogram_of(ridges_of(c).ridges, f);
    return histogram_of(faces_of_size(c, c.facet_size() - codim), f);
}

struct FirstColoringOutcome
{
    Coloring coloring;
    std::uint64_t bound = 0;        // S from the class-size formula
    std::size_t max_class = 0;
    double mean_class = 0.0;
    int attempts = 0;
    bool bound_met = false;
};

/**
 * Runs the greedy window coloring until the codim-`codim` class sizes meet
 * the class-size bound, for at most `max_attempts` draws from the same
 * generator. Returns the attempt with the smallest maximum class (the
 * earliest on ties) and whether it met the bound.
 */
inline FirstColoringOutcome balanced_first_coloring(const Complex& corridor, const FirstColoringParams& p,
                                                    int codim, Rng& rng, int max_attempts = 11)
{
    FirstColoringOutcome best;
    best.bound = class_size_bound(corridor.n_vertices(), corridor.facet_size(), codim, p.c1, p.epsilon);
    for (int attempt = 1; attempt <= max_attempts; ++attempt)
    {
        Coloring f = greedy_window_coloring(corridor, p, rng);
        PatternHistogram h = pattern_class_histogram(corridor, f, codim);
        if (attempt == 1 || h.max_class < best.max_class)
        {
            best.coloring = std::move(f);
            best.max_class = h.max_class;
            best.mean_class = h.mean_class();
        }
        best.attempts = attempt;
        if (h.max_class <= best.bound)
        {
            best.bound_met = true;
            break;
        }
    }
    return best;
}

// ------------------------------------------------------------------------
// Refinement
// ------------------------------------------------------------------------

enum class ComplexShape { Corridor, Boundary };

/**
 * Upper bound t on the number of ridges meeting a given ridge: 2d^2 for
 * SC(N, d), (d + 1)^3 for the boundary of SC(N, d + 1) (facet size d).
 */
inline std::uint64_t intersecting_ridge_bound(ComplexShape shape, int d)
{
    const auto dd = static_cast<std::uint64_t>(d);
    return shape == ComplexShape::Corridor ? 2 * dd * dd : (dd + 1) * (dd + 1) * (dd + 1);
}

/// Smallest c2 with e (2tS + 1) <= c2^(d - 1).
inline Color lll_target_colors(std::uint64_t t, std::uint64_t s, int d)
{
    if (d < 3)
        throw Error(Errc::DimensionTooSmall, "refinement color count needs d >= 3");
    const long double x = kE * (2.0L * t * s + 1.0L);
    const int exponent = d - 1;
    auto power = [&](Color c) {
        long double r = 1.0L;
        for (int k = 0; k < exponent; ++k)
            r *= c;
        return r;
    };
    auto c2 = static_cast<Color>(std::ceil(std::pow(x, 1.0L / exponent)));
    c2 = std::max<Color>(c2, 1);
    while (power(c2) < x)
        ++c2;
    while (c2 > 1 && power(c2 - 1) >= x)
        --c2;
    return c2;
}

inline Coloring product_coloring(const Coloring& f, const Coloring& g)
{
    if (f.vertex_count() != g.vertex_count())
        throw Error(Errc::IncompleteColoring, "product of colorings on different vertex sets");
    const Color c2 = g.color_count();
    std::vector<Color> colors(f.vertex_count());
    for (std::size_t v = 0; v < colors.size(); ++v)
        colors[v] = (f.colors()[v] - 1) * c2 + g.colors()[v];
    return Coloring(std::move(colors), f.color_count() * c2);
}

struct RefinementParams
{
    std::uint64_t t = 0;
    std::uint64_t s = 0;
    Color c2 = 0;
    std::uint64_t max_resamples = 1000000;
};

struct RefinementResult
{
    Coloring product;
    Coloring g;
    std::uint64_t resamples = 0;
};

/**
 * Checks that f is proper, that no two intersecting ridges share an
 * f-pattern, and that every ridge pattern class has at most `s` members.
 * Two ridges intersect iff they share a vertex, so the second condition
 * reduces to distinct patterns among the ridges through each vertex.
 */
inline void check_refinement_preconditions(const Complex& c, const RidgeTable& ridges, const Coloring& f,
                                           std::uint64_t s)
{
    if (!verify_proper(c, f))
        throw Error(Errc::PreconditionViolated, "first coloring is not proper");
    std::vector<std::vector<std::size_t>> through(c.n_vertices() + 1);
    std::vector<PatternKey> keys(ridges.count());
    std::unordered_map<PatternKey, std::size_t, PatternKeyHash> sizes;
    for (std::size_t r = 0; r < ridges.count(); ++r)
    {
        keys[r] = pattern_of(ridges.ridges[r], f);
        ++sizes[keys[r]];
        for (Vertex v : ridges.ridges[r])
            through[v].push_back(r);
    }
    for (Vertex v = 1; v <= c.n_vertices(); ++v)
    {
        std::vector<PatternKey> local;
        local.reserve(through[v].size());
        for (std::size_t r : through[v])
            local.push_back(keys[r]);
        std::sort(local.begin(), local.end());
        if (std::adjacent_find(local.begin(), local.end()) != local.end())
            throw Error(Errc::PreconditionViolated,
                        "two intersecting ridges through vertex " + std::to_string(v)
                        + " share a pattern");
    }
    for (const auto& [key, n] : sizes)
    {
        if (n > s)
            throw Error(Errc::PreconditionViolated,
                        "pattern class " + to_string(key) + " has " + std::to_string(n)
                        + " ridges, more than S = " + std::to_string(s));
    }
}

/**
 * Moser-Tardos resampling from a given initial g. While some pair of ridges
 * shares an (f, g)-pattern, take the lexicographically smallest colliding
 * pattern and its two smallest ridges, and redraw g on their vertices in
 * ascending vertex order.
 */
inline RefinementResult moser_tardos_refine_from(const Complex& c, const Coloring& f, Coloring g0,
                                                 const RefinementParams& p, Rng& rng)
{
    require_covers(c, f);
    require_covers(c, g0);
    const RidgeTable ridges = ridges_of(c);
    check_refinement_preconditions(c, ridges, f, p.s);
    if (p.c2 < 1 || g0.color_count() != p.c2)
        throw Error(Errc::PreconditionViolated, "initial g must use exactly c2 colors");

    const Vertex n = c.n_vertices();
    const Color c2 = p.c2;
    std::vector<Color> g = g0.colors();
    g.resize(std::max<std::size_t>(g.size(), f.vertex_count()), 1);

    std::vector<std::vector<std::size_t>> through(n + 1);
    for (std::size_t r = 0; r < ridges.count(); ++r)
        for (Vertex v : ridges.ridges[r])
            through[v].push_back(r);

    auto product_key = [&](std::size_t r) {
        PatternKey key;
        for (Vertex v : ridges.ridges[r])
            key.colors.push_back((f(v) - 1) * c2 + g[v - 1]);
        std::sort(key.colors.begin(), key.colors.end());
        return key;
    };

    std::vector<PatternKey> keys(ridges.count());
    std::map<PatternKey, std::set<std::size_t>> buckets;
    std::set<PatternKey> colliding;
    for (std::size_t r = 0; r < ridges.count(); ++r)
    {
        keys[r] = product_key(r);
        auto& bucket = buckets[keys[r]];
        bucket.insert(r);
        if (bucket.size() == 2)
            colliding.insert(keys[r]);
    }

    RefinementResult result;
    std::vector<Vertex> event;
    std::vector<std::size_t> affected;
    while (!colliding.empty())
    {
        if (result.resamples >= p.max_resamples)
            throw Error(Errc::ResampleCapExceeded,
                        "still " + std::to_string(colliding.size()) + " colliding patterns after "
                        + std::to_string(result.resamples) + " resamples");
        const auto& bucket = buckets.at(*colliding.begin());
        auto it = bucket.begin();
        const std::size_t first = *it++;
        const std::size_t second = *it;

        event.clear();
        for (Vertex v : ridges.ridges[first])
            event.push_back(v);
        for (Vertex v : ridges.ridges[second])
            event.push_back(v);
        std::sort(event.begin(), event.end());
        event.erase(std::unique(event.begin(), event.end()), event.end());

        affected.clear();
        for (Vertex v : event)
            affected.insert(affected.end(), through[v].begin(), through[v].end());
        std::sort(affected.begin(), affected.end());
        affected.erase(std::unique(affected.begin(), affected.end()), affected.end());

        for (std::size_t r : affected)
        {
            auto b = buckets.find(keys[r]);
            b->second.erase(r);
            if (b->second.size() == 1)
                colliding.erase(keys[r]);
            if (b->second.empty())
                buckets.erase(b);
        }
        for (Vertex v : event)
            g[v - 1] = static_cast<Color>(uniform_below(rng, c2)) + 1;
        for (std::size_t r : affected)
        {
            keys[r] = product_key(r);
            auto& nb = buckets[keys[r]];
            nb.insert(r);
            if (nb.size() == 2)
                colliding.insert(keys[r]);
        }
        ++result.resamples;
    }

    result.g = Coloring(std::move(g), c2);
    result.product = product_coloring(f, result.g);
    return result;
}

/// Draws g uniformly (one draw per vertex, in vertex order), then resamples.
inline RefinementResult moser_tardos_refine(const Complex& c, const Coloring& f, const RefinementParams& p,
                                            Rng& rng)
{
    require_covers(c, f);
    if (p.c2 < 1)
        throw Error(Errc::PreconditionViolated, "c2 must be positive");
    std::vector<Color> g(f.vertex_count());
    for (auto& col : g)
        col = static_cast<Color>(uniform_below(rng, p.c2)) + 1;
    return moser_tardos_refine_from(c, f, Coloring(std::move(g), p.c2), p, rng);
}

inline RefinementResult moser_tardos_refine(const Complex& c, const Coloring& f, const RefinementParams& p,
                                            std::uint64_t seed)
{
    Rng rng(seed);
    return moser_tardos_refine(c, f, p, rng);
}

}   // namespace scdiam

#endif
