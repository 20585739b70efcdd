/**
 * Breadth-first distances and diameters on dual graphs.
 *
 * The exact diameter runs one BFS per source; sources are spread over
 * worker threads and the per-thread maxima are combined, so the result
 * does not depend on scheduling.
 */
#ifndef SCDIAM_DIAMETER_HPP
#define SCDIAM_DIAMETER_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "scdiam/complex.hpp"
#include "scdiam/error.hpp"

namespace scdiam {

inline constexpr std::uint32_t kUnreachable = UINT32_MAX;

/// Facet count up to which the exact all-sources diameter runs by default.
inline constexpr std::size_t kExactDiameterLimit = 200000;

enum class DiameterMode { AllSources, Pair, DoubleSweep };

/**
 * BFS distances from `source`; unreachable nodes get `kUnreachable`.
 * `dist` and `queue` are scratch buffers reused across calls.
 */
inline void bfs_into(const DualGraph& g, std::size_t source, std::vector<std::uint32_t>& dist,
                     std::vector<FaceIndex>& queue)
{
    dist.assign(g.node_count(), kUnreachable);
    queue.clear();
    dist[source] = 0;
    queue.push_back(static_cast<FaceIndex>(source));
    for (std::size_t head = 0; head < queue.size(); ++head)
    {
        FaceIndex u = queue[head];
        for (FaceIndex v : g.neighbors(u))
        {
            if (dist[v] == kUnreachable)
            {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
}

inline std::vector<std::uint32_t> bfs_distances(const DualGraph& g, std::size_t source)
{
    std::vector<std::uint32_t> dist;
    std::vector<FaceIndex> queue;
    bfs_into(g, source, dist, queue);
    return dist;
}

namespace detail {

inline void require_connected(const DualGraph& g)
{
    if (!is_connected(g))
        throw Error(Errc::DisconnectedGraph, "dual graph is not connected");
}

}   // namespace detail

/// Exact diameter as the maximum BFS eccentricity over all sources.
inline std::size_t diameter_exact(const DualGraph& g, unsigned threads = 0)
{
    detail::require_connected(g);
    const std::size_t n = g.node_count();
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 64)));

    std::atomic<std::size_t> next{0};
    std::vector<std::uint32_t> best(threads, 0);
    auto worker = [&](unsigned id) {
        std::vector<std::uint32_t> dist;
        std::vector<FaceIndex> queue;
        for (std::size_t s = next++; s < n; s = next++)
        {
            bfs_into(g, s, dist, queue);
            best[id] = std::max(best[id], dist[queue.back()]);
        }
    };
    if (threads == 1)
    {
        worker(0);
    }
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned id = 0; id < threads; ++id)
            pool.emplace_back(worker, id);
    }
    return *std::max_element(best.begin(), best.end());
}

/// Distance between two nodes of a connected graph.
inline std::size_t distance(const DualGraph& g, std::size_t u, std::size_t v)
{
    if (u >= g.node_count() || v >= g.node_count())
        throw Error(Errc::InvalidSpec, "node index out of range");
    auto dist = bfs_distances(g, u);
    if (std::any_of(dist.begin(), dist.end(), [](auto x) { return x == kUnreachable; }))
        throw Error(Errc::DisconnectedGraph, "dual graph is not connected");
    return dist[v];
}

struct SweepResult
{
    std::size_t lower_bound;
    std::size_t from;
    std::size_t to;
};

/**
 * Double sweep: BFS from `start`, then BFS from the farthest node found.
 * The second eccentricity is a distance realised by an actual pair, hence
 * a lower bound on the diameter.
 */
inline SweepResult double_sweep_lower_bound(const DualGraph& g, std::size_t start = 0)
{
    detail::require_connected(g);
    std::vector<std::uint32_t> dist;
    std::vector<FaceIndex> queue;
    bfs_into(g, start, dist, queue);
    std::size_t a = queue.back();
    bfs_into(g, a, dist, queue);
    std::size_t b = queue.back();
    return {dist[b], a, b};
}

struct DiameterResult
{
    std::size_t value;
    DiameterMode mode;
};

struct DiameterOptions
{
    DiameterMode mode = DiameterMode::AllSources;
    std::size_t from = 0;
    std::size_t to = 0;
    unsigned threads = 0;
};

inline DiameterResult diameter(const DualGraph& g, const DiameterOptions& opt = {})
{
    switch (opt.mode)
    {
        case DiameterMode::AllSources:
            return {diameter_exact(g, opt.threads), opt.mode};
        case DiameterMode::Pair:
            return {distance(g, opt.from, opt.to), opt.mode};
        case DiameterMode::DoubleSweep:
            return {double_sweep_lower_bound(g, opt.from).lower_bound, opt.mode};
    }
    return {0, opt.mode};
}

}   // namespace scdiam

#endif
