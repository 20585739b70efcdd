/**
 * End-to-end construction runs.
 *
 * Simplicial mode: SC(N, d) -> greedy window coloring (codim 1) ->
 * Moser-Tardos refinement with t = 2d^2 -> pattern complex -> independent
 * re-verification.
 *
 * Pseudomanifold mode: the boundary of SC(N, d + 1), first-colored through
 * SC(N, d + 1) at codimension 2 (window 2d), refined with t = (d + 1)^3.
 *
 * All randomness comes from one generator seeded with the run seed and is
 * consumed in a fixed order: greedy attempts in vertex order, then the
 * initial g in vertex order, then resampling events.
 */
#ifndef SCDIAM_PIPELINE_HPP
#define SCDIAM_PIPELINE_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scdiam/bounds.hpp"
#include "scdiam/coloring.hpp"
#include "scdiam/complex.hpp"
#include "scdiam/constructions.hpp"
#include "scdiam/diameter.hpp"
#include "scdiam/error.hpp"
#include "scdiam/quotient.hpp"
#include "scdiam/random.hpp"

namespace scdiam {

enum class PipelineMode { Simplicial, Pseudomanifold };

inline std::string to_string(PipelineMode m)
{
    return m == PipelineMode::Simplicial ? "simplicial" : "pseudomanifold";
}

struct PipelineParams
{
    PipelineMode mode = PipelineMode::Simplicial;
    int d = 3;
    Vertex n = 40;
    Color c1 = 13;
    double epsilon = 0.2;
    std::uint64_t seed = 1;
    /// Greedy draws before settling for the best one (1 + 10 retries).
    int max_attempts = 11;
    /// Fail with RetriesExhausted instead of continuing with the observed S.
    bool strict_class_bound = false;
    std::uint64_t max_resamples = 1000000;
    std::optional<Color> c2_override;
    std::size_t exact_limit = kExactDiameterLimit;
};

struct VerificationFlags
{
    bool proper = false;
    bool ridge_unique = false;
    bool boundary_preserved = false;
    bool pseudomanifold = false;
    bool connected = false;
    bool diameter_matches = false;
    bool within_upper_bound = false;
    bool vertex_budget = false;
    std::optional<bool> fvector;
    std::optional<bool> regular_bound;
    std::optional<bool> alpha_omega_bound;

    bool all() const
    {
        return proper && ridge_unique && boundary_preserved && pseudomanifold && connected
               && diameter_matches && within_upper_bound && vertex_budget && fvector.value_or(true)
               && regular_bound.value_or(true) && alpha_omega_bound.value_or(true);
    }
};

struct RunReport
{
    PipelineParams params;
    // stage parameters
    int window = 0;
    std::uint64_t t = 0;
    std::uint64_t s_formula = 0;
    std::uint64_t s_effective = 0;
    Color c2 = 0;
    int greedy_attempts = 0;
    bool class_bound_met = false;
    std::size_t max_class = 0;
    double mean_class = 0.0;
    std::uint64_t resamples = 0;
    // results
    std::size_t source_facets = 0;
    std::size_t quotient_vertices = 0;
    std::size_t quotient_facets = 0;
    std::optional<std::size_t> expected_diameter;
    std::optional<std::size_t> source_diameter;
    std::optional<std::size_t> diameter;
    std::string diameter_method;
    std::optional<std::size_t> alpha_omega_distance;
    std::optional<std::int64_t> alpha_omega_lower;
    std::optional<RegularBoundCheck> regular;
    double normalised_diameter = 0.0;
    double asymptotic_constant = 0.0;
    // bounds at n'
    long double hs_lower = 0, hs_upper = 0, hpm_lower = 0;
    PmUpperBound hpm_upper{};
    VerificationFlags flags;
    double wall_ms = 0.0;

    bool success() const { return flags.all(); }
};

namespace detail {

inline void check_pipeline_params(const PipelineParams& p)
{
    if (p.d < 3)
        throw Error(Errc::DimensionTooSmall, "pipeline needs d >= 3");
    if (p.c1 <= static_cast<Color>(6 * (p.d - 1)))
        throw Error(Errc::PreconditionViolated,
                    "pipeline needs c1 > 6(d - 1) = " + std::to_string(6 * (p.d - 1)));
    if (!(p.epsilon > 0.0))
        throw Error(Errc::InvalidSpec, "epsilon must be positive");
    if (p.mode == PipelineMode::Simplicial && p.n < static_cast<Vertex>(p.d))
        throw Error(Errc::InvalidSpec, "simplicial mode needs N >= d");
    if (p.mode == PipelineMode::Pseudomanifold && p.n < static_cast<Vertex>(p.d) + 2)
        throw Error(Errc::InvalidSpec, "pseudomanifold mode needs N >= d + 2");
}

}   // namespace detail

inline RunReport run_pipeline(const PipelineParams& p)
{
    detail::check_pipeline_params(p);
    const auto start = std::chrono::steady_clock::now();
    RunReport rep;
    rep.params = p;
    const bool pm = p.mode == PipelineMode::Pseudomanifold;

    const Complex host = straight_corridor({p.n, pm ? p.d + 1 : p.d});
    const Complex source = pm ? boundary_corridor(p.n, p.d) : host;
    const int codim = pm ? 2 : 1;

    Rng rng(p.seed);
    FirstColoringParams fp{p.c1, p.epsilon, 0};
    rep.window = effective_window(host, fp);
    FirstColoringOutcome first = balanced_first_coloring(host, fp, codim, rng, p.max_attempts);
    rep.greedy_attempts = first.attempts;
    rep.class_bound_met = first.bound_met;
    rep.max_class = first.max_class;
    rep.mean_class = first.mean_class;
    rep.s_formula = first.bound;
    if (!first.bound_met && p.strict_class_bound)
        throw Error(Errc::RetriesExhausted,
                    "no greedy coloring met S = " + std::to_string(first.bound) + " in "
                    + std::to_string(first.attempts) + " attempts (best max class "
                    + std::to_string(first.max_class) + ")");
    rep.s_effective = std::max<std::uint64_t>(first.bound, first.max_class);

    rep.t = intersecting_ridge_bound(pm ? ComplexShape::Boundary : ComplexShape::Corridor, p.d);
    rep.c2 = p.c2_override.value_or(lll_target_colors(rep.t, rep.s_effective, p.d));
    RefinementResult refined = moser_tardos_refine(
        source, first.coloring, RefinementParams{rep.t, rep.s_effective, rep.c2, p.max_resamples}, rng);
    rep.resamples = refined.resamples;

    const Coloring& product = refined.product;
    QuotientResult q = pattern_complex(source, product);
    rep.source_facets = source.facet_count();
    rep.quotient_vertices = q.quotient.n_vertices();
    rep.quotient_facets = q.quotient.facet_count();

    if (!pm)
        rep.expected_diameter = static_cast<std::size_t>(p.n) - static_cast<std::size_t>(p.d);

    // Independent re-checks; nothing below trusts the stage post-conditions.
    rep.flags.proper = verify_proper(source, product);
    rep.flags.ridge_unique = verify_unique_ridge_patterns(source, product).unique;
    QuotientReportOptions qopt{p.exact_limit, rep.expected_diameter};
    QuotientReport qr = quotient_report(source, q, qopt);
    rep.flags.boundary_preserved = qr.boundary_preserved;
    rep.flags.connected = qr.source_connected && qr.quotient_connected;
    rep.source_diameter = qr.source_diameter;
    rep.diameter = qr.quotient_diameter;
    rep.diameter_method = qr.diameter_method;
    rep.normalised_diameter = qr.normalised_diameter;
    rep.flags.vertex_budget = rep.quotient_vertices
                              <= static_cast<std::size_t>(p.c1) * static_cast<std::size_t>(rep.c2);

    if (pm)
    {
        rep.flags.pseudomanifold = qr.source_pseudomanifold && qr.quotient_pseudomanifold;
        rep.flags.fvector = qr.quotient_pseudomanifold && pm_fvector_check(q.quotient);
        rep.flags.diameter_matches = rep.diameter && rep.source_diameter && *rep.diameter == *rep.source_diameter;

        const DualGraph g = dual_graph(q.quotient);
        if (q.facet_map.size() == source.facet_count() && is_connected(g))
        {
            const std::size_t alpha = q.facet_map.front();
            const std::size_t omega = q.facet_map.back();
            rep.alpha_omega_distance = distance(g, alpha, omega);
            rep.alpha_omega_lower = diameter_lower_bound_boundary_ceil(p.n, p.d);
            rep.flags.alpha_omega_bound =
                static_cast<std::int64_t>(*rep.alpha_omega_distance) >= *rep.alpha_omega_lower;
            if (g.regular_degree())
            {
                rep.regular = check_regular_graph_bound(g);
                rep.flags.regular_bound = rep.regular->pass;
            }
            else
            {
                rep.flags.regular_bound = false;
            }
        }
        else
        {
            rep.flags.alpha_omega_bound = false;
            rep.flags.regular_bound = false;
        }
    }
    else
    {
        rep.flags.pseudomanifold = qr.source_pseudomanifold == qr.quotient_pseudomanifold;
        rep.flags.diameter_matches = rep.diameter && *rep.diameter == *rep.expected_diameter
                                     && (!rep.source_diameter || *rep.source_diameter == *rep.expected_diameter);
    }

    rep.hs_lower = hs_lower(rep.quotient_vertices, p.d);
    rep.hs_upper = hs_upper(rep.quotient_vertices, p.d);
    rep.hpm_lower = hpm_lower(rep.quotient_vertices, p.d);
    rep.hpm_upper = hpm_upper(rep.quotient_vertices, p.d);
    rep.asymptotic_constant = static_cast<double>(pm ? hpm_constant(p.d) : hs_constant(p.d));
    if (rep.diameter)
    {
        const long double upper = pm ? rep.hpm_upper.sharp : rep.hs_upper;
        rep.flags.within_upper_bound = static_cast<long double>(*rep.diameter) <= upper;
    }

    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

using Json = nlohmann::ordered_json;

template <typename T>
Json optional_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

/**
 * Report as JSON with a fixed field order. Timing lives under "volatile"
 * so two runs with equal parameters differ only there.
 */
inline Json to_json(const RunReport& r)
{
    Json j;
    j["mode"] = to_string(r.params.mode);
    j["prng"] = std::string(kRngName);
    j["params"] = {
        {"d", r.params.d},
        {"N", r.params.n},
        {"c1", r.params.c1},
        {"epsilon", r.params.epsilon},
        {"seed", r.params.seed},
        {"max_attempts", r.params.max_attempts},
        {"strict_class_bound", r.params.strict_class_bound},
        {"max_resamples", r.params.max_resamples},
        {"window", r.window},
        {"t", r.t},
        {"S_formula", r.s_formula},
        {"S", r.s_effective},
        {"c2", r.c2},
    };
    j["first_coloring"] = {
        {"attempts", r.greedy_attempts},
        {"retries", std::max(0, r.greedy_attempts - 1)},
        {"class_bound_met", r.class_bound_met},
        {"max_class", r.max_class},
        {"mean_class", r.mean_class},
    };
    Json results = {
        {"source_facets", r.source_facets},
        {"quotient_vertices", r.quotient_vertices},
        {"quotient_facets", r.quotient_facets},
        {"vertex_budget", static_cast<std::uint64_t>(r.params.c1) * r.c2},
        {"expected_diameter", optional_json(r.expected_diameter)},
        {"source_diameter", optional_json(r.source_diameter)},
        {"diameter", optional_json(r.diameter)},
        {"diameter_method", r.diameter_method},
        {"resamples", r.resamples},
        {"normalised_diameter", r.normalised_diameter},
        {"asymptotic_constant", r.asymptotic_constant},
    };
    if (r.alpha_omega_distance)
    {
        results["alpha_omega_distance"] = *r.alpha_omega_distance;
        results["alpha_omega_lower_bound"] = optional_json(r.alpha_omega_lower);
    }
    if (r.regular)
    {
        results["regular_graph"] = {
            {"degree", r.regular->degree},
            {"diameter", r.regular->actual},
            {"bound", static_cast<double>(r.regular->bound)},
        };
    }
    j["results"] = std::move(results);
    j["bounds"] = {
        {"n", r.quotient_vertices},
        {"hs_lower", static_cast<double>(r.hs_lower)},
        {"hs_upper", static_cast<double>(r.hs_upper)},
        {"hpm_lower", static_cast<double>(r.hpm_lower)},
        {"hpm_upper_sharp", static_cast<double>(r.hpm_upper.sharp)},
        {"hpm_upper_loose", static_cast<double>(r.hpm_upper.loose)},
        {"lower_bounds_asymptotic", true},
    };
    Json flags = {
        {"proper", r.flags.proper},
        {"ridge_unique", r.flags.ridge_unique},
        {"boundary_preserved", r.flags.boundary_preserved},
        {"pseudomanifold", r.flags.pseudomanifold},
        {"connected", r.flags.connected},
        {"diameter_matches", r.flags.diameter_matches},
        {"within_upper_bound", r.flags.within_upper_bound},
        {"vertex_budget", r.flags.vertex_budget},
    };
    if (r.flags.fvector)
        flags["fvector"] = *r.flags.fvector;
    if (r.flags.regular_bound)
        flags["regular_bound"] = *r.flags.regular_bound;
    if (r.flags.alpha_omega_bound)
        flags["alpha_omega_bound"] = *r.flags.alpha_omega_bound;
    j["verification"] = std::move(flags);
    j["success"] = r.success();
    j["volatile"] = {{"wall_ms", r.wall_ms}};
    return j;
}

// ------------------------------------------------------------------------
// Bench
// ------------------------------------------------------------------------

struct BenchGrid
{
    PipelineMode mode = PipelineMode::Simplicial;
    std::vector<int> dims;
    std::vector<Vertex> ns;
    std::vector<Color> c1s;
    int seeds = 1;
    std::uint64_t base_seed = 1;
    double epsilon = 0.2;
};

struct BenchRow
{
    int d = 0;
    Vertex n = 0;
    Color c1 = 0;
    std::string status;   // "ok", "partial", "failed", "precondition-failed"
    int runs = 0;
    int successes = 0;
    double mean_vertices = 0.0;
    std::size_t max_vertices = 0;
    double mean_resamples = 0.0;
    std::uint64_t max_resamples = 0;
    double mean_ratio = 0.0;
    double asymptotic_constant = 0.0;
    std::string first_error;
};

/**
 * Runs every (d, N, c1) cell of the grid. Cell k draws its run seeds from
 * mix_seed(base_seed, k), so results do not depend on which cells run
 * concurrently. Failures are recorded per cell.
 */
inline std::vector<BenchRow> run_bench(const BenchGrid& grid)
{
    struct Cell { int d; Vertex n; Color c1; std::uint64_t seed; };
    std::vector<Cell> cells;
    for (int d : grid.dims)
        for (Vertex n : grid.ns)
            for (Color c1 : grid.c1s)
                cells.push_back({d, n, c1, mix_seed(grid.base_seed, cells.size())});

    auto run_cell = [&grid](const Cell& cell) {
        BenchRow row;
        row.d = cell.d;
        row.n = cell.n;
        row.c1 = cell.c1;
        row.status = "ok";
        if (cell.d < 3 || cell.c1 <= static_cast<Color>(6 * (cell.d - 1)))
        {
            row.status = "precondition-failed";
            return row;
        }
        row.asymptotic_constant = static_cast<double>(
            grid.mode == PipelineMode::Simplicial ? hs_constant(cell.d) : hpm_constant(cell.d));
        for (int s = 0; s < grid.seeds; ++s)
        {
            ++row.runs;
            PipelineParams p;
            p.mode = grid.mode;
            p.d = cell.d;
            p.n = cell.n;
            p.c1 = cell.c1;
            p.epsilon = grid.epsilon;
            p.seed = mix_seed(cell.seed, static_cast<std::uint64_t>(s));
            try
            {
                RunReport r = run_pipeline(p);
                if (!r.success())
                {
                    if (row.first_error.empty())
                        row.first_error = "verification failed";
                    continue;
                }
                ++row.successes;
                row.mean_vertices += static_cast<double>(r.quotient_vertices);
                row.max_vertices = std::max(row.max_vertices, r.quotient_vertices);
                row.mean_resamples += static_cast<double>(r.resamples);
                row.max_resamples = std::max(row.max_resamples, r.resamples);
                row.mean_ratio += r.normalised_diameter;
            }
            catch (const Error& e)
            {
                if (row.first_error.empty())
                    row.first_error = e.what();
                if (e.code() == Errc::PreconditionViolated || e.code() == Errc::InvalidSpec
                    || e.code() == Errc::DimensionTooSmall)
                {
                    row.status = "precondition-failed";
                    return row;
                }
            }
        }
        if (row.successes > 0)
        {
            row.mean_vertices /= row.successes;
            row.mean_resamples /= row.successes;
            row.mean_ratio /= row.successes;
        }
        row.status = row.successes == row.runs ? "ok" : row.successes > 0 ? "partial" : "failed";
        return row;
    };

    std::vector<std::future<BenchRow>> futures;
    futures.reserve(cells.size());
    for (const Cell& cell : cells)
        futures.push_back(std::async(std::launch::async, run_cell, cell));
    std::vector<BenchRow> rows;
    rows.reserve(cells.size());
    for (auto& f : futures)
        rows.push_back(f.get());
    return rows;
}

inline Json to_json(const BenchRow& r)
{
    return Json{
        {"d", r.d},
        {"N", r.n},
        {"c1", r.c1},
        {"status", r.status},
        {"runs", r.runs},
        {"successes", r.successes},
        {"mean_vertices", r.mean_vertices},
        {"max_vertices", r.max_vertices},
        {"mean_resamples", r.mean_resamples},
        {"max_resamples", r.max_resamples},
        {"mean_ratio", r.mean_ratio},
        {"asymptotic_constant", r.asymptotic_constant},
        {"error", r.first_error},
    };
}

}   // namespace scdiam

#endif
