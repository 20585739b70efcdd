// Command-line front end: build, color, refine, quotient, verify, diameter,
// bounds, pipeline and bench.
//
// Exit codes: 0 success, 1 verification failure, 2 parameter error,
// 3 resample or retry exhaustion.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scdiam/scdiam.hpp"

using namespace scdiam;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitParam = 2;
constexpr int kExitExhausted = 3;

struct Globals
{
    std::uint64_t seed = 1;
    bool json = false;
    bool quiet = false;
};

int exit_code_for(Errc code)
{
    switch (code)
    {
        case Errc::ResampleCapExceeded:
        case Errc::RetriesExhausted:
            return kExitExhausted;
        case Errc::DisconnectedGraph:
            return kExitVerify;
        default:
            return kExitParam;
    }
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::InvalidSpec, "cannot write " + path);
    out << text;
}

void emit(const Globals& g, const Json& j)
{
    if (!g.quiet)
        std::cout << j.dump(2) << '\n';
}

// ------------------------------------------------------------------------

struct BuildOpts
{
    std::string kind;
    Vertex n = 0;
    int dim = 0;
    std::string out;
    std::string labels;
};

int cmd_build(const Globals& g, const BuildOpts& o)
{
    Complex c = o.kind == "corridor" ? straight_corridor({o.n, o.dim}) : boundary_corridor(o.n, o.dim);
    write_file(o.out, to_text(c));
    if (!o.labels.empty())
    {
        if (o.kind != "boundary")
            throw Error(Errc::InvalidSpec, "--labels is only defined for boundary corridors");
        std::ostringstream labels;
        write_labels(labels, c);
        write_file(o.labels, labels.str());
    }
    if (!g.quiet)
    {
        if (g.json)
            emit(g, Json{{"kind", o.kind}, {"vertices", c.n_vertices()}, {"facet_size", c.facet_size()},
                         {"facets", c.facet_count()}});
        else
            std::cout << "wrote " << c.facet_count() << " facets to " << o.out << '\n';
    }
    return kExitOk;
}

// ------------------------------------------------------------------------

struct ColorOpts
{
    std::string in;
    std::string out;
    Color c1 = 13;
    double epsilon = 0.1;
    int codim = 1;
    int window = 0;
    int attempts = 11;
};

int cmd_color(const Globals& g, const ColorOpts& o)
{
    Complex c = load_complex(o.in);
    Rng rng(g.seed);
    FirstColoringParams p{o.c1, o.epsilon, o.window};
    FirstColoringOutcome first = balanced_first_coloring(c, p, o.codim, rng, o.attempts);
    write_file(o.out, to_text(first.coloring));

    const std::uint64_t s = std::max<std::uint64_t>(first.bound, first.max_class);
    // Refinement target implied by the coloring: codim 1 refines the corridor
    // itself, codim 2 refines the boundary of the corridor (facet size d - 1).
    const bool boundary = o.codim == 2;
    const int refine_d = boundary ? c.facet_size() - 1 : c.facet_size();
    Json stats{
        {"S_formula", first.bound},
        {"S", s},
        {"histogram_max", first.max_class},
        {"histogram_mean", first.mean_class},
        {"attempts", first.attempts},
        {"class_bound_met", first.bound_met},
        {"window", effective_window(c, p)},
        {"t", nullptr},
        {"c2", nullptr},
        {"resamples", 0},
        {"seed", g.seed},
    };
    if ((o.codim == 1 || boundary) && refine_d >= 3)
    {
        auto t = intersecting_ridge_bound(boundary ? ComplexShape::Boundary : ComplexShape::Corridor, refine_d);
        stats["t"] = t;
        stats["c2"] = lll_target_colors(t, s, refine_d);
    }
    emit(g, stats);
    return kExitOk;
}

// ------------------------------------------------------------------------

struct RefineOpts
{
    std::string in;
    std::string coloring;
    std::string out;
    std::string shape = "corridor";
    std::optional<Color> c2;
    std::optional<std::uint64_t> s;
    std::uint64_t max_resamples = 1000000;
};

int cmd_refine(const Globals& g, const RefineOpts& o)
{
    Complex c = load_complex(o.in);
    Coloring f = load_coloring(o.coloring);
    const int d = c.facet_size();
    const auto t = intersecting_ridge_bound(o.shape == "boundary" ? ComplexShape::Boundary
                                                                  : ComplexShape::Corridor, d);
    const std::uint64_t s = o.s.value_or(pattern_class_histogram(c, f, 1).max_class);
    const Color c2 = o.c2.value_or(lll_target_colors(t, s, d));
    Rng rng(g.seed);
    RefinementResult r = moser_tardos_refine(c, f, RefinementParams{t, s, c2, o.max_resamples}, rng);
    write_file(o.out, to_text(r.product));
    emit(g, Json{
                {"S", s},
                {"t", t},
                {"c2", c2},
                {"histogram_max", pattern_class_histogram(c, f, 1).max_class},
                {"resamples", r.resamples},
                {"colors", r.product.color_count()},
                {"seed", g.seed},
            });
    return kExitOk;
}

// ------------------------------------------------------------------------

Json to_json(const QuotientReport& r)
{
    return Json{
        {"source_vertices", r.source_vertices},
        {"quotient_vertices", r.quotient_vertices},
        {"facets", r.facet_count},
        {"quotient_facets", r.quotient_facet_count},
        {"source_pseudomanifold", r.source_pseudomanifold},
        {"quotient_pseudomanifold", r.quotient_pseudomanifold},
        {"source_connected", r.source_connected},
        {"quotient_connected", r.quotient_connected},
        {"boundary_preserved", r.boundary_preserved},
        {"source_diameter", optional_json(r.source_diameter)},
        {"quotient_diameter", optional_json(r.quotient_diameter)},
        {"diameter_method", r.diameter_method},
        {"normalised_diameter", r.normalised_diameter},
        {"hs_upper_ratio", r.hs_upper_ratio},
        {"hpm_upper_ratio", optional_json(r.hpm_upper_ratio)},
    };
}

struct QuotientOpts
{
    std::string in;
    std::string coloring;
    std::string out;
    std::string report;
};

int cmd_quotient(const Globals& g, const QuotientOpts& o)
{
    Complex c = load_complex(o.in);
    Coloring f = load_coloring(o.coloring);
    QuotientResult q = pattern_complex(c, f);
    write_file(o.out, to_text(q.quotient));
    if (!q.facets_injective && !g.quiet)
        std::cerr << "warning: two facets share a pattern; the quotient need not preserve the dual graph\n";
    if (!o.report.empty())
        write_file(o.report, to_json(quotient_report(c, q)).dump(2) + "\n");
    if (!g.quiet && !g.json)
        std::cout << "quotient: " << q.quotient.n_vertices() << " vertices, " << q.quotient.facet_count()
                  << " facets\n";
    else if (g.json)
        emit(g, Json{{"vertices", q.quotient.n_vertices()}, {"facets", q.quotient.facet_count()},
                     {"facets_injective", q.facets_injective}, {"ridge_bijection", q.ridge_map.has_value()}});
    return kExitOk;
}

// ------------------------------------------------------------------------

struct VerifyOpts
{
    std::string in;
    std::string coloring;
    std::string against;
    bool require_pseudomanifold = false;
};

std::vector<std::vector<Vertex>> sorted_facets(const Complex& c)
{
    std::vector<std::vector<Vertex>> out;
    for (std::size_t i = 0; i < c.facet_count(); ++i)
        out.emplace_back(c.facet(i).begin(), c.facet(i).end());
    std::sort(out.begin(), out.end());
    return out;
}

int cmd_verify(const Globals& g, const VerifyOpts& o)
{
    Complex c = load_complex(o.in);
    Json checks = Json::object();
    bool ok = true;
    auto record = [&](const std::string& name, bool pass, bool required) {
        checks[name] = pass;
        if (required && !pass)
            ok = false;
    };

    const bool pm = is_pseudomanifold(c);
    record("connected", is_strongly_connected(c), true);
    if (o.coloring.empty())
    {
        record("pseudomanifold", pm, o.require_pseudomanifold);
    }
    else
    {
        Coloring f = load_coloring(o.coloring);
        const bool proper = verify_proper(c, f);
        record("proper", proper, true);
        auto unique = verify_unique_ridge_patterns(c, f);
        record("ridge_unique", unique.unique, true);
        if (unique.witness)
        {
            Json w = Json::array({unique.witness->first, unique.witness->second});
            checks["ridge_collision"] = w;
        }
        bool preserved = false;
        bool quotient_pm = false;
        if (proper)
        {
            QuotientResult q = pattern_complex(c, f);
            preserved = q.ridge_map && verify_boundary_preservation(c, q);
            quotient_pm = is_pseudomanifold(q.quotient);
            if (!o.against.empty())
            {
                Complex given = load_complex(o.against);
                record("matches_against", given.n_vertices() == q.quotient.n_vertices()
                                              && sorted_facets(given) == sorted_facets(q.quotient),
                       true);
            }
        }
        record("boundary_preserved", preserved, true);
        record("pseudomanifold", pm, o.require_pseudomanifold);
        record("pseudomanifold_preserved", proper && pm == quotient_pm, true);
    }
    checks["ok"] = ok;
    if (g.json)
        emit(g, checks);
    else if (!g.quiet)
        for (auto& [name, value] : checks.items())
            std::cout << std::left << std::setw(26) << name << (value.get<bool>() ? "pass" : "FAIL") << '\n';
    return ok ? kExitOk : kExitVerify;
}

// ------------------------------------------------------------------------

struct DiameterOpts
{
    std::string in;
    std::string mode = "all";
    std::size_t from = 0;
    std::size_t to = 0;
    bool force = false;
};

int cmd_diameter(const Globals& g, const DiameterOpts& o)
{
    Complex c = load_complex(o.in);
    DualGraph graph = dual_graph(c);
    DiameterOptions opt;
    if (o.mode == "all")
    {
        if (graph.node_count() > kExactDiameterLimit && !o.force)
            throw Error(Errc::InvalidSpec, "more than " + std::to_string(kExactDiameterLimit)
                                               + " facets: pass --force for all-sources BFS or use --mode sweep");
        opt.mode = DiameterMode::AllSources;
    }
    else if (o.mode == "pair")
    {
        opt.mode = DiameterMode::Pair;
        opt.from = o.from;
        opt.to = o.to;
    }
    else
    {
        opt.mode = DiameterMode::DoubleSweep;
        opt.from = o.from;
    }
    DiameterResult r = diameter(graph, opt);
    if (g.json)
        emit(g, Json{{"mode", o.mode}, {"value", r.value}, {"facets", graph.node_count()},
                     {"exact", opt.mode != DiameterMode::DoubleSweep}});
    else if (!g.quiet)
        std::cout << r.value << (opt.mode == DiameterMode::DoubleSweep ? " (lower bound)" : "") << '\n';
    return kExitOk;
}

// ------------------------------------------------------------------------

int cmd_bounds(const Globals& g, std::uint64_t n, int d)
{
    BoundReport b = bound_report(n, d);
    if (g.json)
    {
        emit(g, Json{
                    {"n", n},
                    {"d", d},
                    {"hs_lower", static_cast<double>(b.hs_lower)},
                    {"hs_upper", static_cast<double>(b.hs_upper)},
                    {"hpm_lower", static_cast<double>(b.hpm_lower)},
                    {"hpm_upper_sharp", static_cast<double>(b.hpm_upper.sharp)},
                    {"hpm_upper_loose", static_cast<double>(b.hpm_upper.loose)},
                    {"lower_bounds_asymptotic", true},
                    {"regular_graph_bound", "diam(G) <= 3 n / (k + 1) for connected k-regular G"},
                });
        return kExitOk;
    }
    if (g.quiet)
        return kExitOk;
    std::cout << std::setprecision(12)
              << "n = " << n << ", d = " << d << "\n"
              << "hs_lower   n^(d-1)/(4e d^2 d!)      " << b.hs_lower << "  (asymptotic)\n"
              << "hs_upper   n^(d-1)/((d-1)(d-1)!)    " << b.hs_upper << "\n"
              << "hpm_lower  n^(d-1)/(4e d^4 d!)      " << b.hpm_lower << "  (asymptotic)\n"
              << "hpm_upper  6 C(n,d-1)/(d(d+1))      " << b.hpm_upper.sharp << "\n"
              << "           6 n^(d-1)/(d+1)!         " << b.hpm_upper.loose << "\n"
              << "regular    diam(G) <= 3 n/(k+1) for connected k-regular G\n";
    return kExitOk;
}

// ------------------------------------------------------------------------

struct PipelineOpts
{
    std::string mode = "simplicial";
    int dim = 3;
    Vertex n = 40;
    Color c1 = 13;
    double epsilon = 0.2;
    bool strict = false;
    std::uint64_t max_resamples = 1000000;
    std::optional<Color> c2;
    std::string out;
};

int cmd_pipeline(const Globals& g, const PipelineOpts& o)
{
    PipelineParams p;
    p.mode = o.mode == "simplicial" ? PipelineMode::Simplicial : PipelineMode::Pseudomanifold;
    p.d = o.dim;
    p.n = o.n;
    p.c1 = o.c1;
    p.epsilon = o.epsilon;
    p.seed = g.seed;
    p.strict_class_bound = o.strict;
    p.max_resamples = o.max_resamples;
    p.c2_override = o.c2;
    RunReport r = run_pipeline(p);
    Json j = to_json(r);
    if (!o.out.empty())
        write_file(o.out, j.dump(2) + "\n");
    if (g.json)
    {
        emit(g, j);
    }
    else if (!g.quiet)
    {
        std::cout << to_string(p.mode) << " d=" << p.d << " N=" << p.n << " c1=" << p.c1 << " c2=" << r.c2
                  << " S=" << r.s_effective << "\n"
                  << "quotient: " << r.quotient_vertices << " vertices, " << r.quotient_facets
                  << " facets, diameter " << (r.diameter ? std::to_string(*r.diameter) : "?")
                  << ", resamples " << r.resamples << "\n"
                  << "normalised diameter " << r.normalised_diameter << " (asymptotic constant "
                  << r.asymptotic_constant << ")\n"
                  << (r.success() ? "all checks passed" : "VERIFICATION FAILED") << '\n';
    }
    return r.success() ? kExitOk : kExitVerify;
}

// ------------------------------------------------------------------------

struct BenchOpts
{
    std::string mode = "simplicial";
    std::vector<int> dims;
    std::vector<Vertex> ns;
    std::vector<Color> c1s;
    int seeds = 3;
    double epsilon = 0.2;
};

int cmd_bench(const Globals& g, const BenchOpts& o)
{
    BenchGrid grid;
    grid.mode = o.mode == "simplicial" ? PipelineMode::Simplicial : PipelineMode::Pseudomanifold;
    grid.dims = o.dims;
    grid.ns = o.ns;
    grid.c1s = o.c1s;
    grid.seeds = o.seeds;
    grid.base_seed = g.seed;
    grid.epsilon = o.epsilon;
    std::vector<BenchRow> rows = run_bench(grid);
    if (g.json)
    {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(to_json(r));
        emit(g, arr);
    }
    else if (!g.quiet)
    {
        std::cout << std::left << std::setw(4) << "d" << std::setw(10) << "N" << std::setw(6) << "c1"
                  << std::setw(22) << "status" << std::setw(8) << "ok" << std::setw(12) << "mean n'"
                  << std::setw(10) << "max n'" << std::setw(14) << "mean resamp" << std::setw(14)
                  << "mean ratio" << "constant\n";
        for (const auto& r : rows)
            std::cout << std::left << std::setw(4) << r.d << std::setw(10) << r.n << std::setw(6) << r.c1
                      << std::setw(22) << r.status << std::setw(8)
                      << (std::to_string(r.successes) + "/" + std::to_string(r.runs)) << std::setw(12)
                      << r.mean_vertices << std::setw(10) << r.max_vertices << std::setw(14) << r.mean_resamples
                      << std::setw(14) << r.mean_ratio << r.asymptotic_constant << '\n';
    }
    return kExitOk;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Randomized large-diameter simplicial complexes and pseudomanifolds"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "PRNG seed");
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_flag("--quiet", g.quiet, "Suppress normal output");

    int rc = kExitOk;

    BuildOpts build;
    auto* build_cmd = app.add_subcommand("build", "Write a straight corridor or its boundary");
    build_cmd->add_option("kind", build.kind)->required()->check(CLI::IsMember({"corridor", "boundary"}));
    build_cmd->add_option("--n", build.n, "Vertex count N")->required();
    build_cmd->add_option("--dim", build.dim, "Facet size d")->required();
    build_cmd->add_option("--out", build.out)->required();
    build_cmd->add_option("--labels", build.labels, "Also write one facet label per line");
    build_cmd->callback([&] { rc = cmd_build(g, build); });

    ColorOpts color;
    auto* color_cmd = app.add_subcommand("color", "Greedy window coloring of a straight corridor");
    color_cmd->add_option("--in", color.in)->required();
    color_cmd->add_option("--out", color.out)->required();
    color_cmd->add_option("--c1", color.c1)->required();
    color_cmd->add_option("--epsilon", color.epsilon)->required();
    color_cmd->add_option("--codim", color.codim, "Codimension of the balanced faces");
    color_cmd->add_option("--window", color.window, "Distinctness window (default 2(d-1))");
    color_cmd->add_option("--attempts", color.attempts, "Greedy draws before settling");
    color_cmd->callback([&] { rc = cmd_color(g, color); });

    RefineOpts refine;
    auto* refine_cmd = app.add_subcommand("refine", "Moser-Tardos refinement to unique ridge patterns");
    refine_cmd->add_option("--in", refine.in)->required();
    refine_cmd->add_option("--coloring", refine.coloring)->required();
    refine_cmd->add_option("--out", refine.out)->required();
    refine_cmd->add_option("--shape", refine.shape)->check(CLI::IsMember({"corridor", "boundary"}));
    refine_cmd->add_option("--c2", refine.c2);
    refine_cmd->add_option("--S", refine.s, "Class-size bound (default: observed maximum)");
    refine_cmd->add_option("--max-resamples", refine.max_resamples);
    refine_cmd->callback([&] { rc = cmd_refine(g, refine); });

    QuotientOpts quotient;
    auto* quotient_cmd = app.add_subcommand("quotient", "Pattern complex of a colored complex");
    quotient_cmd->add_option("--in", quotient.in)->required();
    quotient_cmd->add_option("--coloring", quotient.coloring)->required();
    quotient_cmd->add_option("--out", quotient.out)->required();
    quotient_cmd->add_option("--report", quotient.report, "Write a JSON quotient report");
    quotient_cmd->callback([&] { rc = cmd_quotient(g, quotient); });

    VerifyOpts verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the predicate suite");
    verify_cmd->add_option("--in", verify.in)->required();
    verify_cmd->add_option("--coloring", verify.coloring);
    verify_cmd->add_option("--against", verify.against, "Quotient file to compare with");
    verify_cmd->add_flag("--require-pseudomanifold", verify.require_pseudomanifold);
    verify_cmd->callback([&] { rc = cmd_verify(g, verify); });

    DiameterOpts diam;
    auto* diam_cmd = app.add_subcommand("diameter", "Dual-graph diameter");
    diam_cmd->add_option("--in", diam.in)->required();
    diam_cmd->add_option("--mode", diam.mode)->check(CLI::IsMember({"all", "pair", "sweep"}));
    diam_cmd->add_option("--from", diam.from, "Facet index (0-based)");
    diam_cmd->add_option("--to", diam.to, "Facet index (0-based)");
    diam_cmd->add_flag("--force", diam.force, "Run all-sources BFS above the size limit");
    diam_cmd->callback([&] { rc = cmd_diameter(g, diam); });

    std::uint64_t bounds_n = 0;
    int bounds_d = 3;
    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the diameter bounds");
    bounds_cmd->add_option("--n", bounds_n)->required();
    bounds_cmd->add_option("--dim", bounds_d)->required();
    bounds_cmd->callback([&] { rc = cmd_bounds(g, bounds_n, bounds_d); });

    PipelineOpts pipe;
    auto* pipe_cmd = app.add_subcommand("pipeline", "Build, color, refine, quotient and verify");
    pipe_cmd->add_option("--mode", pipe.mode)->check(CLI::IsMember({"simplicial", "pseudomanifold"}));
    pipe_cmd->add_option("--dim", pipe.dim);
    pipe_cmd->add_option("--n", pipe.n);
    pipe_cmd->add_option("--c1", pipe.c1);
    pipe_cmd->add_option("--epsilon", pipe.epsilon);
    pipe_cmd->add_option("--c2", pipe.c2);
    pipe_cmd->add_option("--max-resamples", pipe.max_resamples);
    pipe_cmd->add_flag("--strict", pipe.strict, "Fail if no greedy draw meets the class-size bound");
    pipe_cmd->add_option("--out", pipe.out, "Write the JSON report here");
    pipe_cmd->callback([&] { rc = cmd_pipeline(g, pipe); });

    BenchOpts bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run the pipeline over a parameter grid");
    bench_cmd->add_option("--mode", bench.mode)->check(CLI::IsMember({"simplicial", "pseudomanifold"}));
    bench_cmd->add_option("--dims", bench.dims)->delimiter(',');
    bench_cmd->add_option("--ns", bench.ns)->delimiter(',');
    bench_cmd->add_option("--c1s", bench.c1s)->delimiter(',');
    bench_cmd->add_option("--seeds", bench.seeds);
    bench_cmd->add_option("--epsilon", bench.epsilon);
    bench_cmd->callback([&] { rc = cmd_bench(g, bench); });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParam;
    }
    catch (const Error& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParam;
    }
    return rc;
}
