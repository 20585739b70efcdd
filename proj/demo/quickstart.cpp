// Shrinks the straight corridor SC(N, 3) to a complex on far fewer vertices
// with the same dual graph, step by step.

#include <cstdlib>
#include <iostream>

#include "scdiam/scdiam.hpp"

int main(int argc, char** argv)
{
    using namespace scdiam;
    const Vertex n = argc > 1 ? static_cast<Vertex>(std::atoi(argv[1])) : 2000;
    const int d = 3;

    Complex corridor = straight_corridor({n, d});
    std::cout << "SC(" << n << ", " << d << "): " << corridor.facet_count() << " facets, diameter "
              << diameter_exact(dual_graph(corridor)) << '\n';

    Rng rng(2024);
    FirstColoringParams first{13, 0.2, 0};
    FirstColoringOutcome f = balanced_first_coloring(corridor, first, 1, rng);
    const std::uint64_t s = std::max<std::uint64_t>(f.bound, f.max_class);
    const std::uint64_t t = intersecting_ridge_bound(ComplexShape::Corridor, d);
    const Color c2 = lll_target_colors(t, s, d);
    std::cout << "first coloring: max class " << f.max_class << " (bound " << f.bound << "), c2 = " << c2 << '\n';

    RefinementResult refined = moser_tardos_refine(corridor, f.coloring, {t, s, c2}, rng);
    QuotientResult q = pattern_complex(corridor, refined.product);
    std::cout << "after " << refined.resamples << " resamples: " << q.quotient.n_vertices() << " vertices, "
              << "diameter " << diameter_exact(dual_graph(q.quotient)) << ", boundary preserved: "
              << std::boolalpha << verify_boundary_preservation(corridor, q) << '\n';
    return 0;
}
