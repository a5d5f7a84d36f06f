// Builds a small non-row-finite graph in code and walks through its
// invariants: structural conditions, the gauge-invariant ideal lattice,
// primitive ideals, and K-theory.

#include <iostream>

#include "gia/graph.hpp"
#include "gia/ideals.hpp"
#include "gia/ktheory.hpp"
#include "gia/primitive.hpp"

int main() {
    using namespace gia;

    // u ->() u, u -> v, v =(inf)=> w, w ->() w
    Graph g({"u", "v", "w"});
    g.add_edge("u", "u", 1);
    g.add_edge("u", "v", 1);
    g.add_edge("v", "w", Multiplicity::infinity());
    g.add_edge("w", "w", 1);

    std::cout << "row-finite: " << std::boolalpha << is_row_finite(g) << "\n";
    std::cout << "Condition (K): " << satisfies_condition_k(g) << "\n";
    std::cout << "simple: " << is_simple_algebra(g) << "\n\n";

    std::cout << "gauge-invariant ideals:\n";
    for (const Ideal& ideal : gauge_invariant_ideals(g))
        std::cout << "  " << ideal_label(g, ideal) << "\n";

    std::cout << "\ngauge-invariant primitive ideals:\n";
    for (const Ideal& ideal : gauge_invariant_primitive_ideals(g))
        std::cout << "  " << ideal_label(g, ideal) << "\n";

    auto [k0, k1] = k_groups(g);
    std::cout << "\nK0: free rank " << k0.free_rank << ", torsion factors " << k0.torsion.size()
              << "\nK1: free rank " << k1.free_rank << "\n";
    return 0;
}
