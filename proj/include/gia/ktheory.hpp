#pragma once

#include <utility>
#include <vector>

#include "gia/ideals.hpp"
#include "gia/matrix.hpp"

namespace gia {

/// Finitely generated abelian group in invariant-factor form: factors are
/// at least 2 and each divides the next.
struct AbelianGroup {
    std::vector<BigInt> torsion;
    int free_rank = 0;

    bool is_trivial() const { return torsion.empty() && free_rank == 0; }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Vertex matrix split by emitter type: V collects the finite emitters, W
/// the sinks and infinite emitters. Rows of b and c are indexed by V, so
/// every entry is finite.
struct BlockSplit {
    VertexSet v_list;
    VertexSet w_list;
    IntMatrix b;  // |V| x |V|
    IntMatrix c;  // |V| x |W|
};

inline BlockSplit block_split(const Graph& g) {
    std::vector<int> vs, ws;
    for (int x = 0; x < g.vertex_count(); ++x) {
        Multiplicity deg = out_degree(g, x);
        if (deg.is_zero() || deg.is_infinite())
            ws.push_back(x);
        else
            vs.push_back(x);
    }
    BlockSplit split{VertexSet(std::move(vs)), VertexSet(std::move(ws)),
                     IntMatrix(0, 0), IntMatrix(0, 0)};
    int nv = static_cast<int>(split.v_list.size());
    int nw = static_cast<int>(split.w_list.size());
    split.b = IntMatrix(nv, nv);
    split.c = IntMatrix(nv, nw);
    for (int i = 0; i < nv; ++i) {
        int src = split.v_list.members()[static_cast<std::size_t>(i)];
        for (int j = 0; j < nv; ++j)
            split.b.at(i, j) =
                g.multiplicity(src, split.v_list.members()[static_cast<std::size_t>(j)])
                    .finite_value();
        for (int j = 0; j < nw; ++j)
            split.c.at(i, j) =
                g.multiplicity(src, split.w_list.members()[static_cast<std::size_t>(j)])
                    .finite_value();
    }
    return split;
}

/// The K-theory map as a (|V|+|W|) x |V| integer matrix: (I - Bᵗ) stacked
/// over -Cᵗ, rows ordered V then W.
inline IntMatrix k_map_matrix(const Graph& g) {
    BlockSplit split = block_split(g);
    int nv = static_cast<int>(split.v_list.size());
    int nw = static_cast<int>(split.w_list.size());
    IntMatrix k(nv + nw, nv);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            k.at(i, j) = (i == j ? 1 : 0) - split.b.at(j, i);
    for (int i = 0; i < nw; ++i)
        for (int j = 0; j < nv; ++j) k.at(nv + i, j) = -split.c.at(j, i);
    return k;
}

struct KGroups {
    AbelianGroup k0;
    AbelianGroup k1;

    friend bool operator==(const KGroups&, const KGroups&) = default;
};

/// K₀ = cokernel and K₁ = kernel of the K-theory map, read off the Smith
/// normal form. Kernels of integer matrices are free, so K₁ carries no
/// torsion.
inline KGroups k_groups(const Graph& g) {
    IntMatrix k = k_map_matrix(g);
    SmithForm snf = smith_normal_form(k);
    int r = snf.rank();
    KGroups out;
    out.k1.free_rank = k.cols() - r;
    out.k0.free_rank = k.rows() - r;
    for (const BigInt& d : snf.d)
        if (d >= 2) out.k0.torsion.push_back(d);
    return out;
}

/// K-groups of the ideal generated by a nonempty hereditary set, via its
/// induced subgraph (Morita invariance).
inline KGroups k_groups_of_ideal(const Graph& g, const VertexSet& h) {
    if (h.empty())
        throw std::invalid_argument("k_groups_of_ideal: the zero ideal has no graph");
    return k_groups(ideal_graph(g, h));
}

/// K-groups of the quotient algebra by J_{H,B}, via the quotient graph.
inline KGroups k_groups_of_quotient(const Graph& g, const Ideal& ideal) {
    validate_ideal(g, ideal);
    if (static_cast<int>(ideal.h.size()) == g.vertex_count())
        throw std::invalid_argument(
            "k_groups_of_quotient: quotient by the whole algebra is the zero algebra");
    return k_groups(quotient_graph(g, ideal));
}

}  // namespace gia
