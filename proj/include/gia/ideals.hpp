#pragma once

#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gia/hereditary.hpp"

namespace gia {

/// Combinatorial name of a gauge-invariant ideal: a saturated hereditary set
/// H together with a subset B of its breaking vertices. (∅, ∅) is the zero
/// ideal; (E⁰, ∅) is the whole algebra. Distinct pairs name distinct ideals.
struct Ideal {
    VertexSet h;
    VertexSet b;

    friend bool operator==(const Ideal&, const Ideal&) = default;
};

inline bool canonical_less(const Ideal& a, const Ideal& b) {
    if (!(a.h == b.h)) return canonical_less(a.h, b.h);
    return canonical_less(a.b, b.b);
}

/// Validates (H, B) against a graph: H saturated hereditary, B within the
/// breaking vertices of H. Throws on the first violated condition;
/// deliberately strict, no silent normalization.
inline void validate_ideal(const Graph& g, const Ideal& ideal) {
    if (!is_hereditary(g, ideal.h))
        throw std::invalid_argument("ideal: H is not hereditary");
    if (!is_saturated(g, ideal.h))
        throw std::invalid_argument("ideal: H is not saturated");
    if (!ideal.b.is_subset_of(breaking_vertices_of(g, ideal.h)))
        throw std::invalid_argument("ideal: B is not a subset of the breaking vertices of H");
}

inline Ideal make_ideal(const Graph& g, VertexSet h, VertexSet b) {
    Ideal ideal{std::move(h), std::move(b)};
    validate_ideal(g, ideal);
    return ideal;
}

/// The ideal generated by the vertex projections of a hereditary set: its
/// canonical name saturates H and takes no breaking vertices.
inline Ideal ideal_generated_by(const Graph& g, const VertexSet& h) {
    if (!is_hereditary(g, h))
        throw std::invalid_argument("ideal_generated_by: set is not hereditary");
    return Ideal{saturate(g, h), VertexSet()};
}

inline std::string beta_vertex_id(std::string_view source_id) {
    return "beta(" + std::string(source_id) + ")";
}

inline bool is_beta_vertex_id(std::string_view id) { return id.starts_with("beta("); }

/// Quotient graph E/H: drop H and every edge into it, then graft one fresh
/// sink beta(v) per breaking vertex v of H, receiving a copy of every
/// surviving edge into v.
inline Graph quotient_graph(const Graph& g, const VertexSet& h) {
    VertexSet betas = breaking_vertices_of(g, h);  // validates H
    VertexSet kept = complement(g, h);
    Graph q;
    for (int v : kept) q.add_vertex(g.id_of(v));
    for (int v : betas) q.add_vertex(beta_vertex_id(g.id_of(v)));
    for (const auto& [key, m] : g.edges()) {
        auto [src, dst] = key;
        if (h.contains(dst)) continue;  // src outside H too: H is hereditary
        q.add_edge(g.id_of(src), g.id_of(dst), m);
        if (betas.contains(dst))
            q.add_edge(g.id_of(src), beta_vertex_id(g.id_of(dst)), m);
    }
    return q;
}

/// Quotient by J_{H,B}: the quotient by H with the sinks beta(B) removed.
inline Graph quotient_graph(const Graph& g, const Ideal& ideal) {
    validate_ideal(g, ideal);
    Graph q = quotient_graph(g, ideal.h);
    std::vector<int> kept;
    for (int v = 0; v < q.vertex_count(); ++v) kept.push_back(v);
    std::vector<int> removed;
    for (int v : ideal.b) removed.push_back(q.index_of(beta_vertex_id(g.id_of(v))));
    VertexSet keep = set_difference(VertexSet(std::move(kept)), VertexSet(std::move(removed)));
    return induced_subgraph(q, keep);
}

/// Intersection of ideals: H = ∩ Hᵢ and B = (∩ (Hᵢ ∪ Bᵢ)) ∩ (breaking
/// vertices of H).
inline Ideal meet(const Graph& g, std::span<const Ideal> ideals) {
    if (ideals.empty()) throw std::invalid_argument("meet: empty ideal list");
    for (const Ideal& ideal : ideals) validate_ideal(g, ideal);
    VertexSet h = ideals.front().h;
    VertexSet b_acc = set_union(ideals.front().h, ideals.front().b);
    for (const Ideal& ideal : ideals.subspan(1)) {
        h = set_intersection(h, ideal.h);
        b_acc = set_intersection(b_acc, set_union(ideal.h, ideal.b));
    }
    return Ideal{h, set_intersection(b_acc, breaking_vertices_of(g, h))};
}

inline Ideal meet(const Graph& g, const Ideal& a, const Ideal& b) {
    const Ideal pair[] = {a, b};
    return meet(g, pair);
}

/// Containment of ideals: J_{H₁,B₁} ⊆ J_{H₂,B₂} iff H₁ ⊆ H₂ and B₁ ⊆ H₂ ∪ B₂.
inline bool leq(const Graph& g, const Ideal& a, const Ideal& b) {
    validate_ideal(g, a);
    validate_ideal(g, b);
    return a.h.is_subset_of(b.h) && a.b.is_subset_of(set_union(b.h, b.b));
}

/// Every gauge-invariant ideal: each saturated hereditary H paired with each
/// subset of its breaking vertices. H-major order; B subsets in canonical
/// order within each H.
inline std::vector<Ideal> gauge_invariant_ideals(const Graph& g,
                                                 int max_vertices = kDefaultMaxVertices) {
    std::vector<Ideal> out;
    for (const VertexSet& h : saturated_hereditary_sets(g, max_vertices)) {
        VertexSet breaking = breaking_vertices_of(g, h);
        std::vector<VertexSet> subsets;
        std::uint64_t end = std::uint64_t(1) << breaking.size();
        for (std::uint64_t bits = 0; bits < end; ++bits) {
            std::vector<int> members;
            for (std::size_t i = 0; i < breaking.size(); ++i)
                if ((bits >> i) & 1) members.push_back(breaking.members()[i]);
            subsets.emplace_back(std::move(members));
        }
        std::sort(subsets.begin(), subsets.end(),
                  [](const VertexSet& a, const VertexSet& b) { return canonical_less(a, b); });
        for (VertexSet& b : subsets) out.push_back(Ideal{h, std::move(b)});
    }
    return out;
}

/// Least ideal dominating both arguments, found by scanning the full
/// enumeration. Existence and uniqueness hold for every graph (the ideals
/// form a complete lattice); asserted rather than assumed.
inline Ideal join(const Graph& g, const Ideal& a, const Ideal& b,
                  int max_vertices = kDefaultMaxVertices) {
    validate_ideal(g, a);
    validate_ideal(g, b);
    std::vector<Ideal> uppers;
    for (const Ideal& c : gauge_invariant_ideals(g, max_vertices))
        if (leq(g, a, c) && leq(g, b, c)) uppers.push_back(c);
    for (const Ideal& candidate : uppers) {
        bool least = true;
        for (const Ideal& other : uppers)
            if (!leq(g, candidate, other)) {
                least = false;
                break;
            }
        if (least) return candidate;
    }
    throw std::logic_error("join: no least upper bound found");
}

inline std::string ideal_label(const Graph& g, const Ideal& ideal) {
    std::string label = "J{";
    for (std::size_t i = 0; i < ideal.h.size(); ++i) {
        if (i) label += ',';
        label += g.id_of(ideal.h.members()[i]);
    }
    label += '|';
    for (std::size_t i = 0; i < ideal.b.size(); ++i) {
        if (i) label += ',';
        label += g.id_of(ideal.b.members()[i]);
    }
    label += '}';
    return label;
}

/// DOT digraph of the covering relation of the given ideals, edges pointing
/// from smaller to larger. Output bytes are deterministic.
inline std::string hasse_dot(const Graph& g, std::span<const Ideal> ideals) {
    for (const Ideal& ideal : ideals) validate_ideal(g, ideal);
    std::size_t n = ideals.size();
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && leq(g, ideals[i], ideals[j]) && !(ideals[i] == ideals[j]))
                below[i][j] = true;
    std::ostringstream dot;
    dot << "digraph ideal_lattice {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < n; ++i)
        dot << "  \"" << ideal_label(g, ideals[i]) << "\";\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!below[i][j]) continue;
            bool covering = true;
            for (std::size_t k = 0; k < n && covering; ++k)
                if (below[i][k] && below[k][j]) covering = false;
            if (covering)
                dot << "  \"" << ideal_label(g, ideals[i]) << "\" -> \""
                    << ideal_label(g, ideals[j]) << "\";\n";
        }
    dot << "}\n";
    return dot.str();
}

/// Graph whose algebra realizes the ideal generated by a hereditary set:
/// the induced subgraph on H (Morita equivalence, valid only for B = ∅).
inline Graph ideal_graph(const Graph& g, const VertexSet& h) {
    if (!is_hereditary(g, h))
        throw std::invalid_argument("ideal_graph: set is not hereditary");
    return induced_subgraph(g, h);
}

}  // namespace gia
