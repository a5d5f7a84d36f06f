#pragma once

#include <string>
#include <vector>

#include "gia/ideals.hpp"

namespace gia {

namespace detail {

inline bool downward_directed(const VertexSet& m, const ReachTable& reach) {
    for (int v : m)
        for (int w : m) {
            bool common = false;
            for (int y : m)
                if (reach.reaches(v, y) && reach.reaches(w, y)) {
                    common = true;
                    break;
                }
            if (!common) return false;
        }
    return true;
}

}  // namespace detail

/// Maximal tail: a nonempty set whose complement is hereditary and saturated
/// and in which any two vertices flow to a common third.
inline bool is_maximal_tail(const Graph& g, const VertexSet& m) {
    check_subset(g, m, "is_maximal_tail");
    if (m.empty()) return false;
    VertexSet rest = complement(g, m);
    if (!is_hereditary(g, rest) || !is_saturated(g, rest)) return false;
    ReachTable reach(g);
    return detail::downward_directed(m, reach);
}

/// All maximal tails: complements of proper saturated hereditary sets,
/// filtered by downward directedness. Canonical order.
inline std::vector<VertexSet> maximal_tails(const Graph& g,
                                            int max_vertices = kDefaultMaxVertices) {
    std::vector<VertexSet> out;
    ReachTable reach(g);
    for (const VertexSet& h : saturated_hereditary_sets(g, max_vertices)) {
        if (static_cast<int>(h.size()) == g.vertex_count()) continue;
        VertexSet m = complement(g, h);
        if (detail::downward_directed(m, reach)) out.push_back(m);
    }
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return canonical_less(a, b); });
    return out;
}

/// Breaking vertices of the graph: infinite emitters v with finitely many
/// (and at least one) edges into vertices that can still reach v. Each such
/// v equals a breaking vertex of its own unreachable region.
inline VertexSet breaking_vertices(const Graph& g) {
    std::vector<int> members;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!is_infinite_emitter(g, v)) continue;
        VertexSet omega = cannot_reach(g, VertexSet({v}));
        Multiplicity outside(0);
        for (int w = 0; w < g.vertex_count() && !outside.is_infinite(); ++w)
            if (!omega.contains(w)) outside += g.multiplicity(v, w);
        if (outside.is_positive() && !outside.is_infinite()) members.push_back(v);
    }
    return VertexSet(std::move(members));
}

/// Primitivity of the full algebra: every cycle has an exit and the whole
/// vertex set is downward directed. The empty graph gives the zero algebra,
/// which is not primitive.
inline bool is_primitive_algebra(const Graph& g) {
    if (g.empty()) return false;
    if (!loops_have_exits_within(g, VertexSet::full(g))) return false;
    ReachTable reach(g);
    return detail::downward_directed(VertexSet::full(g), reach);
}

/// Simplicity: every cycle has an exit and every vertex generates the whole
/// vertex set under the saturated hereditary closure.
inline bool is_simple_algebra(const Graph& g) {
    if (g.empty()) return false;
    if (!loops_have_exits_within(g, VertexSet::full(g))) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(hereditary_saturated_closure(g, VertexSet({v})).size()) !=
            g.vertex_count())
            return false;
    return true;
}

/// Primitive ideal attached to a maximal tail M whose cycles all exit inside
/// M: H is the complement of M and B is all of H's breaking vertices.
inline Ideal primitive_ideal_of_tail(const Graph& g, const VertexSet& m) {
    if (!is_maximal_tail(g, m))
        throw std::invalid_argument("primitive_ideal_of_tail: not a maximal tail");
    if (!loops_have_exits_within(g, m))
        throw std::invalid_argument(
            "primitive_ideal_of_tail: a cycle inside the tail has no exit in it");
    VertexSet h = complement(g, m);
    return Ideal{h, breaking_vertices_of(g, h)};
}

/// Primitive ideal attached to a breaking vertex v: H is the set of vertices
/// that cannot reach v, and B drops v itself from H's breaking vertices.
inline Ideal primitive_ideal_of_breaking_vertex(const Graph& g, int v) {
    g.check_vertex(v);
    if (!breaking_vertices(g).contains(v))
        throw std::invalid_argument("primitive_ideal_of_breaking_vertex: '" + g.id_of(v) +
                                    "' is not a breaking vertex");
    VertexSet h = cannot_reach(g, VertexSet({v}));
    return Ideal{h, set_difference(breaking_vertices_of(g, h), VertexSet({v}))};
}

/// All gauge-invariant primitive ideals: tail-type ideals first (tails in
/// canonical order, restricted to tails whose cycles exit within them), then
/// breaking-vertex ideals in vertex order. The combined list is provably
/// duplicate-free; verified here rather than assumed.
inline std::vector<Ideal> gauge_invariant_primitive_ideals(
    const Graph& g, int max_vertices = kDefaultMaxVertices) {
    std::vector<Ideal> out;
    for (const VertexSet& m : maximal_tails(g, max_vertices))
        if (loops_have_exits_within(g, m)) out.push_back(primitive_ideal_of_tail(g, m));
    for (int v : breaking_vertices(g)) out.push_back(primitive_ideal_of_breaking_vertex(g, v));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i] == out[j])
                throw std::logic_error(
                    "gauge_invariant_primitive_ideals: duplicate ideal produced");
    return out;
}

/// Primitivity of a single ideal, decided on the quotient graph: J_{H,B} is
/// primitive exactly when the algebra of the quotient graph is.
inline bool is_primitive_ideal(const Graph& g, const Ideal& ideal) {
    validate_ideal(g, ideal);
    return is_primitive_algebra(quotient_graph(g, ideal));
}

}  // namespace gia
