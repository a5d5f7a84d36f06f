#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gia/graph.hpp"

namespace gia {

/// Default cap on the vertex count of subset-enumerating operations.
inline constexpr int kDefaultMaxVertices = 20;

/// Thrown when an enumeration would exceed the configured vertex cap.
class EnumerationLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_enumeration_limit(const Graph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw EnumerationLimitError(
            "enumeration limit exceeded: graph has " +
            std::to_string(g.vertex_count()) + " vertices, limit is " +
            std::to_string(max_vertices));
    if (g.vertex_count() > 62)
        throw EnumerationLimitError("enumeration limit exceeded: more than 62 vertices");
}

inline std::uint64_t to_mask(const VertexSet& x) {
    std::uint64_t m = 0;
    for (int v : x) m |= std::uint64_t(1) << v;
    return m;
}

inline VertexSet from_mask(std::uint64_t mask) {
    std::vector<int> members;
    for (int v = 0; v < 64; ++v)
        if ((mask >> v) & 1) members.push_back(v);
    return VertexSet(std::move(members));
}

// Per-vertex successor masks plus emitter classification, for subset scans.
struct MaskView {
    std::vector<std::uint64_t> succ;
    std::vector<char> finite_emitter;  // 0 < |s^-1(v)| < infinity

    explicit MaskView(const Graph& g) {
        int n = g.vertex_count();
        succ.assign(static_cast<std::size_t>(n), 0);
        finite_emitter.assign(static_cast<std::size_t>(n), 0);
        for (const auto& [key, m] : g.edges())
            if (m.is_positive())
                succ[static_cast<std::size_t>(key.first)] |= std::uint64_t(1) << key.second;
        for (int v = 0; v < n; ++v) {
            Multiplicity deg = out_degree(g, v);
            finite_emitter[static_cast<std::size_t>(v)] =
                (!deg.is_zero() && !deg.is_infinite()) ? 1 : 0;
        }
    }

    bool hereditary(std::uint64_t set) const {
        for (std::size_t v = 0; v < succ.size(); ++v)
            if ((set >> v) & 1)
                if (succ[v] & ~set) return false;
        return true;
    }

    bool saturated(std::uint64_t set) const {
        for (std::size_t v = 0; v < succ.size(); ++v) {
            if ((set >> v) & 1) continue;
            if (finite_emitter[v] && (succ[v] & ~set) == 0) return false;
        }
        return true;
    }
};

}  // namespace detail

/// Hereditary: every edge leaving H lands back in H (closed under v >= w).
inline bool is_hereditary(const Graph& g, const VertexSet& h) {
    check_subset(g, h, "is_hereditary");
    for (int v : h)
        for (int w = 0; w < g.vertex_count(); ++w)
            if (g.multiplicity(v, w).is_positive() && !h.contains(w)) return false;
    return true;
}

/// Saturated: every vertex with finite nonzero out-degree whose edges all
/// land in X already belongs to X. Sinks and infinite emitters are free.
inline bool is_saturated(const Graph& g, const VertexSet& x) {
    check_subset(g, x, "is_saturated");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (x.contains(v)) continue;
        Multiplicity deg = out_degree(g, v);
        if (deg.is_zero() || deg.is_infinite()) continue;
        bool all_in = true;
        for (int w = 0; w < g.vertex_count() && all_in; ++w)
            if (g.multiplicity(v, w).is_positive() && !x.contains(w)) all_in = false;
        if (all_in) return false;
    }
    return true;
}

/// Least saturated superset: repeatedly adjoin finite nonzero emitters whose
/// every edge targets the current set.
inline VertexSet saturate(const Graph& g, const VertexSet& x) {
    check_subset(g, x, "saturate");
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : x) in[static_cast<std::size_t>(v)] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (in[static_cast<std::size_t>(v)]) continue;
            Multiplicity deg = out_degree(g, v);
            if (deg.is_zero() || deg.is_infinite()) continue;
            bool all_in = true;
            for (int w = 0; w < g.vertex_count() && all_in; ++w)
                if (g.multiplicity(v, w).is_positive() && !in[static_cast<std::size_t>(w)])
                    all_in = false;
            if (all_in) {
                in[static_cast<std::size_t>(v)] = 1;
                grew = true;
            }
        }
    }
    std::vector<int> members;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in[static_cast<std::size_t>(v)]) members.push_back(v);
    return VertexSet(std::move(members));
}

/// Least saturated hereditary superset: forward-close X along edges, then
/// saturate the result.
inline VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& x) {
    check_subset(g, x, "hereditary_saturated_closure");
    ReachTable reach(g);
    std::vector<int> forward;
    for (int w = 0; w < g.vertex_count(); ++w)
        for (int v : x)
            if (reach.reaches(v, w)) {
                forward.push_back(w);
                break;
            }
    return saturate(g, VertexSet(std::move(forward)));
}

/// Breaking vertices of a saturated hereditary H: infinite emitters outside
/// H sending only finitely many (and at least one) edges outside H. The
/// quotient construction grafts a sink for each.
inline VertexSet breaking_vertices_of(const Graph& g, const VertexSet& h) {
    check_subset(g, h, "breaking_vertices_of");
    if (!is_hereditary(g, h))
        throw std::invalid_argument("breaking_vertices_of: set is not hereditary");
    if (!is_saturated(g, h))
        throw std::invalid_argument("breaking_vertices_of: set is not saturated");
    std::vector<int> members;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (h.contains(v) || !is_infinite_emitter(g, v)) continue;
        Multiplicity outside(0);
        for (int w = 0; w < g.vertex_count() && !outside.is_infinite(); ++w)
            if (!h.contains(w)) outside += g.multiplicity(v, w);
        if (outside.is_positive() && !outside.is_infinite()) members.push_back(v);
    }
    return VertexSet(std::move(members));
}

/// All saturated hereditary subsets, ordered by size then lexicographically.
/// Always contains the empty set and the full vertex set.
inline std::vector<VertexSet> saturated_hereditary_sets(
    const Graph& g, int max_vertices = kDefaultMaxVertices) {
    detail::check_enumeration_limit(g, max_vertices);
    detail::MaskView view(g);
    std::vector<VertexSet> out;
    std::uint64_t end = std::uint64_t(1) << g.vertex_count();
    for (std::uint64_t set = 0; set < end; ++set)
        if (view.hereditary(set) && view.saturated(set))
            out.push_back(detail::from_mask(set));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace gia
