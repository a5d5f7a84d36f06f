#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gia/multiplicity.hpp"

namespace gia {

/// Finitely presented directed multigraph: an ordered list of named vertices
/// and a multiplicity for every ordered vertex pair (zero stored as absence).
/// Parallel edges are carried as counts, never as labeled individuals.
/// Immutable once built; all analysis functions are pure.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::vector<std::string> vertex_ids) {
        for (auto& id : vertex_ids) add_vertex(std::move(id));
    }

    void add_vertex(std::string id) {
        if (id.empty()) throw std::invalid_argument("graph: empty vertex id");
        if (index_.contains(id))
            throw std::invalid_argument("graph: duplicate vertex id '" + id + "'");
        index_.emplace(id, static_cast<int>(ids_.size()));
        ids_.push_back(std::move(id));
    }

    /// Adds `m` parallel edges src -> dst; repeated calls accumulate
    /// (infinity absorbs).
    void add_edge(int src, int dst, Multiplicity m) {
        check_vertex(src);
        check_vertex(dst);
        if (m.is_zero()) throw std::invalid_argument("graph: zero edge multiplicity");
        mult_[{src, dst}] += m;
    }

    void add_edge(std::string_view src, std::string_view dst, Multiplicity m) {
        add_edge(index_of(src), index_of(dst), m);
    }

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }

    const std::vector<std::string>& vertex_ids() const { return ids_; }

    const std::string& id_of(int v) const {
        check_vertex(v);
        return ids_[static_cast<std::size_t>(v)];
    }

    bool has_vertex(std::string_view id) const {
        return index_.contains(std::string(id));
    }

    /// Index of a named vertex; throws naming the vertex when unknown.
    int index_of(std::string_view id) const {
        auto it = index_.find(std::string(id));
        if (it == index_.end())
            throw std::invalid_argument("graph: unknown vertex '" + std::string(id) + "'");
        return it->second;
    }

    Multiplicity multiplicity(int src, int dst) const {
        check_vertex(src);
        check_vertex(dst);
        auto it = mult_.find({src, dst});
        return it == mult_.end() ? Multiplicity(0) : it->second;
    }

    /// Stored edges, iterated in (src, dst) index order.
    const std::map<std::pair<int, int>, Multiplicity>& edges() const { return mult_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::invalid_argument("graph: vertex index " + std::to_string(v) +
                                        " out of range");
    }

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::map<std::pair<int, int>, Multiplicity> mult_;
};

/// Subset of a graph's vertices held in canonical order (ascending index).
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::vector<int> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    static VertexSet named(const Graph& g, const std::vector<std::string>& names) {
        std::vector<int> ix;
        ix.reserve(names.size());
        for (const auto& n : names) ix.push_back(g.index_of(n));
        return VertexSet(std::move(ix));
    }

    static VertexSet full(const Graph& g) {
        std::vector<int> ix(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) ix[static_cast<std::size_t>(v)] = v;
        return VertexSet(std::move(ix));
    }

    bool contains(int v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    const std::vector<int>& members() const { return members_; }

    bool is_subset_of(const VertexSet& other) const {
        return std::includes(other.members_.begin(), other.members_.end(),
                             members_.begin(), members_.end());
    }

    std::vector<std::string> names(const Graph& g) const {
        std::vector<std::string> out;
        out.reserve(members_.size());
        for (int v : members_) out.push_back(g.id_of(v));
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    friend VertexSet set_union(const VertexSet& a, const VertexSet& b) {
        std::vector<int> out;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return VertexSet(std::move(out));
    }

    friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(out));
        return VertexSet(std::move(out));
    }

    friend VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
        std::vector<int> out;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(out));
        return VertexSet(std::move(out));
    }

private:
    std::vector<int> members_;
};

/// Orders sets by size, then lexicographically by member indices. Used for
/// every deterministic listing of vertex sets.
inline bool canonical_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
}

inline void check_subset(const Graph& g, const VertexSet& x, const char* what) {
    if (!x.empty() && (*std::prev(x.end()) >= g.vertex_count() || *x.begin() < 0))
        throw std::invalid_argument(std::string(what) + ": vertex index out of range");
}

inline VertexSet complement(const Graph& g, const VertexSet& x) {
    check_subset(g, x, "complement");
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!x.contains(v)) out.push_back(v);
    return VertexSet(std::move(out));
}

/// Number of edges emitted by v: the row sum of the multiplicity table.
inline Multiplicity out_degree(const Graph& g, int v) {
    g.check_vertex(v);
    Multiplicity total(0);
    for (int w = 0; w < g.vertex_count(); ++w) {
        total += g.multiplicity(v, w);
        if (total.is_infinite()) break;
    }
    return total;
}

inline bool is_infinite_emitter(const Graph& g, int v) {
    return out_degree(g, v).is_infinite();
}

inline bool is_sink(const Graph& g, int v) { return out_degree(g, v).is_zero(); }

/// True when every vertex emits only finitely many edges.
inline bool is_row_finite(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_infinite_emitter(g, v)) return false;
    return true;
}

/// Reflexive-transitive reachability closure, precomputed for repeated
/// queries.
class ReachTable {
public:
    explicit ReachTable(const Graph& g)
        : n_(g.vertex_count()), bits_(static_cast<std::size_t>(n_) * n_, false) {
        for (int s = 0; s < n_; ++s) {
            std::vector<int> stack{s};
            at(s, s) = true;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w = 0; w < n_; ++w) {
                    if (!at(s, w) && g.multiplicity(v, w).is_positive()) {
                        at(s, w) = true;
                        stack.push_back(w);
                    }
                }
            }
        }
    }

    bool reaches(int v, int w) const {
        return bits_[static_cast<std::size_t>(v) * n_ + w];
    }

private:
    std::vector<bool>::reference at(int v, int w) {
        return bits_[static_cast<std::size_t>(v) * n_ + w];
    }

    int n_;
    std::vector<bool> bits_;
};

/// True when there is a path (length 0 allowed) from v to w.
inline bool reaches(const Graph& g, int v, int w) {
    g.check_vertex(v);
    g.check_vertex(w);
    if (v == w) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> stack{v};
    seen[static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < g.vertex_count(); ++y) {
            if (!seen[static_cast<std::size_t>(y)] && g.multiplicity(x, y).is_positive()) {
                if (y == w) return true;
                seen[static_cast<std::size_t>(y)] = 1;
                stack.push_back(y);
            }
        }
    }
    return false;
}

/// Vertices outside X from which no vertex of X can be reached.
inline VertexSet cannot_reach(const Graph& g, const VertexSet& x) {
    check_subset(g, x, "cannot_reach");
    if (x.empty()) throw std::invalid_argument("cannot_reach: empty target set");
    ReachTable reach(g);
    std::vector<int> out;
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (x.contains(w)) continue;
        bool hits = false;
        for (int v : x)
            if (reach.reaches(w, v)) {
                hits = true;
                break;
            }
        if (!hits) out.push_back(w);
    }
    return VertexSet(std::move(out));
}

/// Simple cycle as its vertex sequence; consecutive vertices (and last to
/// first) are joined by edges, all vertices distinct.
using Cycle = std::vector<int>;

namespace detail {

inline void cycle_search(const Graph& g, int root, std::vector<int>& path,
                         std::vector<char>& on_path, std::vector<Cycle>& out) {
    int v = path.back();
    if (g.multiplicity(v, root).is_positive()) out.push_back(path);
    for (int w = root + 1; w < g.vertex_count(); ++w) {
        if (on_path[static_cast<std::size_t>(w)] || !g.multiplicity(v, w).is_positive())
            continue;
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        cycle_search(g, root, path, on_path, out);
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
    }
}

}  // namespace detail

/// Every simple cycle exactly once, canonically rotated to start at its
/// minimal vertex; roots ascend, so the order is deterministic.
inline std::vector<Cycle> simple_cycles(const Graph& g) {
    std::vector<Cycle> out;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> path;
    for (int root = 0; root < g.vertex_count(); ++root) {
        path.assign(1, root);
        on_path.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        on_path[static_cast<std::size_t>(root)] = 1;
        detail::cycle_search(g, root, path, on_path, out);
    }
    return out;
}

/// True when v lies on some cycle (a nontrivial path from v to itself).
inline bool lies_on_cycle(const Graph& g, int v) {
    g.check_vertex(v);
    for (int w = 0; w < g.vertex_count(); ++w)
        if (g.multiplicity(v, w).is_positive() && reaches(g, w, v)) return true;
    return false;
}

/// Induced subgraph on X: the vertices of X in input order, with every edge
/// whose endpoints both lie in X.
inline Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    check_subset(g, x, "induced_subgraph");
    Graph sub;
    std::vector<int> new_index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v : x) {
        new_index[static_cast<std::size_t>(v)] = sub.vertex_count();
        sub.add_vertex(g.id_of(v));
    }
    for (const auto& [key, m] : g.edges()) {
        auto [src, dst] = key;
        if (x.contains(src) && x.contains(dst))
            sub.add_edge(new_index[static_cast<std::size_t>(src)],
                         new_index[static_cast<std::size_t>(dst)], m);
    }
    return sub;
}

namespace detail {

// Counts first-return paths at `root` (returns saturated at 2): DFS over
// simple paths avoiding root internally, weighting each step by its parallel
// multiplicity. Exploration is pruned to vertices that can reach root at all.
struct FirstReturnScan {
    const Graph& g;
    int root;
    std::vector<char> can_reach_root;
    std::vector<char> on_path;
    std::vector<int> path;
    int count = 0;            // saturated at 2
    Cycle unique_cycle;       // meaningful only when count == 1

    FirstReturnScan(const Graph& graph, int v) : g(graph), root(v) {
        can_reach_root.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int w = 0; w < g.vertex_count(); ++w)
            can_reach_root[static_cast<std::size_t>(w)] = reaches(g, w, v) ? 1 : 0;
        on_path.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        on_path[static_cast<std::size_t>(v)] = 1;
        path.push_back(v);
        walk(1);
    }

    static int cap2(Multiplicity m) {
        return m.at_least_two() ? 2 : (m.is_positive() ? 1 : 0);
    }

    void add(int weight) {
        count = std::min(2, count + weight);
        if (count == 1) unique_cycle = path;
    }

    void walk(int path_weight) {
        if (count >= 2) return;
        int v = path.back();
        if (int back = cap2(g.multiplicity(v, root)); back > 0)
            add(std::min(2, path_weight * back));
        for (int w = 0; w < g.vertex_count() && count < 2; ++w) {
            if (w == root || on_path[static_cast<std::size_t>(w)]) continue;
            if (!can_reach_root[static_cast<std::size_t>(w)]) continue;
            int step = cap2(g.multiplicity(v, w));
            if (step == 0) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            walk(std::min(2, path_weight * step));
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    }
};

}  // namespace detail

/// True when v admits at least two first-return paths (loops at v that do
/// not pass through v internally), counting parallel edges as distinct.
/// Equivalent characterization: two distinct simple first returns exist, or
/// the unique one passes through a vertex lying on a cycle that avoids v.
inline bool has_two_first_returns(const Graph& g, int v) {
    g.check_vertex(v);
    detail::FirstReturnScan scan(g, v);
    if (scan.count >= 2) return true;
    if (scan.count == 0) return false;
    // Unique simple first return, all multiplicities 1: a second return
    // exists exactly when an intermediate vertex can detour around a cycle
    // avoiding v.
    Graph without_v = induced_subgraph(g, complement(g, VertexSet({v})));
    for (std::size_t i = 1; i < scan.unique_cycle.size(); ++i) {
        int sub = without_v.index_of(g.id_of(scan.unique_cycle[i]));
        if (lies_on_cycle(without_v, sub)) return true;
    }
    return false;
}

/// Condition (K): every vertex lies on no cycle, or admits two distinct
/// first-return paths.
inline bool satisfies_condition_k(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (lies_on_cycle(g, v) && !has_two_first_returns(g, v)) return false;
    return true;
}

/// True when every cycle lying entirely inside M has an exit whose range is
/// again in M: a parallel edge of a cycle edge, or an edge to some other
/// vertex of M. Checking simple cycles suffices: a cycle without such an
/// exit forces each of its vertices to emit exactly one edge into M, so it
/// traverses a simple cycle with the same property.
inline bool loops_have_exits_within(const Graph& g, const VertexSet& m) {
    check_subset(g, m, "loops_have_exits_within");
    Graph sub = induced_subgraph(g, m);
    for (const Cycle& cycle : simple_cycles(sub)) {
        bool has_exit = false;
        for (std::size_t i = 0; i < cycle.size() && !has_exit; ++i) {
            int x = cycle[i];
            int next = cycle[(i + 1) % cycle.size()];
            if (sub.multiplicity(x, next).at_least_two()) has_exit = true;
            for (int y = 0; y < sub.vertex_count() && !has_exit; ++y)
                if (y != next && sub.multiplicity(x, y).is_positive()) has_exit = true;
        }
        if (!has_exit) return false;
    }
    return true;
}

}  // namespace gia
