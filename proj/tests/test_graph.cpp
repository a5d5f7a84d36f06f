#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace gia;
using namespace giatest;

TEST_CASE("multiplicity arithmetic and ordering") {
    Multiplicity inf = Multiplicity::infinity();
    CHECK((Multiplicity(2) + Multiplicity(3)) == Multiplicity(5));
    CHECK((inf + Multiplicity(7)).is_infinite());
    CHECK((Multiplicity(0) + inf).is_infinite());
    CHECK(inf > Multiplicity(std::uint64_t(-1)));
    CHECK(Multiplicity(1) < Multiplicity(2));
    CHECK(inf == Multiplicity::infinity());
    CHECK(Multiplicity(2).at_least_two());
    CHECK(inf.at_least_two());
    CHECK_FALSE(Multiplicity(1).at_least_two());
    CHECK_THROWS_AS(inf.finite_value(), std::logic_error);
}

TEST_CASE("graph construction rejects bad input") {
    Graph g({"a", "b"});
    CHECK_THROWS_AS(g.add_vertex("a"), std::invalid_argument);
    CHECK_THROWS_AS(g.add_vertex(""), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge("a", "zz", 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge("a", "b", 0), std::invalid_argument);
    CHECK_THROWS_AS(g.index_of("nope"), std::invalid_argument);
    CHECK_THROWS_WITH(g.index_of("nope"), Catch::Matchers::ContainsSubstring("nope"));
}

TEST_CASE("parallel edges accumulate") {
    Graph g({"a", "b"});
    g.add_edge("a", "b", 1);
    g.add_edge("a", "b", 2);
    CHECK(g.multiplicity(0, 1) == Multiplicity(3));
    g.add_edge("a", "b", Multiplicity::infinity());
    CHECK(g.multiplicity(0, 1).is_infinite());
}

TEST_CASE("out_degree") {
    Graph o2 = cuntz(2);
    CHECK(out_degree(o2, 0) == Multiplicity(2));
    Graph g = ex54();
    CHECK(out_degree(g, g.index_of("v")).is_infinite());
    CHECK(out_degree(g, g.index_of("u")) == Multiplicity(2));
    CHECK(out_degree(g, g.index_of("w")) == Multiplicity(1));
    CHECK_THROWS_AS(out_degree(g, 17), std::invalid_argument);
    CHECK(is_sink(edgeless(3), 1));
}

TEST_CASE("is_row_finite") {
    CHECK(is_row_finite(cuntz(2)));
    CHECK_FALSE(is_row_finite(ex54()));
    CHECK(is_row_finite(edgeless(3)));
}

TEST_CASE("reaches on fixtures") {
    Graph g = ex54();
    CHECK(reaches(g, g.index_of("u"), g.index_of("w")));
    CHECK_FALSE(reaches(g, g.index_of("w"), g.index_of("u")));
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(reaches(g, v, v));
    CHECK_THROWS_AS(reaches(g, 0, 9), std::invalid_argument);
}

TEST_CASE("reaches agrees with closure oracle, forward equals backward") {
    Rng rng(1001);
    for (int round = 0; round < 80; ++round) {
        Graph g = random_graph(rng, 6);
        auto closure = oracle_closure(g);
        Graph transpose;
        for (const auto& id : g.vertex_ids()) transpose.add_vertex(id);
        for (const auto& [key, m] : g.edges()) transpose.add_edge(key.second, key.first, m);
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int w = 0; w < g.vertex_count(); ++w) {
                CHECK(reaches(g, v, w) == closure[v][w]);
                CHECK(reaches(g, v, w) == reaches(transpose, w, v));
            }
    }
}

TEST_CASE("reaches is transitive") {
    Rng rng(1002);
    for (int round = 0; round < 40; ++round) {
        Graph g = random_graph(rng, 5);
        ReachTable r(g);
        int n = g.vertex_count();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (r.reaches(a, b) && r.reaches(b, c)) CHECK(r.reaches(a, c));
    }
}

TEST_CASE("cannot_reach on fixtures") {
    Graph g = ex54();
    CHECK(cannot_reach(g, vs(g, {"v"})) == vs(g, {"w"}));
    CHECK(cannot_reach(g, VertexSet::full(g)).empty());
    Graph k = ex51k();
    CHECK(cannot_reach(k, vs(k, {"w"})) == vs(k, {"x1", "x2", "x3"}));
    CHECK_THROWS_AS(cannot_reach(g, VertexSet()), std::invalid_argument);
}

TEST_CASE("cannot_reach is disjoint from its target and forward closed") {
    Rng rng(1003);
    for (int round = 0; round < 60; ++round) {
        Graph g = random_graph(rng, 6);
        for (int v = 0; v < g.vertex_count(); ++v) {
            VertexSet omega = cannot_reach(g, VertexSet({v}));
            CHECK_FALSE(omega.contains(v));
            // successors of omega vertices stay inside omega
            for (int w : omega)
                for (int y = 0; y < g.vertex_count(); ++y)
                    if (g.multiplicity(w, y).is_positive()) CHECK(omega.contains(y));
        }
    }
}

TEST_CASE("simple_cycles on fixtures") {
    Graph g = ex54();
    auto cycles = simple_cycles(g);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0] == Cycle{g.index_of("u")});
    CHECK(cycles[1] == Cycle{g.index_of("w")});
    CHECK(simple_cycles(cuntz(2)) == std::vector<Cycle>{{0}});
    CHECK(simple_cycles(acyclic3()).empty());
}

TEST_CASE("simple_cycles reports genuine, rotation-unique cycles") {
    Rng rng(1004);
    for (int round = 0; round < 60; ++round) {
        Graph g = random_graph(rng, 6);
        auto cycles = simple_cycles(g);
        for (const Cycle& c : cycles) {
            REQUIRE_FALSE(c.empty());
            // canonical start: minimal vertex
            CHECK(*std::min_element(c.begin(), c.end()) == c.front());
            std::vector<int> sorted = c;
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
            for (std::size_t i = 0; i < c.size(); ++i)
                CHECK(g.multiplicity(c[i], c[(i + 1) % c.size()]).is_positive());
        }
        std::sort(cycles.begin(), cycles.end());
        CHECK(std::adjacent_find(cycles.begin(), cycles.end()) == cycles.end());
    }
}

TEST_CASE("has_two_first_returns on fixtures") {
    CHECK(has_two_first_returns(cuntz(2), 0));
    Graph g = ex54();
    CHECK_FALSE(has_two_first_returns(g, g.index_of("u")));
    CHECK_FALSE(has_two_first_returns(g, g.index_of("w")));
    Graph e = ex34();
    CHECK(has_two_first_returns(e, e.index_of("v")));
    CHECK(has_two_first_returns(e, e.index_of("u")));
    CHECK_FALSE(has_two_first_returns(e, e.index_of("h")));
}

TEST_CASE("first returns: loop pumped through an inner cycle counts twice") {
    // a -> b -> a is the only simple first return at a, but b detours b -> c -> b.
    Graph g({"a", "b", "c"});
    g.add_edge("a", "b", 1);
    g.add_edge("b", "a", 1);
    g.add_edge("b", "c", 1);
    g.add_edge("c", "b", 1);
    CHECK(has_two_first_returns(g, g.index_of("a")));
    // without the detour the return is unique
    Graph h({"a", "b"});
    h.add_edge("a", "b", 1);
    h.add_edge("b", "a", 1);
    CHECK_FALSE(has_two_first_returns(h, 0));
}

TEST_CASE("condition (K) on fixtures") {
    CHECK_FALSE(satisfies_condition_k(ex54()));
    CHECK(satisfies_condition_k(ex34()));
    CHECK(satisfies_condition_k(ex51k()));
    CHECK(satisfies_condition_k(acyclic3()));
    CHECK(satisfies_condition_k(cuntz(2)));
}

TEST_CASE("first returns and condition (K) agree with the bounded-walk oracle") {
    // exhaustively over all graphs on <= 2 vertices with mult in {0,1,2,inf}
    const Multiplicity choices[] = {Multiplicity(0), Multiplicity(1), Multiplicity(2),
                                    Multiplicity::infinity()};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    Graph g({"x", "y"});
                    Multiplicity ms[2][2] = {{choices[a], choices[b]},
                                             {choices[c], choices[d]}};
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j)
                            if (!ms[i][j].is_zero()) g.add_edge(i, j, ms[i][j]);
                    for (int v = 0; v < 2; ++v)
                        CHECK(has_two_first_returns(g, v) ==
                              (oracle_first_return_count(g, v, 2 * g.vertex_count()) >= 2));
                    CHECK(satisfies_condition_k(g) == oracle_condition_k(g));
                }
    // randomized over graphs on <= 5 vertices
    Rng rng(1005);
    for (int round = 0; round < 200; ++round) {
        Graph g = random_graph(rng, 5);
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(lies_on_cycle(g, v) == oracle_on_cycle(g, v));
            CHECK(has_two_first_returns(g, v) ==
                  (oracle_first_return_count(g, v, 2 * g.vertex_count()) >= 2));
        }
        CHECK(satisfies_condition_k(g) == oracle_condition_k(g));
    }
}

TEST_CASE("loops_have_exits_within on fixtures") {
    Graph g = ex54();
    CHECK(loops_have_exits_within(g, vs(g, {"u", "v"})));
    CHECK_FALSE(loops_have_exits_within(g, vs(g, {"u"})));
    CHECK_FALSE(loops_have_exits_within(g, VertexSet::full(g)));
    CHECK(loops_have_exits_within(cuntz(2), VertexSet({0})));
    CHECK_THROWS_AS(loops_have_exits_within(g, VertexSet({5})), std::invalid_argument);
}

TEST_CASE("exitless loops are exactly the single-exit simple cycles") {
    Rng rng(1006);
    for (int round = 0; round < 80; ++round) {
        Graph g = random_graph(rng, 6);
        bool exitless_cycle = false;
        for (const Cycle& c : simple_cycles(g)) {
            bool all_single = true;
            for (std::size_t i = 0; i < c.size() && all_single; ++i) {
                int next = c[(i + 1) % c.size()];
                if (!(out_degree(g, c[i]) == Multiplicity(1)) ||
                    !(g.multiplicity(c[i], next) == Multiplicity(1)))
                    all_single = false;
            }
            if (all_single) exitless_cycle = true;
        }
        CHECK(loops_have_exits_within(g, VertexSet::full(g)) == !exitless_cycle);
    }
}

TEST_CASE("induced_subgraph") {
    Graph g = ex54();
    Graph sub = induced_subgraph(g, vs(g, {"u", "v"}));
    CHECK(sub.vertex_ids() == std::vector<std::string>{"u", "v"});
    CHECK(sub.multiplicity(0, 0) == Multiplicity(1));
    CHECK(sub.multiplicity(0, 1) == Multiplicity(1));
    CHECK(sub.multiplicity(1, 0).is_zero());
    CHECK(sub.multiplicity(1, 1).is_zero());
    CHECK(graphs_equal(induced_subgraph(g, VertexSet::full(g)), g));
    CHECK(induced_subgraph(g, VertexSet()).empty());
}
