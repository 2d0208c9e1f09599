#include <fanforge/errors.hh>
#include <fanforge/graph.hh>
#include <fanforge/graph6.hh>

#include "support/oracles.hh"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace fanforge;

using std::pair;
using std::vector;

namespace
{
    auto c5_with_pendant() -> SimpleGraph
    {
        return SimpleGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
    }
}

TEST_CASE("graph construction rejects loops and parallel edges")
{
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), PreconditionError);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 3}}), PreconditionError);
}

TEST_CASE("edges are sorted and indexed")
{
    SimpleGraph g(4, {{3, 2}, {0, 1}, {2, 0}});
    REQUIRE(g.size() == 3);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{0, 2});
    CHECK(g.edge(2) == Edge{2, 3});
    for (int e = 0; e < g.size(); ++e)
        CHECK(g.edge_between(g.edge(e).v, g.edge(e).u) == e);
    CHECK_FALSE(g.edge_between(1, 3));
}

TEST_CASE("generators")
{
    auto c5 = cycle(5);
    CHECK(c5.order() == 5);
    CHECK(c5.size() == 5);
    for (int v = 0; v < 5; ++v)
        CHECK(c5.degree(v) == 2);

    CHECK(complete(5).size() == 10);

    auto p = petersen();
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    for (int v = 0; v < 10; ++v)
        CHECK(p.degree(v) == 3);

    auto pv = delete_vertex(p, 0);
    CHECK(pv.order() == 9);
    CHECK(pv.size() == 12);
}

TEST_CASE("delete_vertex fills the hole with the last vertex")
{
    // path 0-1-2-3, delete 1: vertex 3 becomes 1
    auto g = delete_vertex(path(4), 1);
    CHECK(g.order() == 3);
    CHECK(g.size() == 1);
    CHECK(g.adjacent(2, 1));
}

TEST_CASE("deleting any edge of a cycle leaves a path")
{
    for (int n = 3; n <= 9; ++n)
        for (int e = 0; e < n; ++e) {
            auto g = delete_edge(cycle(n), e);
            int ones = 0;
            for (int v = 0; v < n; ++v)
                ones += g.degree(v) == 1;
            CHECK(ones == 2);
            CHECK(g.is_connected());
        }
}

TEST_CASE("degree profile")
{
    auto k5 = degree_profile(complete(5));
    CHECK(k5.delta == 4);
    CHECK(k5.delta_vertices.size() == 5);
    CHECK(k5.core_min_degree == 4);
    CHECK(k5.core_max_degree == 4);

    auto st = degree_profile(star(3));
    CHECK(st.delta == 3);
    CHECK(st.delta_vertices == vector<int>{0});
    CHECK(st.core_min_degree == 0);
    CHECK(st.core_max_degree == 0);

    // Petersen minus vertex 0: its old neighbors 1, 4, 5 drop to degree 2.
    // Vertex 9 is relabelled 0, so the degree-2 vertices are 1, 4, 5.
    auto pv = delete_vertex(petersen(), 0);
    auto prof = degree_profile(pv);
    CHECK(prof.delta == 3);
    CHECK(prof.delta_vertices == vector<int>{0, 2, 3, 6, 7, 8});
    // By hand: the core edges are 2-3, 2-7, 3-8, 6-8, 7-0, 0-6, a 6-cycle.
    int core_edges = 0;
    for (auto & e : pv.edges())
        core_edges += pv.degree(e.u) == 3 && pv.degree(e.v) == 3;
    CHECK(core_edges == 6);
    CHECK(prof.core_min_degree == 2);
    CHECK(prof.core_max_degree == 2);
    CHECK_FALSE(is_core_acyclic(pv));
}

TEST_CASE("core acyclicity")
{
    CHECK(is_core_acyclic(star(3)));
    CHECK_FALSE(is_core_acyclic(complete(5)));
    // C5 plus a pendant at 0: only vertex 0 has degree 3.
    CHECK(is_core_acyclic(c5_with_pendant()));
    CHECK(degree_profile(c5_with_pendant()).delta_vertices == vector<int>{0});
}

TEST_CASE("light vertices")
{
    CHECK(light_vertices(cycle(5)).size() == 5);
    CHECK(light_vertices(complete(5)).empty());

    auto pv = delete_vertex(petersen(), 0);
    auto light = light_vertices(pv);
    CHECK(light.size() == 9); // core is a 6-cycle; degree-2 vertices see two core vertices
}

TEST_CASE("light vertices agree with core degree on max-degree vertices")
{
    for (auto & line : oracle::read_lines(FANFORGE_TEST_DATA "/connected_le7.g6")) {
        auto g = from_graph6(line);
        auto prof = degree_profile(g);
        auto light = light_vertices(g);
        for (int v : prof.delta_vertices) {
            int core_degree = 0;
            for (int w : g.neighbors(v))
                core_degree += g.degree(w) == prof.delta;
            bool is_light = std::find(light.begin(), light.end(), v) != light.end();
            CHECK(is_light == (core_degree <= 2));
        }
        int sum = 0;
        for (int d : prof.degrees)
            sum += d;
        CHECK(sum == 2 * g.size());
        CHECK(prof.delta == *std::max_element(prof.degrees.begin(), prof.degrees.end()));
    }
}

TEST_CASE("graph6 fixed strings")
{
    auto empty5 = from_graph6("D??");
    CHECK(empty5.order() == 5);
    CHECK(empty5.size() == 0);

    CHECK(to_graph6(complete(2)) == "A_");
    CHECK(to_graph6(SimpleGraph(1, {})) == "@");

    auto g = from_graph6("DQc");
    CHECK(to_graph6(g) == "DQc");
    auto [n, edges] = oracle::decode_graph6("DQc");
    CHECK(n == 5);
    CHECK(static_cast<int>(edges.size()) == g.size());

    auto c5 = cycle(5);
    CHECK(from_graph6(to_graph6(c5)) == c5);
    CHECK(from_graph6(">>graph6<<" + to_graph6(c5)) == c5);
}

TEST_CASE("graph6 malformed input")
{
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("B@"), ParseError);  // padding bit set
    CHECK_THROWS_AS(from_graph6("DQ"), ParseError);  // short body
    CHECK_THROWS_AS(from_graph6("DQcc"), ParseError); // long body
    CHECK_THROWS_AS(from_graph6("D Q"), ParseError);  // out of range
    CHECK_THROWS_AS(from_graph6("~?"), ParseError);   // truncated long prefix
}

TEST_CASE("graph6 long form")
{
    auto g = cycle(70);
    auto s = to_graph6(g);
    CHECK(s[0] == '~');
    CHECK(from_graph6(s) == g);
    auto [n, edges] = oracle::decode_graph6(s);
    CHECK(n == 70);
    CHECK(edges.size() == 70);
}
