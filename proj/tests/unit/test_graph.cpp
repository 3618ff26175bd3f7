#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "unigraph/errors.hpp"
#include "unigraph/graph.hpp"

using namespace unigraph;
namespace ts = unigraph::testsupport;

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{-1, 1}}), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ValidationError);

    CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}, {0, 1}}), doctest::Contains("(0,1)"), ValidationError);

    Graph empty(0, {});
    CHECK(empty.vertex_count() == 0);
    Graph single(1, {});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);
}

TEST_CASE("edges are normalized and sorted") {
    Graph g(4, {{3, 2}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(g.has_edge(3, 2));
    CHECK(g.edge_index(2, 3) == 1);
    CHECK(g.edge_index(0, 2) == -1);
}

TEST_CASE("domino basics") {
    Graph dom = ts::domino();
    CHECK(dom.vertex_count() == 6);
    CHECK(dom.edge_count() == 7);
    CHECK(degree_set(dom).values == std::vector<int>{3, 3, 2, 2, 2, 2});
}

TEST_CASE("degree sets") {
    CHECK(degree_set(Graph(2, {{0, 1}})).values == std::vector<int>{1, 1});

    // C6 plus chord {0,2}: degrees counted directly from incidences.
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}};
    std::vector<int> expected(6, 0);
    for (const Edge& e : edges) {
        ++expected[e.u];
        ++expected[e.v];
    }
    std::sort(expected.begin(), expected.end(), std::greater<int>());
    Graph c6chord(6, edges);
    CHECK(degree_set(c6chord).values == expected);
    CHECK(degree_set(c6chord).values == std::vector<int>{3, 3, 2, 2, 2, 2});
}

TEST_CASE("degree set is invariant under relabeling") {
    ts::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = ts::random_graph(7, 0.4, rng);
        CHECK(degree_set(ts::shuffled(g, rng)) == degree_set(g));
    }
}

TEST_CASE("vertex induced subgraphs") {
    Graph dom = ts::domino();
    auto sub = vertex_induced_subgraph(dom, {0, 1, 2});
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(sub.vertex_map == std::vector<int>{0, 1, 2});

    auto all = vertex_induced_subgraph(dom, {0, 1, 2, 3, 4, 5});
    CHECK(all.graph == dom);

    auto none = vertex_induced_subgraph(dom, {});
    CHECK(none.graph.vertex_count() == 0);

    CHECK_THROWS_AS(vertex_induced_subgraph(dom, {9}), ValidationError);
}

TEST_CASE("edge induced subgraphs") {
    Graph dom = ts::domino();
    auto path = edge_induced_subgraph(dom, {{0, 1}, {1, 2}});
    CHECK(path.graph.vertex_count() == 3);
    CHECK(path.graph.edge_count() == 2);
    CHECK(path.vertex_map == std::vector<int>{0, 1, 2});

    auto whole = edge_induced_subgraph(dom, dom.edges());
    CHECK(whole.graph == dom);

    auto k2 = edge_induced_subgraph(dom, {{0, 3}});
    CHECK(k2.graph.vertex_count() == 2);
    CHECK(k2.graph.edge_count() == 1);

    CHECK_THROWS_AS(edge_induced_subgraph(dom, {{0, 2}}), ValidationError);
}

TEST_CASE("edge induced subgraph of the full edge set has no isolated vertices") {
    ts::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = ts::random_graph(7, 0.3, rng);
        if (g.edge_count() == 0) continue;
        auto sub = edge_induced_subgraph(g, g.edges());
        for (int v = 0; v < sub.graph.vertex_count(); ++v) CHECK(sub.graph.degree(v) > 0);
        bool isolated_free = true;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0) isolated_free = false;
        CHECK((sub.graph == g) == isolated_free);
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(ts::domino()));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph(1, {})));
    CHECK(is_connected(Graph(0, {})));

    auto comps = connected_components(Graph(5, {{0, 4}, {1, 2}}));
    CHECK(comps == std::vector<std::vector<int>>{{0, 4}, {1, 2}, {3}});
}

TEST_CASE("diameter") {
    CHECK(diameter(ts::domino()) == 3);
    CHECK(diameter(complete_graph(5)) == 1);
    CHECK(diameter(Graph(4, {{0, 1}, {2, 3}})) == std::nullopt);
    CHECK(diameter(Graph(1, {})) == 0);
    CHECK(diameter(Graph(0, {})) == 0);
    CHECK(diameter(cycle_graph(8)) == 4);
}

TEST_CASE("diameter agrees with Floyd-Warshall and stays below n") {
    ts::Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = ts::random_connected_graph(2 + trial % 7, 0.25, rng);
        auto fw = ts::floyd_warshall(g);
        int expected = 0;
        for (const auto& row : fw)
            for (int d : row) expected = std::max(expected, d);
        auto got = diameter(g);
        REQUIRE(got.has_value());
        CHECK(*got == expected);
        CHECK(*got <= g.vertex_count() - 1);
    }
}

TEST_CASE("induced p5 detection") {
    auto p5 = find_induced_p5(path_graph(5));
    REQUIRE(p5.has_value());
    {
        std::vector<int> vs(p5->begin(), p5->end());
        std::sort(vs.begin(), vs.end());
        CHECK(vs == std::vector<int>{0, 1, 2, 3, 4});
    }
    // The domino does contain an induced P5 ({0,3,4,5,2} induces the path
    // 0-3-4-5-2), consistent with it not being a unigraph.
    CHECK(find_induced_p5(ts::domino()).has_value());
    CHECK(ts::subsets_contain_induced_p5(ts::domino()));
    CHECK_FALSE(find_induced_p5(star_graph(4)).has_value());

    // Cross-check the path-extension search against plain subset enumeration.
    ts::Rng rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = ts::random_graph(7, 0.2 + 0.1 * (trial % 6), rng);
        CHECK(find_induced_p5(g).has_value() == ts::subsets_contain_induced_p5(g));
    }
}

TEST_CASE("induced p5 witness is an induced path") {
    ts::Rng rng(37);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = ts::random_graph(8, 0.3, rng);
        auto w = find_induced_p5(g);
        if (!w) continue;
        auto sub = vertex_induced_subgraph(g, std::vector<int>(w->begin(), w->end())).graph;
        CHECK(sub.edge_count() == 4);
        CHECK(is_connected(sub));
        int max_deg = 0;
        for (int v = 0; v < 5; ++v) max_deg = std::max(max_deg, sub.degree(v));
        CHECK(max_deg == 2);
    }
}

TEST_CASE("factories") {
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(degree_set(star_graph(4)).values == std::vector<int>{4, 1, 1, 1, 1});
    CHECK(degree_set(double_star_graph(3, 1)).values == std::vector<int>{4, 2, 1, 1, 1, 1});
    CHECK(degree_set(double_star_graph(1, 1)) == degree_set(path_graph(4)));
}
