#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "unigraph/coloring.hpp"
#include "unigraph/errors.hpp"
#include "unigraph/isomorphism.hpp"
#include "unigraph/recognition.hpp"
#include "unigraph/tree.hpp"

using namespace unigraph;
namespace ts = unigraph::testsupport;

namespace {

// Spider: one center with three legs of two edges each.
Graph spider_3x2() {
    return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

}  // namespace

TEST_CASE("edge domination basics") {
    CHECK(is_edge_dominating(path_graph(4), {{1, 2}}));
    CHECK_FALSE(is_edge_dominating(path_graph(4), {{0, 1}}));
    CHECK_THROWS_AS(is_edge_dominating(path_graph(4), {{0, 2}}), ValidationError);
}

TEST_CASE("tree DP on named instances") {
    auto p4 = min_edge_dominating_set_tree(path_graph(4));
    CHECK(p4.edges == std::vector<Edge>{{1, 2}});

    CHECK(min_edge_dominating_set_tree(path_graph(7)).edges.size() == 2);
    CHECK(min_edge_dominating_set_tree(Graph(2, {{0, 1}})).edges.size() == 1);
    CHECK(edge_domination_number_tree(star_graph(5)) == 1);
    CHECK(edge_domination_number_tree(spider_3x2()) == 3);
    CHECK(edge_domination_number_tree(double_star_graph(3, 2)) == 1);
    CHECK(edge_domination_number_tree(Graph(1, {})) == 0);
    CHECK_THROWS_AS(min_edge_dominating_set_tree(cycle_graph(4)), ValidationError);
}

TEST_CASE("brute force oracle on non-trees") {
    CHECK(brute_force_min_edge_dominating_set(path_graph(4)).edges.size() == 1);
    CHECK(brute_force_min_edge_dominating_set(cycle_graph(4)).edges.size() == 2);
    CHECK(brute_force_min_edge_dominating_set(complete_graph(4)).edges.size() == 2);
    CHECK_THROWS_AS(brute_force_min_edge_dominating_set(complete_graph(8)), SizeBoundError);
}

TEST_CASE("DP equals brute force on all trees up to 10 vertices") {
    for (int n = 2; n <= 10; ++n)
        for (const Graph& t : ts::all_trees(n)) {
            auto dp = min_edge_dominating_set_tree(t);
            CHECK(is_edge_dominating(t, dp.edges));
            CHECK(dp.edges.size() == brute_force_min_edge_dominating_set(t).edges.size());
            CHECK(static_cast<int>(dp.edges.size()) == edge_domination_number_tree(t));
        }
}

TEST_CASE("DP equals brute force on random trees up to 16 vertices") {
    ts::Rng rng(109);
    for (int trial = 0; trial < 120; ++trial) {
        Graph t = ts::random_tree(4 + trial % 13, rng);
        auto dp = min_edge_dominating_set_tree(t);
        CHECK(is_edge_dominating(t, dp.edges));
        CHECK(dp.edges.size() == brute_force_min_edge_dominating_set(t).edges.size());
    }
}

TEST_CASE("coloring from a dominating set: named cases") {
    Graph p4 = path_graph(4);
    auto c = coloring_from_edge_dominating_set(p4, {{{1, 2}}});
    CHECK(c.color_count() == 1);
    CHECK(is_unigraphic_coloring(p4, c).accepted);

    Graph star = star_graph(3);
    auto c2 = coloring_from_edge_dominating_set(star, {{{0, 2}}});
    CHECK(c2.color_count() == 1);
    CHECK(tree_unigraph_class(color_subgraph(star, c2, 1).graph).tag ==
          TreeUnigraphClass::Tag::Star);

    CHECK_THROWS_AS(coloring_from_edge_dominating_set(p4, {{{0, 1}}}), ValidationError);
}

TEST_CASE("a three-dominator tree splits into S(3,1), K(1,3), K2 classes") {
    // a=0, b=1, x1..x3=2,3,4, y=5, z=6, p1=7, p2=8, w=9.
    Graph t(10, {{0, 1},
                 {0, 2},
                 {0, 3},
                 {0, 4},
                 {1, 5},
                 {2, 6},
                 {6, 7},
                 {6, 8},
                 {8, 9}});
    EdgeDominatingSet doms{{{0, 1}, {6, 7}, {8, 9}}};
    auto c = coloring_from_edge_dominating_set(t, doms);
    REQUIRE(c.color_count() == 3);
    auto cls1 = tree_unigraph_class(color_subgraph(t, c, 1).graph);
    CHECK(cls1.tag == TreeUnigraphClass::Tag::DoubleStar);
    CHECK(cls1.q == 3);
    CHECK(cls1.r == 1);
    auto cls2 = tree_unigraph_class(color_subgraph(t, c, 2).graph);
    CHECK(cls2.tag == TreeUnigraphClass::Tag::Star);
    CHECK(cls2.p == 3);
    CHECK(tree_unigraph_class(color_subgraph(t, c, 3).graph).tag == TreeUnigraphClass::Tag::K2);
    CHECK(is_unigraphic_coloring(t, c).accepted);
}

TEST_CASE("dominating set back from a coloring") {
    Graph p4 = path_graph(4);
    auto c = EdgeColoring::normalized(p4, {1, 1, 1});
    auto eds = edge_dominating_set_from_coloring(p4, c);
    CHECK(eds.edges == std::vector<Edge>{{1, 2}});

    // One color per edge gives back the whole edge set.
    Graph t = double_star_graph(2, 2);
    std::vector<int> rainbow(t.edge_count());
    for (int i = 0; i < t.edge_count(); ++i) rainbow[i] = i + 1;
    auto all = edge_dominating_set_from_coloring(t, EdgeColoring::normalized(t, rainbow));
    CHECK(all.edges.size() == static_cast<std::size_t>(t.edge_count()));

    // Lexicographically least edge of a star class.
    Graph star = star_graph(4);
    auto pick = edge_dominating_set_from_coloring(
        star, EdgeColoring::normalized(star, {1, 1, 1, 1}));
    CHECK(pick.edges == std::vector<Edge>{{0, 1}});

    // A non-unigraphic coloring is rejected.
    Graph p5 = path_graph(5);
    CHECK_THROWS_AS(
        edge_dominating_set_from_coloring(p5, EdgeColoring::normalized(p5, {1, 1, 1, 1})),
        ValidationError);
}

TEST_CASE("both conversion directions validate on random trees") {
    ts::Rng rng(113);
    for (int trial = 0; trial < 60; ++trial) {
        Graph t = ts::random_tree(5 + trial % 8, rng);

        // Forward: any dominating set (here: a minimum one plus noise edges).
        auto base = min_edge_dominating_set_tree(t).edges;
        std::set<Edge> dom_set(base.begin(), base.end());
        std::uniform_int_distribution<int> pick_edge(0, t.edge_count() - 1);
        if (trial % 2) dom_set.insert(t.edges()[pick_edge(rng)]);
        EdgeDominatingSet doms{{dom_set.begin(), dom_set.end()}};
        auto c = coloring_from_edge_dominating_set(t, doms);
        CHECK(c.color_count() == static_cast<int>(doms.edges.size()));
        CHECK(is_unigraphic_coloring(t, c).accepted);
        for (int color = 1; color <= c.color_count(); ++color) {
            auto shape = tree_unigraph_class(color_subgraph(t, c, color).graph);
            CHECK(shape.tag != TreeUnigraphClass::Tag::NotTreeUnigraph);
        }

        // Backward: one edge per color, dominating.
        auto eds = edge_dominating_set_from_coloring(t, c);
        CHECK(eds.edges.size() == static_cast<std::size_t>(c.color_count()));
        CHECK(is_edge_dominating(t, eds.edges));
    }
}

TEST_CASE("tree unigraph number") {
    CHECK(tree_unigraph_number(path_graph(4)).first == 1);
    CHECK(tree_unigraph_number(path_graph(7)).first == 2);
    CHECK(tree_unigraph_number(Graph(2, {{0, 1}})).first == 1);
    CHECK(tree_unigraph_number(Graph(1, {})).first == 0);
    CHECK(tree_unigraph_number(spider_3x2()).first == 3);
    CHECK_THROWS_AS(tree_unigraph_number(cycle_graph(5)), ValidationError);

    ts::Rng rng(127);
    for (int trial = 0; trial < 40; ++trial) {
        Graph t = ts::random_tree(6 + trial % 7, rng);
        auto [k, c] = tree_unigraph_number(t);
        CHECK(k == edge_domination_number_tree(t));
        CHECK(c.color_count() == k);
        CHECK(is_unigraphic_coloring(t, c).accepted);
    }
}

TEST_CASE("DP scales to large paths") {
    // Path on 100001 vertices: every third edge dominates.
    Graph p = path_graph(100001);
    CHECK(edge_domination_number_tree(p) == (100000 + 2) / 3);
}
