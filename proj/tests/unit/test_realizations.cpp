#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "corpus.hpp"
#include "unigraph/errors.hpp"
#include "unigraph/isomorphism.hpp"
#include "unigraph/realizations.hpp"

using namespace unigraph;
namespace ts = unigraph::testsupport;

TEST_CASE("graphicality") {
    CHECK(is_graphical({{3, 3, 2, 2, 2, 2}}));
    CHECK(is_graphical({{1, 1}}));
    CHECK_FALSE(is_graphical({{3, 1}}));
    CHECK_FALSE(is_graphical({{1}}));  // odd sum
    CHECK(is_graphical({{}}));
    CHECK(is_graphical({{0, 0, 0}}));
    CHECK_FALSE(is_graphical({{-1, 1}}));
}

TEST_CASE("Erdos-Gallai agrees with Havel-Hakimi") {
    ts::Rng rng(41);
    std::uniform_int_distribution<int> deg(0, 7);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + trial % 8;
        std::vector<int> d(n);
        for (int& x : d) x = deg(rng) % n;
        std::sort(d.begin(), d.end(), std::greater<int>());
        CHECK(is_graphical({d}) == ts::havel_hakimi_graphical(d));
    }
}

TEST_CASE("forced realizations") {
    auto triangle = enumerate_realizations({{2, 2, 2}});
    REQUIRE(triangle.size() == 1);
    CHECK(triangle[0].edge_count() == 3);

    // (2,2,1,1) on 4 vertices: the path is the only realization.
    auto paths = enumerate_realizations({{2, 2, 1, 1}});
    REQUIRE(paths.size() == 1);
    CHECK(are_isomorphic(paths[0], path_graph(4)));

    // (2,2,2,0): triangle plus one isolated vertex, and nothing else.
    auto tri_iso = enumerate_realizations({{2, 2, 2, 0}});
    REQUIRE(tri_iso.size() == 1);
    CHECK(tri_iso[0].vertex_count() == 4);
    CHECK_FALSE(is_connected(tri_iso[0]));
}

TEST_CASE("domino degree set has several realizations") {
    auto classes = enumerate_realizations({{3, 3, 2, 2, 2, 2}});
    CHECK(classes.size() >= 2);
    Graph dom = ts::domino();
    Graph with_triangle(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}});
    int dom_hits = 0, tri_hits = 0;
    for (const Graph& g : classes) {
        if (are_isomorphic(g, dom)) ++dom_hits;
        if (are_isomorphic(g, with_triangle)) ++tri_hits;
    }
    CHECK(dom_hits == 1);
    CHECK(tri_hits == 1);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(enumerate_realizations({{3, 1}}), ValidationError);
    CHECK_THROWS_AS(enumerate_realizations({std::vector<int>(13, 2)}), SizeBoundError);
}

TEST_CASE("round trip: every graph matches exactly one realization class") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : ts::all_graphs(n)) {
            auto classes = enumerate_realizations(degree_set(g));
            int hits = 0;
            for (const Graph& h : classes)
                if (are_isomorphic(g, h)) ++hits;
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("round trip on 7 vertices, grouped by degree set") {
    std::map<DegreeSet, std::vector<const Graph*>> by_ds;
    for (const Graph& g : ts::all_graphs(7)) by_ds[degree_set(g)].push_back(&g);
    for (auto& [ds, graphs] : by_ds) {
        auto classes = enumerate_realizations(ds);
        // The classes of a degree set are exactly the corpus classes with it.
        CHECK(classes.size() == graphs.size());
        for (const Graph* g : graphs) {
            int hits = 0;
            for (const Graph& h : classes)
                if (canonical_code(h) == canonical_code(*g)) ++hits;
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("deterministic stream, and workers do not change it") {
    DegreeSet ds{{3, 3, 2, 2, 2, 2}};
    auto a = enumerate_realizations(ds);
    auto b = enumerate_realizations(ds);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

    RealizationOptions par;
    par.workers = 4;
    auto c = enumerate_realizations(ds, par);
    REQUIRE(c.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(c[i] == a[i]);
}

TEST_CASE("connected-only restriction") {
    RealizationOptions opts;
    opts.connected_only = true;
    auto classes = enumerate_realizations({{2, 2, 2, 0}}, opts);
    CHECK(classes.empty());
}

TEST_CASE("colored degree set of the domino colorings") {
    Graph dom = ts::domino();

    auto two = ts::domino_two_coloring(dom);
    auto cds2 = colored_degree_set(dom, std::span<const int>(two.colors()), two.color_count());
    std::vector<std::vector<int>> expected2{{2, 1}, {2, 1}, {2, 0}, {2, 0}, {0, 2}, {0, 2}};
    std::sort(expected2.begin(), expected2.end(), std::greater<std::vector<int>>());
    CHECK(cds2.tuples == expected2);

    auto three = ts::domino_three_coloring(dom);
    auto cds3 = colored_degree_set(dom, std::span<const int>(three.colors()), three.color_count());
    std::vector<std::vector<int>> expected3{{2, 0, 0}, {1, 1, 1}, {1, 0, 1},
                                            {0, 2, 0}, {0, 1, 1}, {0, 0, 3}};
    std::sort(expected3.begin(), expected3.end(), std::greater<std::vector<int>>());
    CHECK(cds3.tuples == expected3);
}

TEST_CASE("single color tuples equal the degree set") {
    ts::Rng rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = ts::random_graph(6, 0.5, rng);
        if (g.edge_count() == 0) continue;
        std::vector<int> ones(g.edge_count(), 1);
        auto cds = colored_degree_set(g, ones, 1);
        std::vector<int> flattened;
        for (const auto& t : cds.tuples) flattened.push_back(t[0]);
        CHECK(flattened == degree_set(g).values);
    }
}

TEST_CASE("colored enumeration: trivial and infeasible inputs") {
    // {(1),(1)} with one color: exactly K2.
    auto k2 = enumerate_colored_realizations({1, {{1}, {1}}});
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].graph.edge_count() == 1);

    // Odd column sum: empty stream, not an error.
    CHECK(enumerate_colored_realizations({1, {{1}, {1}, {1}}}).empty());
    // Feasible-looking but unrealizable: two vertices cannot carry degree 2.
    CHECK(enumerate_colored_realizations({1, {{2}, {2}}}).empty());

    CHECK_THROWS_AS(enumerate_colored_realizations({2, {{1}, {1}}}), ValidationError);
}

TEST_CASE("colored realizations of the domino colorings") {
    Graph dom = ts::domino();

    // The 2-coloring's colored degree set does not pin the graph down.
    auto two = ts::domino_two_coloring(dom);
    auto cds2 = colored_degree_set(dom, std::span<const int>(two.colors()), 2);
    auto classes2 = enumerate_colored_realizations(cds2);
    std::map<CanonicalCode, int> underlying2;
    for (const auto& r : classes2) ++underlying2[canonical_code(r.graph)];
    CHECK(underlying2.size() >= 2);

    // The 3-coloring's does: every colored realization has the domino under it.
    auto three = ts::domino_three_coloring(dom);
    auto cds3 = colored_degree_set(dom, std::span<const int>(three.colors()), 3);
    auto classes3 = enumerate_colored_realizations(cds3);
    CHECK(!classes3.empty());
    for (const auto& r : classes3) CHECK(are_isomorphic(r.graph, dom));
}

TEST_CASE("colored realizations respect their colored degree set") {
    ts::Rng rng(59);
    std::uniform_int_distribution<int> color(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = ts::random_graph(5, 0.5, rng);
        if (g.edge_count() == 0) continue;
        std::vector<int> colors;
        for (int i = 0; i < g.edge_count(); ++i) colors.push_back(color(rng));
        auto c = EdgeColoring::normalized(g, colors);
        auto cds = colored_degree_set(g, std::span<const int>(c.colors()), c.color_count());
        for (const auto& r : enumerate_colored_realizations(cds)) {
            auto rds = colored_degree_set(r.graph, std::span<const int>(r.edge_colors), r.colors);
            CHECK(rds == cds);
        }
    }
}

TEST_CASE("colored round trip: each colored graph matches exactly one class") {
    ts::Rng rng(61);
    std::uniform_int_distribution<int> color(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = ts::random_graph(5 + trial % 2, 0.45, rng);
        if (g.edge_count() == 0) continue;
        std::vector<int> colors;
        for (int i = 0; i < g.edge_count(); ++i) colors.push_back(color(rng));
        auto c = EdgeColoring::normalized(g, colors);
        auto cds = colored_degree_set(g, std::span<const int>(c.colors()), c.color_count());
        auto mine = canonical_code_colored(g, c.colors(), c.color_count());
        int hits = 0;
        for (const auto& r : enumerate_colored_realizations(cds))
            if (canonical_code_colored(r.graph, r.edge_colors, r.colors) == mine) ++hits;
        CHECK(hits == 1);
    }
}

TEST_CASE("projection: per-vertex tuple sums form the underlying degree set") {
    ts::Rng rng(67);
    std::uniform_int_distribution<int> color(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = ts::random_graph(6, 0.4, rng);
        if (g.edge_count() == 0) continue;
        std::vector<int> colors;
        for (int i = 0; i < g.edge_count(); ++i) colors.push_back(color(rng));
        auto c = EdgeColoring::normalized(g, colors);
        auto cds = colored_degree_set(g, std::span<const int>(c.colors()), c.color_count());
        std::vector<int> sums;
        for (const auto& t : cds.tuples) sums.push_back(std::accumulate(t.begin(), t.end(), 0));
        std::sort(sums.begin(), sums.end(), std::greater<int>());
        CHECK(sums == degree_set(g).values);
        CHECK(is_graphical({sums}));
    }
}
