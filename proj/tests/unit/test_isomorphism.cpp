#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "corpus.hpp"
#include "unigraph/errors.hpp"
#include "unigraph/isomorphism.hpp"

using namespace unigraph;
namespace ts = unigraph::testsupport;

namespace {

bool witness_valid(const Graph& g, const Graph& h, const std::vector<int>& f) {
    std::set<int> image(f.begin(), f.end());
    if (static_cast<int>(image.size()) != g.vertex_count()) return false;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v) != h.has_edge(f[u], f[v])) return false;
    return true;
}

Graph c6_plus_chord(int a, int b) {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
    edges.push_back(make_edge(a, b));
    return Graph(6, edges);
}

// Decodes a canonical code back into a graph, per the documented layout.
Graph decode(const CanonicalCode& code) {
    int n = code.bytes[0];
    std::vector<Edge> edges;
    std::size_t pos = 2;
    for (int t = 1; t < n; ++t)
        for (int s = 0; s < t; ++s, ++pos)
            if (code.bytes[pos]) edges.push_back({s, t});
    return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("domino is isomorphic to C6 plus an antipodal chord") {
    Graph dom = ts::domino();
    auto f = find_isomorphism(dom, c6_plus_chord(0, 3));
    REQUIRE(f.has_value());
    CHECK(witness_valid(dom, c6_plus_chord(0, 3), *f));
    CHECK(canonical_code(dom) == canonical_code(c6_plus_chord(0, 3)));
}

TEST_CASE("domino is not isomorphic to the triangle-bearing realization") {
    Graph dom = ts::domino();
    CHECK_FALSE(are_isomorphic(dom, c6_plus_chord(0, 2)));
    CHECK(canonical_code(dom) != canonical_code(c6_plus_chord(0, 2)));
}

TEST_CASE("identity witness") {
    Graph dom = ts::domino();
    auto f = find_isomorphism(dom, dom);
    REQUIRE(f.has_value());
    CHECK(witness_valid(dom, dom, *f));
}

TEST_CASE("non-isomorphic trees get distinct codes") {
    CHECK(canonical_code(path_graph(4)) != canonical_code(star_graph(3)));
}

TEST_CASE("codes are stable under relabeling") {
    ts::Rng rng(101);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = ts::random_graph(2 + trial % 9, 0.4, rng);
        CHECK(canonical_code(ts::shuffled(g, rng)) == canonical_code(g));
    }
}

TEST_CASE("codes decode to an isomorphic graph") {
    ts::Rng rng(131);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = ts::random_graph(3 + trial % 8, 0.45, rng);
        Graph canon = decode(canonical_code(g));
        CHECK(are_isomorphic(g, canon));
    }
}

TEST_CASE("distinct code counts match unlabeled graph counts for n <= 6") {
    // 1, 2, 4, 11, 34, 156 unlabeled graphs on 1..6 vertices. Codes are
    // realized by actual relabelings, so collisions are impossible; matching
    // counts over all labeled graphs therefore verifies exactness.
    const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        std::set<CanonicalCode> codes;
        const int pairs = n * (n - 1) / 2;
        std::vector<Edge> all_pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<Edge> edges;
            for (int b = 0; b < pairs; ++b)
                if ((mask >> b) & 1) edges.push_back(all_pairs[b]);
            codes.insert(canonical_code(Graph(n, std::move(edges))));
        }
        CHECK(codes.size() == expected[n - 1]);
    }
}

TEST_CASE("code equality matches the backtracking matcher") {
    ts::Rng rng(151);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 4 + trial % 4;
        Graph a = ts::random_graph(n, 0.5, rng);
        Graph b = (trial % 3 == 0) ? ts::shuffled(a, rng) : ts::random_graph(n, 0.5, rng);
        CHECK(are_isomorphic(a, b) == (canonical_code(a) == canonical_code(b)));
    }
}

TEST_CASE("isomorphism is an equivalence relation on random triples") {
    ts::Rng rng(163);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + trial % 6;
        Graph a = ts::random_graph(n, 0.5, rng);
        Graph b = (trial % 2) ? ts::shuffled(a, rng) : ts::random_graph(n, 0.5, rng);
        Graph c = (trial % 4 < 2) ? ts::shuffled(b, rng) : ts::random_graph(n, 0.5, rng);
        CHECK(are_isomorphic(a, a));
        CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
        if (are_isomorphic(a, b) && are_isomorphic(b, c)) CHECK(are_isomorphic(a, c));
    }
}

TEST_CASE("isomorphism witnesses preserve edges") {
    ts::Rng rng(173);
    for (int trial = 0; trial < 60; ++trial) {
        Graph a = ts::random_graph(7, 0.4, rng);
        Graph b = ts::shuffled(a, rng);
        auto f = find_isomorphism(a, b);
        REQUIRE(f.has_value());
        CHECK(witness_valid(a, b, *f));
    }
}

TEST_CASE("colored codes separate colors but not labelings") {
    Graph p3 = path_graph(3);
    CHECK(canonical_code_colored(p3, {1, 2}, 2) == canonical_code_colored(p3, {2, 1}, 2));

    Graph p4 = path_graph(4);
    // End-colored vs middle-colored are genuinely different colored graphs.
    CHECK(canonical_code_colored(p4, {2, 1, 1}, 2) != canonical_code_colored(p4, {1, 2, 1}, 2));

    ts::Rng rng(191);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = ts::random_graph(6, 0.5, rng);
        if (g.edge_count() == 0) continue;
        std::vector<int> labels;
        std::uniform_int_distribution<int> color(1, 3);
        for (int i = 0; i < g.edge_count(); ++i) labels.push_back(color(rng));

        std::vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = relabeled(g, perm);
        std::vector<int> hlabels(h.edge_count());
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edges()[i];
            hlabels[h.edge_index(perm[e.u], perm[e.v])] = labels[i];
        }
        CHECK(canonical_code_colored(g, labels, 3) == canonical_code_colored(h, hlabels, 3));
    }
}

TEST_CASE("size bound is enforced") {
    Graph big(13, {});
    CHECK_THROWS_AS(canonical_code(big), SizeBoundError);
    CHECK_THROWS_AS(canonical_code_colored(big, {}, 1), SizeBoundError);
    CHECK_NOTHROW(canonical_code(Graph(12, {})));
}

TEST_CASE("corpus counts double-check the canonical form") {
    // Unlabeled graph counts 1,2,4,11,34 for n=1..5 and trees 1,1,2,3,6,11,23
    // for n=2..8.
    CHECK(ts::all_graphs(4).size() == 11);
    CHECK(ts::all_graphs(5).size() == 34);
    CHECK(ts::all_trees(7).size() == 11);
    CHECK(ts::all_trees(8).size() == 23);
    CHECK(ts::all_connected_graphs(5).size() == 21);
}
