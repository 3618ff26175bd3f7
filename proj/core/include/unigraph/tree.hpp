#pragma once

#include <utility>
#include <vector>

#include "unigraph/coloring.hpp"
#include "unigraph/graph.hpp"

namespace unigraph {

// Edge set E' such that every edge outside E' shares an endpoint with E'.
struct EdgeDominatingSet {
    std::vector<Edge> edges;
};

bool is_edge_dominating(const Graph& g, const std::vector<Edge>& edges);

// Minimum edge dominating set of a tree in O(n): one pass of a rooted DP
// with three states per vertex (matched by a chosen edge in its subtree /
// unmatched with everything below dominated / unmatched with child edges
// left for the parent edge to dominate), then a reconstruction pass.
EdgeDominatingSet min_edge_dominating_set_tree(const Graph& tree);

int edge_domination_number_tree(const Graph& tree);

// Colors dominator e'_i (input order) with i and every other edge with the
// least i whose dominator touches it. On a tree every class comes out as
// K2, K_{1,p} or S_{q,r}, so the coloring is unigraphic.
EdgeColoring coloring_from_edge_dominating_set(const Graph& tree,
                                               const EdgeDominatingSet& dominators);

// One edge per color class: the only edge of a K2, the lexicographically
// least edge of a K_{1,p}, the center-center edge of an S_{q,r}. Requires a
// unigraphic coloring (equivalently, on a tree, those class shapes).
EdgeDominatingSet edge_dominating_set_from_coloring(const Graph& tree, const EdgeColoring& c);

// Unigraph number of a tree with a witness coloring, in O(n): the edge
// domination number and the induced coloring of a minimum dominating set.
std::pair<int, EdgeColoring> tree_unigraph_number(const Graph& tree);

// Exact minimum by subset enumeration over any graph; oracle for the DP.
EdgeDominatingSet brute_force_min_edge_dominating_set(const Graph& g, int max_edges = 20);

}  // namespace unigraph
