#pragma once

#include <functional>
#include <span>
#include <vector>

#include "unigraph/graph.hpp"

namespace unigraph {

// True iff some simple graph realizes the degree multiset (Erdos-Gallai).
bool is_graphical(const DegreeSet& ds);

struct RealizationOptions {
    bool connected_only = false;  // restrict the stream to connected graphs
    int max_vertices = 12;        // canonical-form bound; fail loudly beyond
    int workers = 1;              // parallel top-level branching; output order is unaffected
};

// All isomorphism classes of simple graphs with degree set ds, each exactly
// once, ordered by canonical code. Degree-0 entries yield isolated vertices.
std::vector<Graph> enumerate_realizations(const DegreeSet& ds, const RealizationOptions& opts = {});

// Visits every labeled realization (vertex i has degree ds.values[i]) exactly
// once, in a fixed deterministic order. Return false from the visitor to stop.
// This is the lazy layer behind enumerate_realizations and the recognition
// oracle; callers dedupe by isomorphism themselves if they need classes.
void visit_labeled_realizations(const DegreeSet& ds, const std::function<bool(const Graph&)>& visit,
                                int max_vertices = 12);

// Multiset of per-vertex color-degree tuples of an edge-colored graph.
// Tuples are stored sorted descending (lexicographically).
struct ColoredDegreeSet {
    int colors = 0;
    std::vector<std::vector<int>> tuples;
    friend auto operator<=>(const ColoredDegreeSet&, const ColoredDegreeSet&) = default;
};

// edge_colors is parallel to g.edges(), values in 1..colors.
ColoredDegreeSet colored_degree_set(const Graph& g, std::span<const int> edge_colors, int colors);

// An edge-colored graph produced by the colored enumerator. edge_colors is
// parallel to graph.edges() with values in 1..colors; a color may be unused
// when the requested colored degree set has an all-zero column.
struct ColoredRealization {
    Graph graph;
    std::vector<int> edge_colors;
    int colors = 0;
};

// All color-preserving isomorphism classes of simple edge-colored graphs with
// colored degree set cds, each exactly once, ordered by colored canonical
// code. Infeasible inputs yield an empty stream rather than an error.
std::vector<ColoredRealization> enumerate_colored_realizations(const ColoredDegreeSet& cds,
                                                               const RealizationOptions& opts = {});

// Labeled lazy layer of the colored enumerator (vertex i carries tuple i of
// cds). Return false from the visitor to stop.
void visit_labeled_colored_realizations(
    const ColoredDegreeSet& cds,
    const std::function<bool(const Graph&, const std::vector<int>&)>& visit,
    int max_vertices = 12);

}  // namespace unigraph
