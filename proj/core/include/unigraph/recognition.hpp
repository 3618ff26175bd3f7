#pragma once

#include <optional>
#include <string>

#include "unigraph/graph.hpp"

namespace unigraph {

enum class RecognitionFilter {
    InducedP5,
    Diameter,
    DisconnectedStructure,
    Oracle,
};

std::string to_string(RecognitionFilter f);

// Necessary-condition reasons; a hit certifies "not a unigraph".
using FastFilterResult = std::optional<RecognitionFilter>;

// Checks only necessary conditions: an induced path with four edges, a
// connected graph of diameter > 3, or two components with >= 3 vertices.
// nullopt means unknown (never "is a unigraph").
FastFilterResult fast_filter(const Graph& g);

struct RecognitionVerdict {
    bool is_unigraph = false;
    // Same degree set, not isomorphic to the input; present iff not a unigraph.
    std::optional<Graph> witness;
    RecognitionFilter decided_by = RecognitionFilter::Oracle;
};

struct RecognitionLimits {
    int max_vertices = 12;
};

// Complete decision via realization enumeration, with the fast filters as
// shortcuts. The enumeration stops at the first realization that is not
// isomorphic to g, which doubles as the witness.
RecognitionVerdict is_unigraph(const Graph& g, const RecognitionLimits& limits = {});

bool is_connected_unigraph(const Graph& g, const RecognitionLimits& limits = {});

// Same-degree-set non-isomorphic graph built by an edge swap across two
// components that both have >= 3 vertices: from each component delete a cycle
// edge if one exists, otherwise a pendant edge (with u_i its degree-1 end),
// then add {u1,u2} and {v1,v2}.
Graph disconnected_witness(const Graph& g);

// Trees that are connected unigraphs, per their three possible shapes.
struct TreeUnigraphClass {
    enum class Tag { K2, Star, DoubleStar, NotTreeUnigraph };
    Tag tag = Tag::NotTreeUnigraph;
    int p = 0;       // Star: leaf count, p >= 2
    int q = 0, r = 0;  // DoubleStar: per-center leaf counts, q >= r >= 1
};

// Classifies a tree; the first three tags apply exactly to trees with at
// least one edge and diameter <= 3. The single-vertex tree has no edges to
// pattern-match and classifies as NotTreeUnigraph.
TreeUnigraphClass tree_unigraph_class(const Graph& tree);

}  // namespace unigraph
