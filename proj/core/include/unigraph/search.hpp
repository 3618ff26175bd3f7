#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "unigraph/coloring.hpp"
#include "unigraph/graph.hpp"
#include "unigraph/isomorphism.hpp"

namespace unigraph {

struct SearchLimits {
    int max_vertices = 12;        // class oracle bound
    int max_edges_unigraph = 24;  // w search
    int max_edges_strong = 15;    // s search
    int max_vertices_strong = 10;
    bool prune = true;  // false = unpruned exhaustive layer (for cross-checks)
    int workers = 1;    // parallel top-level branching; the reported witness is unaffected
};

// Memoizes per-class unigraph verdicts (keyed by canonical code) and strong
// verdicts (keyed by a color-permutation-invariant colored degree set key).
// Not thread-safe; use one context per thread.
class SearchContext {
public:
    bool class_is_connected_unigraph(const Graph& class_subgraph, int max_vertices);
    std::map<std::vector<int>, bool>& strong_cache() { return strong_cache_; }

private:
    std::map<CanonicalCode, bool> class_cache_;
    std::map<std::vector<int>, bool> strong_cache_;
};

// Minimum k admitting a k-unigraphic coloring, with the lexicographically
// least witness (by per-edge class assignment over the sorted edge order).
// Iterates k = 1, 2, ...; a new color class may only be opened by the least
// uncolored edge, and partial classes are pruned when no completion within
// the unassigned edges can keep every class-vertex pair within distance 3.
std::pair<int, EdgeColoring> unigraph_number(const Graph& g, const SearchLimits& limits = {},
                                             SearchContext* ctx = nullptr);

// Minimum k admitting a k-strongly-unigraphic coloring. Enumerates
// k-unigraphic colorings starting from k = w(G) and strong-checks each,
// caching verdicts per colored degree set. Exponential by construction.
std::pair<int, EdgeColoring> strong_unigraph_number(const Graph& g, const SearchLimits& limits = {},
                                                    SearchContext* ctx = nullptr);

enum class BoundProvenance { Trivial, VertexCover, TreeLemma, Search };

std::string to_string(BoundProvenance p);

struct BoundEntry {
    int value = 0;
    BoundProvenance source = BoundProvenance::Trivial;
};

struct DecompositionReport {
    std::optional<int> w;
    std::optional<EdgeColoring> w_witness;
    std::optional<int> s;
    std::optional<EdgeColoring> s_witness;
    std::vector<BoundEntry> w_lower, w_upper, s_lower, s_upper;
};

// Bounds without running the partition search: the trivial lower bound, 2
// when a cheap not-unigraph certificate exists, the vertex-cover upper bound
// with its star-coloring witness, and for trees the exact w via the edge
// domination number.
DecompositionReport bounds(const Graph& g, SearchContext* ctx = nullptr);

}  // namespace unigraph
