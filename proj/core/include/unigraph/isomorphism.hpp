#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unigraph/graph.hpp"

namespace unigraph {

// Hard bound for canonical forms. Beyond it operations throw SizeBoundError;
// they never degrade to a heuristic.
inline constexpr int kCanonicalVertexLimit = 12;

// Total-order key with code(G) == code(H) iff G and H are isomorphic
// (colored variant: iff color-preserving isomorphic).
//
// Layout: bytes[0] = n, bytes[1] = pair-entry alphabet size, then one byte
// per vertex pair. Pair entries follow vertex placement order: when the
// vertex at canonical position t is placed, its entries against positions
// 0..t-1 are appended. Plain graphs use entries 0/1; colored graphs use
// 0 for a non-edge and the edge color otherwise. The encoding is the one
// realized by an actual relabeling, so equal codes decode to equal graphs.
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const Graph& g);

// Canonical form of an edge-colored graph under color-preserving isomorphism.
// edge_labels is parallel to g.edges(), values in 1..label_count.
CanonicalCode canonical_code_colored(const Graph& g, const std::vector<int>& edge_labels,
                                     int label_count);

// Backtracking isomorphism test, independent of the canonical-code path.
// Returns a witness bijection f with f[v in g] = vertex in h, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace unigraph
