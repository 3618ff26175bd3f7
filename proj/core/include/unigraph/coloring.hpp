#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "unigraph/graph.hpp"
#include "unigraph/realizations.hpp"
#include "unigraph/recognition.hpp"

namespace unigraph {

// Total assignment of colors 1..k to the edges of a host graph; need not be
// proper. Colors are stored parallel to host.edges(), and every color in
// 1..k is used. User-facing input goes through normalized(), which relabels
// colors by first appearance over the host's edge order; internal machinery
// that must keep colors aligned with a colored degree set uses exact().
class EdgeColoring {
public:
    EdgeColoring() = default;

    // Relabels arbitrary positive colors to 1..k by first appearance.
    static EdgeColoring normalized(const Graph& host, std::vector<int> colors);

    // Keeps the given colors; requires every color in 1..k to be used.
    static EdgeColoring exact(const Graph& host, std::vector<int> colors, int k);

    int color_count() const { return k_; }
    const std::vector<int>& colors() const { return colors_; }
    int color_at(std::size_t edge_index) const { return colors_[edge_index]; }

    // Edges grouped per color, classes[i] for color i+1; each class keeps the
    // host's edge order.
    std::vector<std::vector<Edge>> classes(const Graph& host) const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    int k_ = 0;
    std::vector<int> colors_;
};

enum class BadClassReason { Disconnected, NotUnigraph };

struct BadColorClass {
    int color = 0;
    BadClassReason reason = BadClassReason::Disconnected;
};

struct NonUniqueRealization {
    Graph witness;
    EdgeColoring witness_coloring;  // same colored degree set as the input
};

struct ColoringVerdict {
    bool accepted = false;
    std::optional<std::variant<BadColorClass, NonUniqueRealization>> failure;
};

// Set of vertices meeting every edge of its host.
struct VertexCover {
    std::vector<int> vertices;
    bool exact = true;  // false only for the explicitly requested greedy fallback
};

ColoredDegreeSet colored_degree_set(const Graph& g, const EdgeColoring& c);

// Edge-induced subgraph of the color-i edges.
SubgraphResult color_subgraph(const Graph& g, const EdgeColoring& c, int color);

// Accepted iff every color class induces a connected unigraph; otherwise the
// least failing color is reported.
ColoringVerdict is_unigraphic_coloring(const Graph& g, const EdgeColoring& c,
                                       const RecognitionLimits& limits = {});

struct StrongCheckLimits {
    int max_vertices = 10;
    int max_edges = 16;
};

// Accepted iff the coloring is unigraphic and every edge-colored graph with
// the same colored degree set has its underlying graph isomorphic to g.
// Exponential by construction; refuses inputs beyond the limits.
ColoringVerdict is_strongly_unigraphic_coloring(const Graph& g, const EdgeColoring& c,
                                                const StrongCheckLimits& limits = {},
                                                const RecognitionLimits& rec_limits = {});

// Every color class is K2 or K_{1,p}.
bool is_star_coloring(const Graph& g, const EdgeColoring& c);

// Adjacency of u,v evaluated from colored degrees and per-color edge counts
// only: some color i has |E_i| = 1 with both color-i degrees 1, or |E_i| >= 2
// with min color-i degree 1 and max >= 2. Requires a star coloring.
bool star_adjacency(const Graph& g, const EdgeColoring& c, int u, int v);

struct VertexCoverOptions {
    int max_exact_vertices = 64;
    // Greedy maximal-matching 2-approximation, used only when set; the result
    // is marked inexact. Never substituted silently.
    bool allow_approximate = false;
};

VertexCover minimum_vertex_cover(const Graph& g, const VertexCoverOptions& opts = {});

// The construction behind the vertex-cover upper bound: cover vertices are
// ranked by descending degree (ties by id) as v_1..v_k, every other vertex
// ranks after them, and edge {v_i,v_j} gets color min{i,j}. The result is a
// star coloring with one class per cover vertex that covers an edge privately.
EdgeColoring star_coloring_from_vertex_cover(const Graph& g, const std::vector<int>& cover);

// tau(g) together with the star coloring from a minimum cover; a strongly
// unigraphic coloring, hence an upper bound for both w and s.
std::pair<int, EdgeColoring> strong_upper_bound(const Graph& g,
                                                const VertexCoverOptions& opts = {});

}  // namespace unigraph
