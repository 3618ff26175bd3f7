#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace unigraph {

// Undirected edge, stored with u < v after normalization.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes endpoint order; does not validate ranges.
inline Edge make_edge(int a, int b) { return a <= b ? Edge{a, b} : Edge{b, a}; }

// Finite simple undirected graph on vertices 0..n-1. Immutable after
// construction; all free operations on Graph are pure and thread-safe.
class Graph {
public:
    Graph() = default;

    // Validates: endpoints in [0,n), no self-loops, no duplicate edges.
    // Edges are normalized to u < v and kept sorted lexicographically.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;
    // Index into edges() of {u,v}, or -1 if absent.
    int edge_index(int u, int v) const;

    // Adjacency rows as bitmasks, available when n <= 64.
    bool has_bitmask_rows() const { return n_ <= 64; }
    std::uint64_t adjacency_bits(int v) const { return bits_[v]; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
};

// Multiset of vertex degrees, stored descending.
struct DegreeSet {
    std::vector<int> values;
    friend auto operator<=>(const DegreeSet&, const DegreeSet&) = default;
};

DegreeSet degree_set(const Graph& g);

// Subgraph together with the relabeling: vertex_map[new_id] = original id.
struct SubgraphResult {
    Graph graph;
    std::vector<int> vertex_map;
};

// Subgraph induced by a vertex set (duplicates in `vertices` are collapsed).
SubgraphResult vertex_induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Subgraph induced by an edge set: vertices are exactly the endpoints of F.
SubgraphResult edge_induced_subgraph(const Graph& g, const std::vector<Edge>& f);

// The empty and single-vertex graphs count as connected.
bool is_connected(const Graph& g);

// Components listed by smallest contained vertex, each sorted ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Max shortest-path distance over vertex pairs; nullopt when disconnected.
// Empty and single-vertex graphs have diameter 0.
std::optional<int> diameter(const Graph& g);

// Finds a vertex 5-set inducing exactly a path with four edges, if any.
// Searches by extending induced paths, so sparse graphs are cheap.
std::optional<std::array<int, 5>> find_induced_p5(const Graph& g);

// Copy with vertex u renamed to perm[u]. perm must be a bijection on 0..n-1.
Graph relabeled(const Graph& g, const std::vector<int>& perm);

// Common constructions.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);                 // K_{1,p}, center 0
Graph double_star_graph(int q, int r);        // S_{q,r}, centers 0 and 1

std::string to_string(const Edge& e);

}  // namespace unigraph
