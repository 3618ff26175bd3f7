#include "unigraph/graph.hpp"

#include <algorithm>
#include <queue>

#include "unigraph/errors.hpp"

namespace unigraph {

std::string to_string(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw ValidationError("self-loop at edge " + to_string(e));
        if (e.u < 0 || e.v >= n_)
            throw ValidationError("edge " + to_string(e) + ": endpoint out of range [0," +
                                  std::to_string(n_) + ")");
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw ValidationError("duplicate edge " + to_string(edges[i]));
    edges_ = std::move(edges);

    adj_.resize(n_);
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());

    if (n_ <= 64) {
        bits_.assign(n_, 0);
        for (const Edge& e : edges_) {
            bits_[e.u] |= std::uint64_t{1} << e.v;
            bits_[e.v] |= std::uint64_t{1} << e.u;
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (!bits_.empty()) return (bits_[u] >> v) & 1;
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

int Graph::edge_index(int u, int v) const {
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

DegreeSet degree_set(const Graph& g) {
    DegreeSet ds;
    ds.values.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) ds.values.push_back(g.degree(v));
    std::sort(ds.values.begin(), ds.values.end(), std::greater<int>());
    return ds;
}

SubgraphResult vertex_induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> keep = vertices;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep)
        if (v < 0 || v >= g.vertex_count())
            throw ValidationError("vertex " + std::to_string(v) + " out of range");

    std::vector<int> to_new(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) to_new[keep[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (to_new[e.u] >= 0 && to_new[e.v] >= 0)
            edges.push_back(make_edge(to_new[e.u], to_new[e.v]));
    return {Graph(static_cast<int>(keep.size()), std::move(edges)), std::move(keep)};
}

SubgraphResult edge_induced_subgraph(const Graph& g, const std::vector<Edge>& f) {
    std::vector<int> endpoints;
    for (Edge e : f) {
        e = make_edge(e.u, e.v);
        if (g.edge_index(e.u, e.v) < 0)
            throw ValidationError("edge " + to_string(e) + " not in graph");
        endpoints.push_back(e.u);
        endpoints.push_back(e.v);
    }
    std::sort(endpoints.begin(), endpoints.end());
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());

    std::vector<int> to_new(g.vertex_count(), -1);
    for (std::size_t i = 0; i < endpoints.size(); ++i) to_new[endpoints[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    edges.reserve(f.size());
    for (Edge e : f) edges.push_back(make_edge(to_new[e.u], to_new[e.v]));
    return {Graph(static_cast<int>(endpoints.size()), std::move(edges)), std::move(endpoints)};
}

namespace {

// BFS distances from src; -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> queue;
    queue.reserve(g.vertex_count());
    dist[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.vertex_count(), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::optional<int> diameter(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    if (!is_connected(g)) return std::nullopt;
    if (g.edge_count() == n - 1) {
        // Tree: double BFS finds the diameter exactly.
        auto d0 = bfs_distances(g, 0);
        int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
        auto d1 = bfs_distances(g, far);
        return *std::max_element(d1.begin(), d1.end());
    }
    int best = 0;
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

namespace {

bool extend_induced_path(const Graph& g, std::array<int, 5>& path, int len,
                         std::vector<bool>& in_path) {
    if (len == 5) return true;
    int last = path[len - 1];
    for (int next : g.neighbors(last)) {
        if (in_path[next]) continue;
        bool induced = true;
        for (int i = 0; i + 1 < len; ++i)
            if (g.has_edge(next, path[i])) {
                induced = false;
                break;
            }
        if (!induced) continue;
        path[len] = next;
        in_path[next] = true;
        if (extend_induced_path(g, path, len + 1, in_path)) return true;
        in_path[next] = false;
    }
    return false;
}

}  // namespace

std::optional<std::array<int, 5>> find_induced_p5(const Graph& g) {
    if (g.vertex_count() < 5) return std::nullopt;
    std::array<int, 5> path{};
    std::vector<bool> in_path(g.vertex_count(), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        path[0] = s;
        in_path[s] = true;
        if (extend_induced_path(g, path, 1, in_path)) return path;
        in_path[s] = false;
    }
    return std::nullopt;
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw ValidationError("permutation size mismatch");
    std::vector<bool> hit(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= static_cast<int>(perm.size()) || hit[p])
            throw ValidationError("not a permutation");
        hit[p] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
    return Graph(g.vertex_count(), std::move(edges));
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw ValidationError("negative leaf count");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph(leaves + 1, std::move(edges));
}

Graph double_star_graph(int q, int r) {
    if (q < 1 || r < 1) throw ValidationError("double star needs q >= 1 and r >= 1");
    std::vector<Edge> edges{{0, 1}};
    int next = 2;
    for (int i = 0; i < q; ++i) edges.push_back({0, next++});
    for (int i = 0; i < r; ++i) edges.push_back({1, next++});
    return Graph(next, std::move(edges));
}

}  // namespace unigraph
