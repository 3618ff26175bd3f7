#include "unigraph/coloring.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "unigraph/errors.hpp"
#include "unigraph/isomorphism.hpp"

namespace unigraph {

EdgeColoring EdgeColoring::normalized(const Graph& host, std::vector<int> colors) {
    if (static_cast<int>(colors.size()) != host.edge_count())
        throw ValidationError("coloring does not cover the edge set exactly");
    std::map<int, int> relabel;
    for (int& c : colors) {
        if (c < 1) throw ValidationError("colors must be positive integers");
        auto [it, fresh] = relabel.emplace(c, static_cast<int>(relabel.size()) + 1);
        c = it->second;
    }
    EdgeColoring out;
    out.k_ = static_cast<int>(relabel.size());
    out.colors_ = std::move(colors);
    return out;
}

EdgeColoring EdgeColoring::exact(const Graph& host, std::vector<int> colors, int k) {
    if (static_cast<int>(colors.size()) != host.edge_count())
        throw ValidationError("coloring does not cover the edge set exactly");
    std::vector<bool> used(k, false);
    for (int c : colors) {
        if (c < 1 || c > k) throw ValidationError("edge color out of range 1..k");
        used[c - 1] = true;
    }
    for (int c = 0; c < k; ++c)
        if (!used[c]) throw ValidationError("color " + std::to_string(c + 1) + " is unused");
    EdgeColoring out;
    out.k_ = k;
    out.colors_ = std::move(colors);
    return out;
}

std::vector<std::vector<Edge>> EdgeColoring::classes(const Graph& host) const {
    std::vector<std::vector<Edge>> out(k_);
    for (std::size_t i = 0; i < colors_.size(); ++i)
        out[colors_[i] - 1].push_back(host.edges()[i]);
    return out;
}

ColoredDegreeSet colored_degree_set(const Graph& g, const EdgeColoring& c) {
    return colored_degree_set(g, std::span<const int>(c.colors()), c.color_count());
}

SubgraphResult color_subgraph(const Graph& g, const EdgeColoring& c, int color) {
    if (color < 1 || color > c.color_count())
        throw ValidationError("color " + std::to_string(color) + " out of range 1.." +
                              std::to_string(c.color_count()));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < c.colors().size(); ++i)
        if (c.color_at(i) == color) edges.push_back(g.edges()[i]);
    return edge_induced_subgraph(g, edges);
}

ColoringVerdict is_unigraphic_coloring(const Graph& g, const EdgeColoring& c,
                                       const RecognitionLimits& limits) {
    if (static_cast<int>(c.colors().size()) != g.edge_count())
        throw ValidationError("coloring does not match the host graph");
    for (int color = 1; color <= c.color_count(); ++color) {
        auto sub = color_subgraph(g, c, color);
        if (!is_connected(sub.graph))
            return {false, BadColorClass{color, BadClassReason::Disconnected}};
        if (!is_unigraph(sub.graph, limits).is_unigraph)
            return {false, BadColorClass{color, BadClassReason::NotUnigraph}};
    }
    return {true, std::nullopt};
}

ColoringVerdict is_strongly_unigraphic_coloring(const Graph& g, const EdgeColoring& c,
                                                const StrongCheckLimits& limits,
                                                const RecognitionLimits& rec_limits) {
    auto weak = is_unigraphic_coloring(g, c, rec_limits);
    if (!weak.accepted) return weak;
    if (g.vertex_count() > limits.max_vertices || g.edge_count() > limits.max_edges)
        throw SizeBoundError("strong coloring check supports at most " +
                             std::to_string(limits.max_vertices) + " vertices and " +
                             std::to_string(limits.max_edges) + " edges");

    const CanonicalCode host_code = canonical_code(g);
    auto cds = colored_degree_set(g, c);
    std::optional<NonUniqueRealization> witness;
    visit_labeled_colored_realizations(cds, [&](const Graph& h, const std::vector<int>& colors) {
        if (canonical_code(h) != host_code) {
            witness = NonUniqueRealization{h, EdgeColoring::exact(h, colors, cds.colors)};
            return false;
        }
        return true;
    });
    if (witness) return {false, std::move(*witness)};
    return {true, std::nullopt};
}

namespace {

// m = n'-1 with one vertex meeting every edge: K2 (n'=2) or K_{1,p} (p>=2).
bool class_is_star(const Graph& sub) {
    const int n = sub.vertex_count();
    if (n < 2 || sub.edge_count() != n - 1) return false;
    int max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, sub.degree(v));
    return max_deg == n - 1;
}

}  // namespace

bool is_star_coloring(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.colors().size()) != g.edge_count())
        throw ValidationError("coloring does not match the host graph");
    for (int color = 1; color <= c.color_count(); ++color)
        if (!class_is_star(color_subgraph(g, c, color).graph)) return false;
    return true;
}

bool star_adjacency(const Graph& g, const EdgeColoring& c, int u, int v) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v)
        throw ValidationError("invalid vertex pair");
    if (!is_star_coloring(g, c)) throw ValidationError("not a star coloring");

    const int k = c.color_count();
    std::vector<int> class_size(k, 0), deg_u(k, 0), deg_v(k, 0);
    for (std::size_t i = 0; i < c.colors().size(); ++i) {
        int ci = c.color_at(i) - 1;
        ++class_size[ci];
        const Edge& e = g.edges()[i];
        if (e.u == u || e.v == u) ++deg_u[ci];
        if (e.u == v || e.v == v) ++deg_v[ci];
    }
    for (int i = 0; i < k; ++i) {
        if (class_size[i] == 1 && deg_u[i] == 1 && deg_v[i] == 1) return true;
        if (class_size[i] >= 2 && std::min(deg_u[i], deg_v[i]) == 1 &&
            std::max(deg_u[i], deg_v[i]) >= 2)
            return true;
    }
    return false;
}

namespace {

struct CoverSearch {
    const Graph& g;
    std::vector<std::uint64_t> adj;  // masked to active vertices on the fly
    std::uint64_t best_cover = 0;
    int best_size = 0;

    int matching_lower_bound(std::uint64_t active) const {
        int lb = 0;
        std::uint64_t avail = active;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!((avail >> v) & 1)) continue;
            std::uint64_t nb = adj[v] & avail;
            if (nb) {
                int w = std::countr_zero(nb);
                avail &= ~((std::uint64_t{1} << v) | (std::uint64_t{1} << w));
                ++lb;
            }
        }
        return lb;
    }

    void solve(std::uint64_t active, std::uint64_t cover, int size) {
        // Reductions: drop isolated vertices, take the neighbor of a leaf.
        for (;;) {
            bool changed = false;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (!((active >> v) & 1)) continue;
                std::uint64_t nb = adj[v] & active;
                if (nb == 0) {
                    active &= ~(std::uint64_t{1} << v);
                    changed = true;
                } else if (std::popcount(nb) == 1) {
                    int w = std::countr_zero(nb);
                    cover |= std::uint64_t{1} << w;
                    ++size;
                    active &= ~((std::uint64_t{1} << v) | (std::uint64_t{1} << w));
                    changed = true;
                }
            }
            if (!changed) break;
        }
        if (size >= best_size) return;
        if (active == 0) {
            best_size = size;
            best_cover = cover;
            return;
        }
        if (size + matching_lower_bound(active) >= best_size) return;

        int pick = -1, pick_deg = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!((active >> v) & 1)) continue;
            int d = std::popcount(adj[v] & active);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        // Branch: pick in the cover, or all its neighbors are.
        solve(active & ~(std::uint64_t{1} << pick), cover | (std::uint64_t{1} << pick), size + 1);
        std::uint64_t nb = adj[pick] & active;
        solve(active & ~(nb | (std::uint64_t{1} << pick)), cover | nb, size + std::popcount(nb));
    }
};

}  // namespace

VertexCover minimum_vertex_cover(const Graph& g, const VertexCoverOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.max_exact_vertices || n > 64) {
        if (!opts.allow_approximate)
            throw SizeBoundError("exact vertex cover supports at most " +
                                 std::to_string(std::min(opts.max_exact_vertices, 64)) +
                                 " vertices, got " + std::to_string(n) +
                                 " (approximation requires an explicit opt-in)");
        // Maximal matching, both endpoints.
        std::vector<bool> hit(n, false);
        std::vector<int> cover;
        for (const Edge& e : g.edges())
            if (!hit[e.u] && !hit[e.v]) {
                hit[e.u] = hit[e.v] = true;
                cover.push_back(e.u);
                cover.push_back(e.v);
            }
        std::sort(cover.begin(), cover.end());
        return {std::move(cover), false};
    }

    CoverSearch search{g, {}, 0, n + 1};
    search.adj.assign(n, 0);
    for (const Edge& e : g.edges()) {
        search.adj[e.u] |= std::uint64_t{1} << e.v;
        search.adj[e.v] |= std::uint64_t{1} << e.u;
    }
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    search.solve(all, 0, 0);
    std::vector<int> cover;
    for (int v = 0; v < n; ++v)
        if ((search.best_cover >> v) & 1) cover.push_back(v);
    return {std::move(cover), true};
}

EdgeColoring star_coloring_from_vertex_cover(const Graph& g, const std::vector<int>& cover) {
    std::vector<bool> in_cover(g.vertex_count(), false);
    for (int v : cover) {
        if (v < 0 || v >= g.vertex_count())
            throw ValidationError("cover vertex " + std::to_string(v) + " out of range");
        in_cover[v] = true;
    }
    for (const Edge& e : g.edges())
        if (!in_cover[e.u] && !in_cover[e.v])
            throw ValidationError("edge " + to_string(e) + " is not covered");

    std::vector<int> ranked;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in_cover[v]) ranked.push_back(v);
    std::sort(ranked.begin(), ranked.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> rank(g.vertex_count(), g.vertex_count() + 1);
    for (std::size_t i = 0; i < ranked.size(); ++i) rank[ranked[i]] = static_cast<int>(i) + 1;

    std::vector<int> colors;
    colors.reserve(g.edge_count());
    for (const Edge& e : g.edges()) colors.push_back(std::min(rank[e.u], rank[e.v]));
    return EdgeColoring::normalized(g, std::move(colors));
}

std::pair<int, EdgeColoring> strong_upper_bound(const Graph& g, const VertexCoverOptions& opts) {
    auto cover = minimum_vertex_cover(g, opts);
    auto coloring = star_coloring_from_vertex_cover(g, cover.vertices);
    return {static_cast<int>(cover.vertices.size()), std::move(coloring)};
}

}  // namespace unigraph
