#include "unigraph/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <thread>

#include "unigraph/errors.hpp"
#include "unigraph/realizations.hpp"
#include "unigraph/recognition.hpp"
#include "unigraph/tree.hpp"

namespace unigraph {

std::string to_string(BoundProvenance p) {
    switch (p) {
        case BoundProvenance::Trivial: return "trivial";
        case BoundProvenance::VertexCover: return "vertex-cover";
        case BoundProvenance::TreeLemma: return "tree-lemma";
        case BoundProvenance::Search: return "search";
    }
    return "?";
}

bool SearchContext::class_is_connected_unigraph(const Graph& class_subgraph, int max_vertices) {
    if (!is_connected(class_subgraph)) return false;
    auto code = canonical_code(class_subgraph);
    auto it = class_cache_.find(code);
    if (it != class_cache_.end()) return it->second;
    bool ok = is_unigraph(class_subgraph, {max_vertices}).is_unigraph;
    class_cache_.emplace(std::move(code), ok);
    return ok;
}

namespace {

std::vector<int> all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        queue.clear();
        queue.push_back(s);
        dist[s * n + s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.neighbors(v))
                if (dist[s * n + w] < 0) {
                    dist[s * n + w] = dist[s * n + v] + 1;
                    queue.push_back(w);
                }
        }
    }
    return dist;
}

// DFS over per-edge class assignments in canonical edge order. Classes are
// unordered, so class j+1 may only be opened once classes 1..j exist and only
// by the currently least unassigned edge (restricted growth); the first valid
// completion found is therefore the lexicographically least one.
struct PartitionSearch {
    const Graph& g;
    int n, m, k;
    bool prune;
    int max_vertices;
    SearchContext& ctx;
    const std::vector<int>& dist;

    std::vector<std::uint64_t> vmask;          // per class
    std::vector<std::vector<int>> class_edges; // per class, edge indices
    std::vector<int> assign;                   // per edge, 1..k or 0
    int used = 0;
    // Stop/report hook; return false to stop the whole search.
    std::function<bool(const std::vector<int>&)> on_complete;
    bool stopped = false;

    PartitionSearch(const Graph& graph, int colors, bool do_prune, int maxv, SearchContext& c,
                    const std::vector<int>& d)
        : g(graph),
          n(graph.vertex_count()),
          m(graph.edge_count()),
          k(colors),
          prune(do_prune),
          max_vertices(maxv),
          ctx(c),
          dist(d),
          vmask(colors, 0),
          class_edges(colors),
          assign(graph.edge_count(), 0) {}

    static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

    // Distances within the class cannot drop below distances in g, so a
    // class-vertex pair at g-distance > 3 can never reach diameter <= 3.
    bool distance_ok(int c, const Edge& e) const {
        std::uint64_t vm = vmask[c];
        for (int x : {e.u, e.v}) {
            if ((vm >> x) & 1) continue;
            std::uint64_t rest = vm;
            while (rest) {
                int w = std::countr_zero(rest);
                rest &= rest - 1;
                if (dist[x * n + w] > 3) return false;
            }
        }
        return true;
    }

    // Even with every still-unassigned edge added, all class-vertex pairs
    // must be within distance 3 of each other (covers connectivity too).
    bool potential_ok(int c, int i, const Edge& e) const {
        std::uint64_t adj[64];
        std::uint64_t verts = vmask[c] | bit(e.u) | bit(e.v);
        std::fill(adj, adj + n, 0);
        auto add = [&](const Edge& ed) {
            adj[ed.u] |= bit(ed.v);
            adj[ed.v] |= bit(ed.u);
        };
        for (int idx : class_edges[c]) add(g.edges()[idx]);
        add(e);
        for (int j = i + 1; j < m; ++j) add(g.edges()[j]);
        std::uint64_t rest = verts;
        while (rest) {
            int x = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t reach = bit(x);
            for (int step = 0; step < 3; ++step) {
                std::uint64_t frontier = reach;
                std::uint64_t grow = reach;
                while (frontier) {
                    int v = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    grow |= adj[v];
                }
                reach = grow;
            }
            if ((verts & ~reach) != 0) return false;
        }
        return true;
    }

    bool classes_valid() {
        for (int c = 0; c < k; ++c) {
            std::vector<Edge> edges;
            edges.reserve(class_edges[c].size());
            for (int idx : class_edges[c]) edges.push_back(g.edges()[idx]);
            auto sub = edge_induced_subgraph(g, edges);
            if (!ctx.class_is_connected_unigraph(sub.graph, max_vertices)) return false;
        }
        return true;
    }

    void dfs(int i) {
        if (stopped) return;
        if (i == m) {
            if (used == k && classes_valid())
                if (!on_complete(assign)) stopped = true;
            return;
        }
        if (k - used > m - i) return;
        const Edge& e = g.edges()[i];
        int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            if (prune && vmask[c] != 0) {
                if (!distance_ok(c, e)) continue;
                if (!potential_ok(c, i, e)) continue;
            }
            bool opened = (c == used);
            if (opened) ++used;
            std::uint64_t saved = vmask[c];
            vmask[c] |= bit(e.u) | bit(e.v);
            class_edges[c].push_back(i);
            assign[i] = c + 1;

            dfs(i + 1);

            assign[i] = 0;
            class_edges[c].pop_back();
            vmask[c] = saved;
            if (opened) --used;
            if (stopped) return;
        }
    }

    // Replays a prefix of assignments (1-based classes), then searches on.
    void run_from(const std::vector<int>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            int c = prefix[i] - 1;
            if (c == used) ++used;
            const Edge& e = g.edges()[i];
            vmask[c] |= bit(e.u) | bit(e.v);
            class_edges[c].push_back(static_cast<int>(i));
            assign[i] = prefix[i];
        }
        dfs(static_cast<int>(prefix.size()));
    }
};

// All explorable assignment prefixes of the given depth, in DFS order.
std::vector<std::vector<int>> level_prefixes(const Graph& g, int k, int depth, bool prune,
                                             int max_vertices, SearchContext& ctx,
                                             const std::vector<int>& dist) {
    std::vector<std::vector<int>> out;
    PartitionSearch search(g, k, prune, max_vertices, ctx, dist);
    std::function<void(int)> walk = [&](int i) {
        if (i == depth) {
            out.emplace_back(search.assign.begin(), search.assign.begin() + depth);
            return;
        }
        if (k - search.used > search.m - i) return;
        const Edge& e = g.edges()[i];
        int limit = std::min(search.used + 1, k);
        for (int c = 0; c < limit; ++c) {
            if (prune && search.vmask[c] != 0) {
                if (!search.distance_ok(c, e)) continue;
                if (!search.potential_ok(c, i, e)) continue;
            }
            bool opened = (c == search.used);
            if (opened) ++search.used;
            std::uint64_t saved = search.vmask[c];
            search.vmask[c] |= PartitionSearch::bit(e.u) | PartitionSearch::bit(e.v);
            search.class_edges[c].push_back(i);
            search.assign[i] = c + 1;
            walk(i + 1);
            search.assign[i] = 0;
            search.class_edges[c].pop_back();
            search.vmask[c] = saved;
            if (opened) --search.used;
        }
    };
    walk(0);
    return out;
}

// First (lexicographically least) assignment at this k that both completes
// the partition and passes `accept`, or nullopt.
std::optional<std::vector<int>> search_level(
    const Graph& g, int k, const SearchLimits& limits, SearchContext& ctx,
    const std::vector<int>& dist, const std::function<bool(const std::vector<int>&)>& accept) {
    const int m = g.edge_count();
    if (limits.workers <= 1 || k < 2 || m < 8) {
        std::optional<std::vector<int>> found;
        PartitionSearch search(g, k, limits.prune, limits.max_vertices, ctx, dist);
        search.on_complete = [&](const std::vector<int>& assign) {
            if (!accept(assign)) return true;
            found = assign;
            return false;
        };
        search.dfs(0);
        return found;
    }

    int depth = std::min(m, 6);
    auto prefixes = level_prefixes(g, k, depth, limits.prune, limits.max_vertices, ctx, dist);
    if (prefixes.empty()) return std::nullopt;

    std::vector<std::optional<std::vector<int>>> results(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> winner{prefixes.size()};
    std::vector<std::thread> pool;
    int workers = std::max(1, limits.workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            SearchContext local_ctx;
            for (;;) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= prefixes.size()) return;
                if (idx > winner.load()) continue;  // a lex-smaller block already won
                PartitionSearch search(g, k, limits.prune, limits.max_vertices, local_ctx, dist);
                search.on_complete = [&](const std::vector<int>& assign) {
                    if (!accept(assign)) return true;
                    results[idx] = assign;
                    return false;
                };
                search.run_from(prefixes[idx]);
                if (results[idx]) {
                    std::size_t cur = winner.load();
                    while (idx < cur && !winner.compare_exchange_weak(cur, idx)) {
                    }
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& r : results)
        if (r) return r;
    return std::nullopt;
}

void check_search_input(const Graph& g, int max_vertices, int max_edges, const char* what) {
    if (!is_connected(g)) throw ValidationError(std::string(what) + " requires a connected graph");
    if (g.vertex_count() > max_vertices || g.edge_count() > max_edges)
        throw SizeBoundError(std::string(what) + " supports at most " +
                             std::to_string(max_vertices) + " vertices and " +
                             std::to_string(max_edges) + " edges, got " +
                             std::to_string(g.vertex_count()) + "/" +
                             std::to_string(g.edge_count()));
}

// Color-permutation-invariant key of a colored degree set. Columns are
// permuted by a deterministic content-based order, then tuples re-sorted;
// equal keys imply column-permutation-equal multisets, which have the same
// unique-realization verdict.
std::vector<int> strong_cache_key(const ColoredDegreeSet& cds) {
    const int k = cds.colors;
    std::vector<std::pair<std::vector<int>, int>> cols(k);
    for (int c = 0; c < k; ++c) {
        std::vector<int> content;
        content.reserve(cds.tuples.size());
        for (const auto& t : cds.tuples) content.push_back(t[c]);
        auto sorted = content;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        sorted.insert(sorted.end(), content.begin(), content.end());
        cols[c] = {std::move(sorted), c};
    }
    std::sort(cols.begin(), cols.end());
    std::vector<std::vector<int>> tuples(cds.tuples.size(), std::vector<int>(k));
    for (int c = 0; c < k; ++c)
        for (std::size_t i = 0; i < cds.tuples.size(); ++i)
            tuples[i][c] = cds.tuples[i][cols[c].second];
    std::sort(tuples.begin(), tuples.end(), std::greater<std::vector<int>>());
    std::vector<int> key{k};
    for (const auto& t : tuples) key.insert(key.end(), t.begin(), t.end());
    return key;
}

// Whether every colored realization of cds has its underlying graph
// isomorphic to the host. Verdict depends only on cds (the host realizes it).
bool strong_verdict(const Graph& host, const ColoredDegreeSet& cds, SearchContext& ctx) {
    auto key = strong_cache_key(cds);
    auto it = ctx.strong_cache().find(key);
    if (it != ctx.strong_cache().end()) return it->second;
    const CanonicalCode host_code = canonical_code(host);
    bool unique = true;
    visit_labeled_colored_realizations(cds, [&](const Graph& h, const std::vector<int>&) {
        if (canonical_code(h) != host_code) {
            unique = false;
            return false;
        }
        return true;
    });
    ctx.strong_cache().emplace(std::move(key), unique);
    return unique;
}

}  // namespace

std::pair<int, EdgeColoring> unigraph_number(const Graph& g, const SearchLimits& limits,
                                             SearchContext* ctx) {
    check_search_input(g, limits.max_vertices, limits.max_edges_unigraph, "unigraph number");
    const int m = g.edge_count();
    if (m == 0) return {0, EdgeColoring::exact(g, {}, 0)};

    SearchContext local;
    SearchContext& context = ctx ? *ctx : local;
    auto dist = all_pairs_distances(g);
    auto accept_all = [](const std::vector<int>&) { return true; };
    for (int k = 1; k <= m; ++k) {
        if (auto assign = search_level(g, k, limits, context, dist, accept_all))
            return {k, EdgeColoring::exact(g, *assign, k)};
    }
    throw ValidationError("no unigraphic coloring found");  // unreachable: k = m always works
}

std::pair<int, EdgeColoring> strong_unigraph_number(const Graph& g, const SearchLimits& limits,
                                                    SearchContext* ctx) {
    check_search_input(g, limits.max_vertices_strong, limits.max_edges_strong,
                       "strong unigraph number");
    const int m = g.edge_count();
    if (m == 0) return {0, EdgeColoring::exact(g, {}, 0)};

    SearchContext local;
    SearchContext& context = ctx ? *ctx : local;
    auto dist = all_pairs_distances(g);

    auto w_limits = limits;
    w_limits.workers = 1;  // the strong layer runs sequentially
    int start = unigraph_number(g, w_limits, &context).first;

    for (int k = start; k <= m; ++k) {
        auto accept = [&](const std::vector<int>& assign) {
            auto coloring = EdgeColoring::exact(g, assign, k);
            auto cds = colored_degree_set(g, coloring);
            return strong_verdict(g, cds, context);
        };
        if (auto assign = search_level(g, k, w_limits, context, dist, accept))
            return {k, EdgeColoring::exact(g, *assign, k)};
    }
    throw ValidationError("no strongly unigraphic coloring found");  // unreachable
}

DecompositionReport bounds(const Graph& g, SearchContext*) {
    DecompositionReport report;
    const int m = g.edge_count();

    if (m == 0) {
        report.w = 0;
        report.s = 0;
        report.w_witness = EdgeColoring::exact(g, {}, 0);
        report.s_witness = report.w_witness;
        report.w_lower.push_back({0, BoundProvenance::Trivial});
        report.w_upper.push_back({0, BoundProvenance::Trivial});
        report.s_lower.push_back({0, BoundProvenance::Trivial});
        report.s_upper.push_back({0, BoundProvenance::Trivial});
        return report;
    }

    report.w_lower.push_back({1, BoundProvenance::Trivial});
    report.s_lower.push_back({1, BoundProvenance::Trivial});

    // Cheap not-unigraph certificate raises the lower bounds to 2.
    bool certified = false;
    if (g.vertex_count() <= 64 && fast_filter(g).has_value()) certified = true;
    if (!certified && g.vertex_count() <= 8)
        certified = !is_unigraph(g).is_unigraph;
    if (certified) {
        report.w_lower.push_back({2, BoundProvenance::Search});
        report.s_lower.push_back({2, BoundProvenance::Search});
    }

    // Vertex cover upper bound; a greedy cover still yields a valid bound
    // when the exact solver would refuse the size.
    VertexCoverOptions vc_opts;
    vc_opts.allow_approximate = g.vertex_count() > vc_opts.max_exact_vertices;
    auto [tau, star] = strong_upper_bound(g, vc_opts);
    report.w_upper.push_back({tau, BoundProvenance::VertexCover});
    report.s_upper.push_back({tau, BoundProvenance::VertexCover});
    report.s_witness = star;

    bool tree = is_connected(g) && m == g.vertex_count() - 1;
    if (tree) {
        auto [w, coloring] = tree_unigraph_number(g);
        report.w = w;
        report.w_witness = std::move(coloring);
        report.w_lower.push_back({w, BoundProvenance::TreeLemma});
        report.w_upper.push_back({w, BoundProvenance::TreeLemma});
        report.s_lower.push_back({w, BoundProvenance::TreeLemma});
    }
    return report;
}

}  // namespace unigraph
