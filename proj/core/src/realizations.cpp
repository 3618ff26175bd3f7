#include "unigraph/realizations.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>

#include "unigraph/errors.hpp"
#include "unigraph/isomorphism.hpp"

namespace unigraph {

namespace {

// Erdos-Gallai test; accepts the degrees in any order.
bool erdos_gallai(std::vector<int> d) {
    for (int x : d)
        if (x < 0) return false;
    std::sort(d.begin(), d.end(), std::greater<int>());
    const int n = static_cast<int>(d.size());
    if (n > 0 && d[0] >= n) return false;
    long long total = std::accumulate(d.begin(), d.end(), 0LL);
    if (total % 2 != 0) return false;
    long long prefix = 0;
    for (int k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < n; ++i) rhs += std::min(d[i], k);
        if (prefix > rhs) return false;
    }
    return true;
}

// Enumerates labeled graphs with prescribed vertex degrees by saturating the
// lowest unsaturated vertex with a full neighbor set per step. Each labeled
// graph is produced exactly once; residual Erdos-Gallai feasibility makes
// every surviving branch completable, so there are no dead subtrees.
struct LabeledEnumerator {
    int n;
    std::vector<int> rem;
    std::vector<Edge> acc;
    const std::function<bool(const Graph&)>& visit;
    bool stopped = false;

    void expand() {
        if (stopped) return;
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (rem[v] > 0) {
                u = v;
                break;
            }
        if (u < 0) {
            if (!visit(Graph(n, acc))) stopped = true;
            return;
        }
        std::vector<int> cand;
        for (int v = u + 1; v < n; ++v)
            if (rem[v] > 0) cand.push_back(v);
        if (static_cast<int>(cand.size()) < rem[u]) return;
        std::vector<int> chosen;
        pick(u, cand, 0, rem[u], chosen);
    }

    void pick(int u, const std::vector<int>& cand, int start, int need, std::vector<int>& chosen) {
        if (stopped) return;
        if (need == 0) {
            int saved = rem[u];
            rem[u] = 0;
            for (int v : chosen) {
                --rem[v];
                acc.push_back({u, v});
            }
            if (erdos_gallai(rem)) expand();
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                ++rem[chosen[i]];
                acc.pop_back();
            }
            rem[u] = saved;
            return;
        }
        for (int i = start; i + need <= static_cast<int>(cand.size()); ++i) {
            chosen.push_back(cand[i]);
            pick(u, cand, i + 1, need - 1, chosen);
            chosen.pop_back();
            if (stopped) return;
        }
    }
};

void check_vertex_bound(int n, int max_vertices) {
    int limit = std::min(max_vertices, kCanonicalVertexLimit);
    if (n > limit)
        throw SizeBoundError("realization enumeration supports at most " + std::to_string(limit) +
                             " vertices, got " + std::to_string(n));
}

}  // namespace

bool is_graphical(const DegreeSet& ds) { return erdos_gallai(ds.values); }

void visit_labeled_realizations(const DegreeSet& ds, const std::function<bool(const Graph&)>& visit,
                                int max_vertices) {
    const int n = static_cast<int>(ds.values.size());
    check_vertex_bound(n, max_vertices);
    if (!is_graphical(ds)) throw ValidationError("degree set is not graphical");
    LabeledEnumerator e{n, ds.values, {}, visit};
    e.expand();
}

std::vector<Graph> enumerate_realizations(const DegreeSet& ds, const RealizationOptions& opts) {
    const int n = static_cast<int>(ds.values.size());
    check_vertex_bound(n, opts.max_vertices);
    if (!is_graphical(ds)) throw ValidationError("degree set is not graphical");

    auto keep = [&](const Graph& g) { return !opts.connected_only || is_connected(g); };
    std::map<CanonicalCode, Graph> classes;

    if (opts.workers <= 1) {
        visit_labeled_realizations(
            ds,
            [&](const Graph& g) {
                if (keep(g)) classes.emplace(canonical_code(g), g);
                return true;
            },
            opts.max_vertices);
    } else {
        // Partition the top-level branching (the first vertex's neighbor set)
        // and merge worker results into the same deterministic order.
        struct Snapshot {
            std::vector<int> rem;
            std::vector<Edge> acc;
        };
        std::vector<Snapshot> snapshots;
        int u0 = -1;
        for (int v = 0; v < n; ++v)
            if (ds.values[v] > 0) {
                u0 = v;
                break;
            }
        if (u0 < 0) {
            classes.emplace(canonical_code(Graph(n, {})), Graph(n, {}));
        } else {
            std::function<bool(const Graph&)> noop = [](const Graph&) { return true; };
            LabeledEnumerator seed{n, ds.values, {}, noop};
            std::vector<int> cand;
            for (int v = u0 + 1; v < n; ++v)
                if (seed.rem[v] > 0) cand.push_back(v);
            std::vector<int> chosen;
            std::function<void(int, int)> gather = [&](int start, int need) {
                if (need == 0) {
                    auto rem = seed.rem;
                    rem[u0] = 0;
                    std::vector<Edge> acc;
                    for (int v : chosen) {
                        --rem[v];
                        acc.push_back({u0, v});
                    }
                    if (erdos_gallai(rem)) snapshots.push_back({std::move(rem), std::move(acc)});
                    return;
                }
                for (int i = start; i + need <= static_cast<int>(cand.size()); ++i) {
                    chosen.push_back(cand[i]);
                    gather(i + 1, need - 1);
                    chosen.pop_back();
                }
            };
            gather(0, ds.values[u0]);

            const int workers = std::max(1, opts.workers);
            std::vector<std::future<std::map<CanonicalCode, Graph>>> futures;
            std::size_t chunk = (snapshots.size() + workers - 1) / std::max<std::size_t>(1, workers);
            for (std::size_t begin = 0; begin < snapshots.size(); begin += chunk) {
                std::size_t end = std::min(begin + chunk, snapshots.size());
                futures.push_back(std::async(std::launch::async, [&, begin, end] {
                    std::map<CanonicalCode, Graph> local;
                    for (std::size_t i = begin; i < end; ++i) {
                        std::function<bool(const Graph&)> collect = [&](const Graph& g) {
                            if (keep(g)) local.emplace(canonical_code(g), g);
                            return true;
                        };
                        LabeledEnumerator e{n, snapshots[i].rem, snapshots[i].acc, collect};
                        e.expand();
                    }
                    return local;
                }));
            }
            for (auto& f : futures) classes.merge(f.get());
        }
    }

    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

ColoredDegreeSet colored_degree_set(const Graph& g, std::span<const int> edge_colors, int colors) {
    if (static_cast<int>(edge_colors.size()) != g.edge_count())
        throw ValidationError("coloring does not cover the edge set exactly");
    std::vector<std::vector<int>> tuples(g.vertex_count(), std::vector<int>(colors, 0));
    for (std::size_t i = 0; i < edge_colors.size(); ++i) {
        int c = edge_colors[i];
        if (c < 1 || c > colors) throw ValidationError("edge color out of range 1..k");
        const Edge& e = g.edges()[i];
        ++tuples[e.u][c - 1];
        ++tuples[e.v][c - 1];
    }
    std::sort(tuples.begin(), tuples.end(), std::greater<std::vector<int>>());
    return {colors, std::move(tuples)};
}

namespace {

struct ColoredEnumerator {
    int n, k;
    std::vector<std::vector<int>> rem;           // per vertex, per color
    std::vector<std::pair<Edge, int>> acc;       // edge, color
    const std::function<bool(const Graph&, const std::vector<int>&)>& visit;
    bool stopped = false;

    bool residual_feasible() const {
        std::vector<int> col(n);
        for (int c = 0; c < k; ++c) {
            for (int v = 0; v < n; ++v) col[v] = rem[v][c];
            if (!erdos_gallai(col)) return false;
        }
        return true;
    }

    void expand() {
        if (stopped) return;
        int u = -1;
        for (int v = 0; v < n && u < 0; ++v)
            for (int c = 0; c < k; ++c)
                if (rem[v][c] > 0) {
                    u = v;
                    break;
                }
        if (u < 0) {
            emit();
            return;
        }
        std::vector<bool> taken(n, false);
        assign_color(u, 0, taken);
    }

    void emit() {
        auto sorted = acc;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Edge> edges;
        std::vector<int> colors;
        edges.reserve(sorted.size());
        colors.reserve(sorted.size());
        for (auto& [e, c] : sorted) {
            edges.push_back(e);
            colors.push_back(c);
        }
        if (!visit(Graph(n, std::move(edges)), colors)) stopped = true;
    }

    // Chooses the color-c neighbor set of u; colors are filled in order and
    // `taken` keeps the union over colors simple.
    void assign_color(int u, int c, std::vector<bool>& taken) {
        if (stopped) return;
        if (c == k) {
            if (residual_feasible()) expand();
            return;
        }
        int need = rem[u][c];
        if (need == 0) {
            assign_color(u, c + 1, taken);
            return;
        }
        std::vector<int> cand;
        for (int v = u + 1; v < n; ++v)
            if (!taken[v] && rem[v][c] > 0) cand.push_back(v);
        if (static_cast<int>(cand.size()) < need) return;
        std::vector<int> chosen;
        pick(u, c, cand, 0, need, chosen, taken);
    }

    void pick(int u, int c, const std::vector<int>& cand, int start, int need,
              std::vector<int>& chosen, std::vector<bool>& taken) {
        if (stopped) return;
        if (need == 0) {
            int saved = rem[u][c];
            rem[u][c] = 0;
            for (int v : chosen) {
                --rem[v][c];
                taken[v] = true;
                acc.push_back({{u, v}, c + 1});
            }
            assign_color(u, c + 1, taken);
            for (int v : chosen) {
                ++rem[v][c];
                taken[v] = false;
                acc.pop_back();
            }
            rem[u][c] = saved;
            return;
        }
        for (int i = start; i + need <= static_cast<int>(cand.size()); ++i) {
            chosen.push_back(cand[i]);
            pick(u, c, cand, i + 1, need - 1, chosen, taken);
            chosen.pop_back();
            if (stopped) return;
        }
    }
};

bool cds_shape_ok(const ColoredDegreeSet& cds) {
    for (const auto& t : cds.tuples) {
        if (static_cast<int>(t.size()) != cds.colors)
            throw ValidationError("colored degree tuple length does not match color count");
        for (int x : t)
            if (x < 0) throw ValidationError("negative colored degree");
    }
    // Infeasibility (odd column sums, excessive degrees) is signaled by an
    // empty stream, not an error.
    for (int c = 0; c < cds.colors; ++c) {
        long long sum = 0;
        for (const auto& t : cds.tuples) sum += t[c];
        if (sum % 2 != 0) return false;
    }
    return true;
}

}  // namespace

void visit_labeled_colored_realizations(
    const ColoredDegreeSet& cds,
    const std::function<bool(const Graph&, const std::vector<int>&)>& visit, int max_vertices) {
    const int n = static_cast<int>(cds.tuples.size());
    check_vertex_bound(n, max_vertices);
    if (!cds_shape_ok(cds)) return;
    ColoredEnumerator e{n, cds.colors, cds.tuples, {}, visit};
    if (!e.residual_feasible()) return;
    e.expand();
}

std::vector<ColoredRealization> enumerate_colored_realizations(const ColoredDegreeSet& cds,
                                                               const RealizationOptions& opts) {
    const int n = static_cast<int>(cds.tuples.size());
    check_vertex_bound(n, opts.max_vertices);
    std::map<CanonicalCode, ColoredRealization> classes;
    visit_labeled_colored_realizations(
        cds,
        [&](const Graph& g, const std::vector<int>& colors) {
            if (opts.connected_only && !is_connected(g)) return true;
            classes.emplace(canonical_code_colored(g, colors, cds.colors),
                            ColoredRealization{g, colors, cds.colors});
            return true;
        },
        opts.max_vertices);
    std::vector<ColoredRealization> out;
    out.reserve(classes.size());
    for (auto& [code, r] : classes) out.push_back(std::move(r));
    return out;
}

}  // namespace unigraph
