#include "unigraph/tree.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>

#if defined(__linux__)
#include <sys/mman.h>
#endif

#include "unigraph/errors.hpp"
#include "unigraph/recognition.hpp"

namespace unigraph {

bool is_edge_dominating(const Graph& g, const std::vector<Edge>& edges) {
    std::vector<bool> touched(g.vertex_count(), false);
    std::vector<bool> chosen_idx(g.edge_count(), false);
    for (Edge e : edges) {
        int idx = g.edge_index(e.u, e.v);
        if (idx < 0) throw ValidationError("edge " + to_string(e) + " not in graph");
        chosen_idx[idx] = true;
        touched[e.u] = touched[e.v] = true;
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        if (!chosen_idx[i] && !touched[e.u] && !touched[e.v]) return false;
    }
    return true;
}

namespace {

constexpr std::int32_t kInf = std::int32_t{1} << 29;  // costs are at most m+1

// Thread-local scratch buffers reused across calls, so repeated invocations
// work on warm (and, where the kernel allows, huge) pages instead of
// refaulting fresh allocations. Distinct Id values keep buffers disjoint.
template <typename T, int Id>
std::vector<T>& scratch(std::size_t size) {
    static thread_local std::vector<T> buffer;
    if (buffer.capacity() < size) {
        buffer.reserve(size);
#if defined(__linux__) && defined(MADV_HUGEPAGE)
        madvise(buffer.data(), buffer.capacity() * sizeof(T), MADV_HUGEPAGE);
#endif
    }
    return buffer;
}

// Rooted orientation of a tree: edge j = (parent, child), sorted so that each
// parent's child edges form one contiguous block and parents precede their
// own parent edge blocks (parent < child everywhere, root 0).
struct OrientedTree {
    int n = 0;
    int m = 0;
    const Edge* edges = nullptr;
    std::vector<Edge> storage;        // backs `edges` on the relabeled path
    std::vector<std::int32_t> host;   // oriented index -> host edge index; empty = identity

    int host_index(int j) const { return host.empty() ? j : host[j]; }
};

// When every vertex 1..n-1 is the larger endpoint of exactly one edge, the
// input labeling is already a valid rooting at 0 (parent chains strictly
// decrease, so all of 0..n-1 is reached), and the sorted edge array can be
// used in place.
std::optional<OrientedTree> natural_orientation(const Graph& tree) {
    const int n = tree.vertex_count();
    if (n == 0 || tree.edge_count() != n - 1) return std::nullopt;
    auto& seen = scratch<std::uint64_t, 1>((n + 63) / 64);
    seen.assign((n + 63) / 64, 0);
    for (const Edge& e : tree.edges()) {
        if ((seen[e.v >> 6] >> (e.v & 63)) & 1) return std::nullopt;
        seen[e.v >> 6] |= std::uint64_t{1} << (e.v & 63);
    }
    OrientedTree out;
    out.n = n;
    out.m = n - 1;
    out.edges = tree.edges().data();
    return out;
}

// General labelings: BFS-relabel to positions, then sort the oriented edges.
std::optional<OrientedTree> bfs_orientation(const Graph& tree) {
    const int n = tree.vertex_count();
    if (n == 0 || tree.edge_count() != n - 1) return std::nullopt;

    std::vector<std::int32_t> off(n + 1, 0);
    for (const Edge& e : tree.edges()) {
        ++off[e.u + 1];
        ++off[e.v + 1];
    }
    for (int v = 0; v < n; ++v) off[v + 1] += off[v];
    struct Slot {
        std::int32_t nbr, edge;
    };
    std::vector<Slot> adj(2 * tree.edges().size());
    {
        std::vector<std::int32_t> cursor(off.begin(), off.end() - 1);
        for (std::size_t i = 0; i < tree.edges().size(); ++i) {
            const Edge& e = tree.edges()[i];
            adj[cursor[e.u]++] = {e.v, static_cast<std::int32_t>(i)};
            adj[cursor[e.v]++] = {e.u, static_cast<std::int32_t>(i)};
        }
    }

    struct Item {
        std::int32_t parent, child, host;
    };
    std::vector<Item> items;
    items.reserve(n - 1);
    std::vector<std::int32_t> queue;
    queue.reserve(n);
    std::vector<std::uint64_t> visited((n + 63) / 64, 0);
    queue.push_back(0);
    visited[0] = 1;
    for (int head = 0; head < static_cast<int>(queue.size()); ++head) {
        int u = queue[head];
        for (int it = off[u]; it < off[u + 1]; ++it) {
            int w = adj[it].nbr;
            if ((visited[w >> 6] >> (w & 63)) & 1) continue;
            visited[w >> 6] |= std::uint64_t{1} << (w & 63);
            items.push_back({head, static_cast<std::int32_t>(queue.size()), adj[it].edge});
            queue.push_back(w);
        }
    }
    if (static_cast<int>(queue.size()) != n) return std::nullopt;  // disconnected

    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return std::tie(a.parent, a.child) < std::tie(b.parent, b.child); });
    OrientedTree out;
    out.n = n;
    out.m = n - 1;
    out.storage.reserve(items.size());
    out.host.reserve(items.size());
    for (const Item& item : items) {
        out.storage.push_back({item.parent, item.child});
        out.host.push_back(item.host);
    }
    out.edges = out.storage.data();
    return out;
}

std::optional<OrientedTree> orient_tree(const Graph& tree) {
    if (tree.vertex_count() == 1 && tree.edge_count() == 0) {
        OrientedTree out;
        out.n = 1;
        return out;
    }
    if (auto fast = natural_orientation(tree)) return fast;
    return bfs_orientation(tree);
}

// Minimum edge dominating set over an oriented tree. States per vertex v
// (costs count chosen edges in its subtree):
//   s0: a chosen edge touches v; everything below dominated.
//   s1: no chosen edge at v; everything below dominated.
//   s2: no chosen edge at v; edges to unmatched children may stay undominated
//       and the parent must pick the edge to v.
//
// The backward pass walks the edge array once in reverse; a parent's child
// edges are contiguous, so the per-vertex aggregation lives in registers and
// the only scattered reads (child states) are software-prefetched.
struct EdgeDp {
    // Padded to one cache line fraction so a scattered read touches one line.
    struct alignas(16) States {
        std::int32_t s0, s1, s2;
    };
    enum Tag : std::uint8_t { S0 = 0, S1 = 1, S2 = 2 };
    // Per-vertex byte: decision bits from the backward pass in the low
    // nibble, the top-down tag in bits 4-5.
    static constexpr std::uint8_t kPrefersEdge = 1;  // chosen < free
    static constexpr std::uint8_t kFreeS0 = 2;       // tag when left free
    static constexpr int kTagShift = 4;

    const OrientedTree& ot;
    std::vector<States>& state;
    std::vector<std::uint8_t>& vbits;
    std::vector<std::int32_t>& force_edge;
    std::vector<std::uint64_t>& has_chosen;

    static std::uint8_t decision_bits(const States& s) {
        std::int32_t chosen = 1 + std::min({s.s0, s.s1, s.s2});
        std::int32_t free = std::min(s.s0, s.s1);
        std::uint8_t bits = 0;
        if (chosen < free) bits |= kPrefersEdge;
        if (s.s0 <= s.s1) bits |= kFreeS0;
        std::uint8_t picked = (s.s0 <= s.s1 && s.s0 <= s.s2) ? S0 : (s.s1 <= s.s2 ? S1 : S2);
        bits |= picked << 2;
        return bits;
    }

    explicit EdgeDp(const OrientedTree& tree)
        : ot(tree),
          state(scratch<States, 0>(tree.n)),
          vbits(scratch<std::uint8_t, 0>(tree.n)),
          force_edge(scratch<std::int32_t, 0>(tree.n)),
          has_chosen(scratch<std::uint64_t, 0>((tree.n + 63) / 64)) {
        const int n = ot.n;
        const int m = ot.m;
        state.assign(n, States{kInf, 0, 0});  // leaves
        vbits.assign(n, decision_bits(States{kInf, 0, 0}));
        force_edge.resize(n);
        has_chosen.assign((n + 63) / 64, 0);

        int j = m - 1;
        while (j >= 0) {
            const int u = ot.edges[j].u;
            std::int32_t free_sum = 0, min_delta = kInf, s0_sum = 0, min01_sum = 0;
            std::int32_t force = -1;
            bool chosen_somewhere = false;
            for (; j >= 0 && ot.edges[j].u == u; --j) {
                if (j >= 64) __builtin_prefetch(&state[ot.edges[j - 64].v]);
                const States& sc = state[ot.edges[j].v];
                std::int32_t chosen = 1 + std::min({sc.s0, sc.s1, sc.s2});
                std::int32_t free = std::min(sc.s0, sc.s1);
                std::int32_t best = std::min(chosen, free);
                free_sum = std::min(kInf, free_sum + best);
                std::int32_t delta = chosen - best;
                if (delta <= min_delta) {  // ties go to the lowest edge index
                    min_delta = delta;
                    force = j;
                }
                if (chosen < free) chosen_somewhere = true;
                s0_sum = std::min(kInf, s0_sum + sc.s0);
                min01_sum = std::min(kInf, min01_sum + free);
            }
            States s{std::min(kInf, free_sum + min_delta), std::min(kInf, s0_sum),
                     std::min(kInf, min01_sum)};
            state[u] = s;
            vbits[u] = decision_bits(s);
            force_edge[u] = force;
            if (chosen_somewhere) has_chosen[u >> 6] |= std::uint64_t{1} << (u & 63);
        }
    }

    int minimum() const {
        if (ot.n == 0) return 0;
        return std::min(state[0].s0, state[0].s1);
    }

    // Oriented edge indices of one minimum dominating set, ascending. One
    // streaming forward pass over the same per-vertex byte array; parents get
    // their tag before their block is reached.
    std::vector<int> reconstruct() {
        const int m = ot.m;
        std::vector<int> result;
        auto set_tag = [&](int v, std::uint8_t t) {
            vbits[v] = static_cast<std::uint8_t>((vbits[v] & 0xF) | (t << kTagShift));
        };
        set_tag(0, state[0].s1 <= state[0].s0 ? S1 : S0);
        for (int j = 0; j < m;) {
            const int u = ot.edges[j].u;
            const std::uint8_t tag_u = vbits[u] >> kTagShift;
            const bool has = (has_chosen[u >> 6] >> (u & 63)) & 1;
            const std::int32_t force = force_edge[u];
            for (; j < m && ot.edges[j].u == u; ++j) {
                const int c = ot.edges[j].v;
                const std::uint8_t bits = vbits[c];
                bool pick = false;
                switch (tag_u) {
                    case S0:
                        pick = (bits & kPrefersEdge) || (!has && force == j);
                        if (!pick) set_tag(c, (bits & kFreeS0) ? S0 : S1);
                        break;
                    case S1:
                        set_tag(c, S0);
                        break;
                    default:
                        set_tag(c, (bits & kFreeS0) ? S0 : S1);
                        break;
                }
                if (pick) {
                    result.push_back(j);
                    set_tag(c, (bits >> 2) & 3);
                }
            }
        }
        return result;
    }
};

// Dominator i (by position in dom_idx) keeps color i+1; every other edge
// takes the least color whose dominator touches it. Requires dom_idx sorted
// ascending, which the DP reconstruction guarantees.
std::vector<int> colors_from_sorted_dominators(const Graph& tree, const std::vector<int>& dom_idx) {
    const int m = tree.edge_count();
    const int k = static_cast<int>(dom_idx.size());
    const Edge* edges = tree.edges().data();
    auto& min_dom = scratch<std::int32_t, 1>(tree.vertex_count());
    min_dom.assign(tree.vertex_count(), kInf);
    for (int i = 0; i < k; ++i) {
        const Edge& e = edges[dom_idx[i]];
        min_dom[e.u] = std::min(min_dom[e.u], i + 1);
        min_dom[e.v] = std::min(min_dom[e.v], i + 1);
    }
    std::vector<int> colors;
    colors.reserve(m);
    for (int i = 0, next_dom = 0; i < m; ++i) {
        if (i + 64 < m) __builtin_prefetch(&min_dom[edges[i + 64].v]);
        if (next_dom < k && dom_idx[next_dom] == i) {
            colors.push_back(++next_dom);
            continue;
        }
        const Edge& e = edges[i];
        colors.push_back(std::min(min_dom[e.u], min_dom[e.v]));
    }
    return colors;
}

OrientedTree require_tree(const Graph& g) {
    auto oriented = orient_tree(g);
    if (!oriented) throw ValidationError("input is not a tree");
    return std::move(*oriented);
}

std::vector<int> minimum_dominator_host_indices(const OrientedTree& oriented) {
    EdgeDp dp(oriented);
    auto picked = dp.reconstruct();  // ascending oriented indices
    if (oriented.host.empty()) return picked;
    for (int& j : picked) j = oriented.host[j];
    std::sort(picked.begin(), picked.end());
    return picked;
}

}  // namespace

EdgeDominatingSet min_edge_dominating_set_tree(const Graph& tree) {
    auto oriented = require_tree(tree);
    if (tree.edge_count() == 0) return {};
    std::vector<Edge> edges;
    for (int idx : minimum_dominator_host_indices(oriented)) edges.push_back(tree.edges()[idx]);
    return {std::move(edges)};
}

int edge_domination_number_tree(const Graph& tree) {
    auto oriented = require_tree(tree);
    if (tree.edge_count() == 0) return 0;
    return EdgeDp(oriented).minimum();
}

EdgeColoring coloring_from_edge_dominating_set(const Graph& tree,
                                               const EdgeDominatingSet& dominators) {
    require_tree(tree);
    if (!is_edge_dominating(tree, dominators.edges))
        throw ValidationError("edge set is not dominating");
    if (tree.edge_count() == 0) return EdgeColoring::exact(tree, {}, 0);

    // Dominators keep their input-order colors here, so the general two-pass
    // assignment applies rather than the sorted fast path.
    const int m = tree.edge_count();
    const int k = static_cast<int>(dominators.edges.size());
    std::vector<int> colors(m, 0);
    std::vector<int> min_dom(tree.vertex_count(), k + 1);
    for (int i = 0; i < k; ++i) {
        const Edge e = make_edge(dominators.edges[i].u, dominators.edges[i].v);
        int idx = tree.edge_index(e.u, e.v);
        if (colors[idx] != 0) throw ValidationError("duplicate dominator edge " + to_string(e));
        colors[idx] = i + 1;
        min_dom[e.u] = std::min(min_dom[e.u], i + 1);
        min_dom[e.v] = std::min(min_dom[e.v], i + 1);
    }
    for (int i = 0; i < m; ++i) {
        if (colors[i] != 0) continue;
        const Edge& e = tree.edges()[i];
        colors[i] = std::min(min_dom[e.u], min_dom[e.v]);
    }
    return EdgeColoring::exact(tree, std::move(colors), k);
}

EdgeDominatingSet edge_dominating_set_from_coloring(const Graph& tree, const EdgeColoring& c) {
    require_tree(tree);
    if (static_cast<int>(c.colors().size()) != tree.edge_count())
        throw ValidationError("coloring does not match the host graph");

    EdgeDominatingSet out;
    auto classes = c.classes(tree);
    for (int color = 1; color <= c.color_count(); ++color) {
        const auto& cls = classes[color - 1];
        auto sub = edge_induced_subgraph(tree, cls);
        TreeUnigraphClass shape;
        try {
            shape = tree_unigraph_class(sub.graph);
        } catch (const ValidationError&) {
            throw ValidationError("color " + std::to_string(color) +
                                  " class is not a connected unigraph");
        }
        switch (shape.tag) {
            case TreeUnigraphClass::Tag::K2:
            case TreeUnigraphClass::Tag::Star:
                // Class edges keep the host order, so front() is lex-least.
                out.edges.push_back(cls.front());
                break;
            case TreeUnigraphClass::Tag::DoubleStar: {
                Edge center_edge{};
                bool found = false;
                for (const Edge& e : cls) {
                    int iu = static_cast<int>(
                        std::lower_bound(sub.vertex_map.begin(), sub.vertex_map.end(), e.u) -
                        sub.vertex_map.begin());
                    int iv = static_cast<int>(
                        std::lower_bound(sub.vertex_map.begin(), sub.vertex_map.end(), e.v) -
                        sub.vertex_map.begin());
                    if (sub.graph.degree(iu) >= 2 && sub.graph.degree(iv) >= 2) {
                        center_edge = e;
                        found = true;
                        break;
                    }
                }
                if (!found) throw ValidationError("malformed double-star class");
                out.edges.push_back(center_edge);
                break;
            }
            case TreeUnigraphClass::Tag::NotTreeUnigraph:
                throw ValidationError("color " + std::to_string(color) +
                                      " class is not a connected unigraph");
        }
    }
    return out;
}

std::pair<int, EdgeColoring> tree_unigraph_number(const Graph& tree) {
    auto oriented = require_tree(tree);
    if (tree.edge_count() == 0) return {0, EdgeColoring::exact(tree, {}, 0)};
    auto dom_idx = minimum_dominator_host_indices(oriented);
    auto colors = colors_from_sorted_dominators(tree, dom_idx);
    int k = static_cast<int>(dom_idx.size());
    return {k, EdgeColoring::exact(tree, std::move(colors), k)};
}

EdgeDominatingSet brute_force_min_edge_dominating_set(const Graph& g, int max_edges) {
    const int m = g.edge_count();
    if (m > max_edges)
        throw SizeBoundError("brute-force edge domination supports at most " +
                             std::to_string(max_edges) + " edges, got " + std::to_string(m));
    if (m == 0) return {};
    for (int size = 1; size <= m; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            std::vector<Edge> pick;
            pick.reserve(size);
            for (int i : idx) pick.push_back(g.edges()[i]);
            if (is_edge_dominating(g, pick)) return {std::move(pick)};
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == m - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return {std::vector<Edge>(g.edges().begin(), g.edges().end())};
}

}  // namespace unigraph
