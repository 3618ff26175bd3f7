#include "unigraph/isomorphism.hpp"

#include <algorithm>
#include <limits>

#include "unigraph/errors.hpp"

namespace unigraph {

namespace {

// Minimum-encoding search over an individualization-refinement tree.
//
// Vertices are placed one at a time; placing a vertex appends its pair
// entries against the already placed ones. The partition is refined to
// equitability; singleton cells are placed greedily, the first non-singleton
// cell is branched on. Branches whose partial encoding exceeds the best
// complete encoding are cut, and candidates that are twins of an already
// tried candidate are skipped (swapping twins is an automorphism).
class CanonSearcher {
public:
    CanonSearcher(int n, std::vector<std::uint8_t> mat) : n_(n), mat_(std::move(mat)) {}

    // Returns the minimal pair-entry encoding.
    std::vector<std::uint8_t> run() {
        if (n_ == 0) return {};
        std::vector<int> color(n_, 0);
        refine(color);
        std::vector<int> order;
        order.reserve(n_);
        std::vector<std::uint8_t> enc;
        enc.reserve(n_ * (n_ - 1) / 2);
        descend(std::move(color), std::move(order), std::move(enc), false);
        return best_enc_;
    }

private:
    int n_;
    std::vector<std::uint8_t> mat_;  // n*n pair labels, 0 on the diagonal
    std::vector<std::uint8_t> best_enc_;
    bool have_best_ = false;

    std::uint8_t at(int u, int v) const { return mat_[u * n_ + v]; }

    // Equitable refinement. Active vertices carry colors >= 0; placed ones
    // are marked with unique negative colors and act as fixed anchors.
    void refine(std::vector<int>& color) const {
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> keyed;
            for (int v = 0; v < n_; ++v) {
                if (color[v] < 0) continue;
                std::vector<std::pair<int, int>> around;
                around.reserve(n_ - 1);
                for (int u = 0; u < n_; ++u)
                    if (u != v) around.emplace_back(color[u], at(v, u));
                std::sort(around.begin(), around.end());
                std::vector<int> key{color[v]};
                for (auto [c, l] : around) {
                    key.push_back(c);
                    key.push_back(l);
                }
                keyed.emplace_back(std::move(key), v);
            }
            std::sort(keyed.begin(), keyed.end());
            int next = 0;
            int changed = 0;
            for (std::size_t i = 0; i < keyed.size(); ++i) {
                if (i > 0 && keyed[i].first != keyed[i - 1].first) ++next;
                if (color[keyed[i].second] != next) {
                    color[keyed[i].second] = next;
                    ++changed;
                }
            }
            if (changed == 0) break;
        }
    }

    // Appends v's entries against placed vertices; false when pruned.
    bool place(int v, std::vector<int>& color, std::vector<int>& order,
               std::vector<std::uint8_t>& enc, bool& less) {
        for (int p : order) {
            std::uint8_t entry = at(v, p);
            if (!less && have_best_) {
                std::uint8_t b = best_enc_[enc.size()];
                if (entry > b) return false;
                if (entry < b) less = true;
            }
            enc.push_back(entry);
        }
        color[v] = -1 - static_cast<int>(order.size());
        order.push_back(v);
        return true;
    }

    // Representatives of the twin classes within a cell. u,v are twins when
    // their label rows agree everywhere outside {u,v}.
    std::vector<int> twin_representatives(const std::vector<int>& cell) const {
        std::vector<int> reps;
        for (int v : cell) {
            bool dup = false;
            for (int r : reps) {
                bool twin = true;
                for (int w = 0; w < n_ && twin; ++w)
                    if (w != v && w != r && at(v, w) != at(r, w)) twin = false;
                if (twin) {
                    dup = true;
                    break;
                }
            }
            if (!dup) reps.push_back(v);
        }
        return reps;
    }

    void descend(std::vector<int> color, std::vector<int> order, std::vector<std::uint8_t> enc,
                 bool less) {
        for (;;) {
            int first = std::numeric_limits<int>::max();
            for (int v = 0; v < n_; ++v)
                if (color[v] >= 0) first = std::min(first, color[v]);
            if (first == std::numeric_limits<int>::max()) {
                if (!have_best_ || less) {
                    best_enc_ = enc;
                    have_best_ = true;
                }
                return;
            }
            std::vector<int> cell;
            for (int v = 0; v < n_; ++v)
                if (color[v] == first) cell.push_back(v);
            if (cell.size() == 1) {
                if (!place(cell[0], color, order, enc, less)) return;
                continue;
            }
            for (int r : twin_representatives(cell)) {
                auto branch_color = color;
                // Individualize r just ahead of its cell, then re-refine.
                for (int v = 0; v < n_; ++v)
                    if (branch_color[v] >= 0) branch_color[v] = branch_color[v] * 2 + 1;
                branch_color[r] -= 1;
                refine(branch_color);
                descend(std::move(branch_color), order, enc, less);
            }
            return;
        }
    }
};

std::vector<std::uint8_t> label_matrix(const Graph& g, const std::vector<int>* edge_labels) {
    const int n = g.vertex_count();
    std::vector<std::uint8_t> mat(static_cast<std::size_t>(n) * n, 0);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        std::uint8_t label = edge_labels ? static_cast<std::uint8_t>((*edge_labels)[i]) : 1;
        mat[e.u * n + e.v] = label;
        mat[e.v * n + e.u] = label;
    }
    return mat;
}

CanonicalCode assemble(int n, int alphabet, std::vector<std::uint8_t> entries) {
    CanonicalCode code;
    code.bytes.reserve(entries.size() + 2);
    code.bytes.push_back(static_cast<std::uint8_t>(n));
    code.bytes.push_back(static_cast<std::uint8_t>(alphabet));
    code.bytes.insert(code.bytes.end(), entries.begin(), entries.end());
    return code;
}

void check_canonical_bound(const Graph& g) {
    if (g.vertex_count() > kCanonicalVertexLimit)
        throw SizeBoundError("canonical form supports at most " +
                             std::to_string(kCanonicalVertexLimit) + " vertices, got " +
                             std::to_string(g.vertex_count()));
}

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
    check_canonical_bound(g);
    CanonSearcher searcher(g.vertex_count(), label_matrix(g, nullptr));
    return assemble(g.vertex_count(), 2, searcher.run());
}

CanonicalCode canonical_code_colored(const Graph& g, const std::vector<int>& edge_labels,
                                     int label_count) {
    check_canonical_bound(g);
    if (static_cast<int>(edge_labels.size()) != g.edge_count())
        throw ValidationError("edge label vector does not match edge count");
    for (int l : edge_labels)
        if (l < 1 || l > label_count) throw ValidationError("edge label out of range");
    CanonSearcher searcher(g.vertex_count(), label_matrix(g, &edge_labels));
    return assemble(g.vertex_count(), label_count + 1, searcher.run());
}

namespace {

// Per-vertex invariant used to restrict candidate images: degree plus the
// sorted neighbor degree multiset.
std::vector<std::vector<int>> vertex_invariants(const Graph& g) {
    std::vector<std::vector<int>> inv(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> key{g.degree(v)};
        for (int w : g.neighbors(v)) key.push_back(g.degree(w));
        std::sort(key.begin() + 1, key.end());
        inv[v] = std::move(key);
    }
    return inv;
}

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    std::vector<std::vector<int>> inv_g, inv_h;
    std::vector<int> order;      // g vertices in mapping order
    std::vector<int> map_gh;     // g -> h, -1 unset
    std::vector<bool> used_h;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int cand = 0; cand < h.vertex_count(); ++cand) {
            if (used_h[cand] || inv_g[v] != inv_h[cand]) continue;
            bool ok = true;
            for (int w : g.neighbors(v)) {
                if (map_gh[w] >= 0 && !h.has_edge(cand, map_gh[w])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                // Non-neighbors already mapped must stay non-adjacent.
                for (std::size_t d = 0; d < depth && ok; ++d) {
                    int w = order[d];
                    if (!g.has_edge(v, w) && h.has_edge(cand, map_gh[w])) ok = false;
                }
            }
            if (!ok) continue;
            map_gh[v] = cand;
            used_h[cand] = true;
            if (extend(depth + 1)) return true;
            map_gh[v] = -1;
            used_h[cand] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    const int n = g.vertex_count();
    if (n == 0) return std::vector<int>{};

    IsoSearch s{g, h, vertex_invariants(g), vertex_invariants(h), {}, {}, {}};
    {
        auto sorted_g = s.inv_g;
        auto sorted_h = s.inv_h;
        std::sort(sorted_g.begin(), sorted_g.end());
        std::sort(sorted_h.begin(), sorted_h.end());
        if (sorted_g != sorted_h) return std::nullopt;
    }

    // Map most-connected-to-mapped vertices first so adjacency constraints
    // bind early; ties go to the lower id.
    s.order.reserve(n);
    std::vector<bool> placed(n, false);
    std::vector<int> mapped_neighbors(n, 0);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            if (pick < 0 || mapped_neighbors[v] > mapped_neighbors[pick] ||
                (mapped_neighbors[v] == mapped_neighbors[pick] && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        placed[pick] = true;
        s.order.push_back(pick);
        for (int w : g.neighbors(pick))
            if (!placed[w]) ++mapped_neighbors[w];
    }

    s.map_gh.assign(n, -1);
    s.used_h.assign(n, false);
    if (!s.extend(0)) return std::nullopt;
    return s.map_gh;
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace unigraph
