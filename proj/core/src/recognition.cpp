#include "unigraph/recognition.hpp"

#include <algorithm>

#include "unigraph/errors.hpp"
#include "unigraph/isomorphism.hpp"
#include "unigraph/realizations.hpp"

namespace unigraph {

std::string to_string(RecognitionFilter f) {
    switch (f) {
        case RecognitionFilter::InducedP5: return "induced-p5";
        case RecognitionFilter::Diameter: return "diameter";
        case RecognitionFilter::DisconnectedStructure: return "disconnected-structure";
        case RecognitionFilter::Oracle: return "oracle";
    }
    return "?";
}

FastFilterResult fast_filter(const Graph& g) {
    auto comps = connected_components(g);
    int big = 0;
    for (const auto& c : comps)
        if (c.size() >= 3) ++big;
    if (big >= 2) return RecognitionFilter::DisconnectedStructure;

    bool forest = g.edge_count() == g.vertex_count() - static_cast<int>(comps.size());
    if (comps.size() <= 1) {
        auto d = diameter(g);
        if (d && *d > 3) return RecognitionFilter::Diameter;
        if (forest) return std::nullopt;  // tree with diameter <= 3 has no long induced path
    } else if (forest) {
        // Forest: an induced path with four edges exists iff some component
        // has diameter >= 4.
        for (const auto& c : comps) {
            auto sub = vertex_induced_subgraph(g, c);
            auto d = diameter(sub.graph);
            if (d && *d > 3) return RecognitionFilter::InducedP5;
        }
        return std::nullopt;
    }
    if (find_induced_p5(g)) return RecognitionFilter::InducedP5;
    return std::nullopt;
}

namespace {

// First enumerated realization of g's degree set not isomorphic to g.
std::optional<Graph> find_nonisomorphic_realization(const Graph& g, int max_vertices) {
    const CanonicalCode target = canonical_code(g);
    std::optional<Graph> witness;
    visit_labeled_realizations(
        degree_set(g),
        [&](const Graph& h) {
            if (canonical_code(h) != target) {
                witness = h;
                return false;
            }
            return true;
        },
        max_vertices);
    return witness;
}

}  // namespace

RecognitionVerdict is_unigraph(const Graph& g, const RecognitionLimits& limits) {
    if (g.vertex_count() > limits.max_vertices)
        throw SizeBoundError("unigraph recognition supports at most " +
                             std::to_string(limits.max_vertices) + " vertices, got " +
                             std::to_string(g.vertex_count()));
    if (auto hit = fast_filter(g)) {
        std::optional<Graph> witness;
        if (*hit == RecognitionFilter::DisconnectedStructure)
            witness = disconnected_witness(g);
        else
            witness = find_nonisomorphic_realization(g, limits.max_vertices);
        return {false, std::move(witness), *hit};
    }
    auto witness = find_nonisomorphic_realization(g, limits.max_vertices);
    if (witness) return {false, std::move(witness), RecognitionFilter::Oracle};
    return {true, std::nullopt, RecognitionFilter::Oracle};
}

bool is_connected_unigraph(const Graph& g, const RecognitionLimits& limits) {
    return is_connected(g) && is_unigraph(g, limits).is_unigraph;
}

namespace {

// An edge lying on a cycle of the component containing `start`, if any:
// the first back edge met by an iterative DFS.
std::optional<Edge> find_cycle_edge(const Graph& g, const std::vector<int>& comp) {
    std::vector<int> parent(g.vertex_count(), -2);
    std::vector<std::size_t> next(g.vertex_count(), 0);
    std::vector<int> stack;
    int root = comp.front();
    parent[root] = -1;
    stack.push_back(root);
    while (!stack.empty()) {
        int v = stack.back();
        if (next[v] == g.neighbors(v).size()) {
            stack.pop_back();
            continue;
        }
        int w = g.neighbors(v)[next[v]++];
        if (parent[w] == -2) {
            parent[w] = v;
            stack.push_back(w);
        } else if (w != parent[v]) {
            return make_edge(v, w);
        }
    }
    return std::nullopt;
}

}  // namespace

Graph disconnected_witness(const Graph& g) {
    auto comps = connected_components(g);
    std::vector<const std::vector<int>*> big;
    for (const auto& c : comps)
        if (c.size() >= 3) big.push_back(&c);
    if (big.size() < 2)
        throw ValidationError("need two components with at least three vertices");

    // (u_i, v_i): a cycle edge when the component has one, otherwise a pendant
    // edge with u_i the degree-1 endpoint.
    auto choose = [&](const std::vector<int>& comp) -> std::pair<int, int> {
        if (auto cyc = find_cycle_edge(g, comp)) return {cyc->u, cyc->v};
        for (int v : comp)
            if (g.degree(v) == 1) return {v, g.neighbors(v)[0]};
        throw ValidationError("component has neither a cycle nor a leaf");
    };
    auto [u1, v1] = choose(*big[0]);
    auto [u2, v2] = choose(*big[1]);

    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    Edge e1 = make_edge(u1, v1), e2 = make_edge(u2, v2);
    for (const Edge& e : g.edges())
        if (e != e1 && e != e2) edges.push_back(e);
    edges.push_back(make_edge(u1, u2));
    edges.push_back(make_edge(v1, v2));
    return Graph(g.vertex_count(), std::move(edges));
}

TreeUnigraphClass tree_unigraph_class(const Graph& tree) {
    const int n = tree.vertex_count();
    if (n == 0 || tree.edge_count() != n - 1 || !is_connected(tree))
        throw ValidationError("input is not a tree");
    if (n == 1) return {TreeUnigraphClass::Tag::NotTreeUnigraph};
    if (n == 2) return {TreeUnigraphClass::Tag::K2};

    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (tree.degree(v) >= 2) centers.push_back(v);
    if (centers.size() == 1) {
        TreeUnigraphClass c{TreeUnigraphClass::Tag::Star};
        c.p = n - 1;
        return c;
    }
    if (centers.size() == 2 && tree.has_edge(centers[0], centers[1])) {
        int q = tree.degree(centers[0]) - 1;
        int r = tree.degree(centers[1]) - 1;
        TreeUnigraphClass c{TreeUnigraphClass::Tag::DoubleStar};
        c.q = std::max(q, r);
        c.r = std::min(q, r);
        return c;
    }
    return {TreeUnigraphClass::Tag::NotTreeUnigraph};
}

}  // namespace unigraph
