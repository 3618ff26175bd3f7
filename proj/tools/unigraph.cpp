// Command-line front end: recognition, coloring checks, decomposition,
// tree unigraph numbers, star colorings from vertex covers, DOT export.
//
// Exit codes: 0 success, 2 invalid input, 3 size-bound refusal.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unigraph/coloring.hpp"
#include "unigraph/errors.hpp"
#include "unigraph/io.hpp"
#include "unigraph/recognition.hpp"
#include "unigraph/search.hpp"
#include "unigraph/tree.hpp"

namespace {

using namespace unigraph;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitSizeBound = 3;

struct Report {
    bool porcelain = false;
    std::ostringstream body;

    void kv(const std::string& key, const std::string& value) {
        body << key << (porcelain ? " " : ": ") << value << '\n';
    }
    void kv(const std::string& key, long long value) { kv(key, std::to_string(value)); }
    void kv(const std::string& key, int value) { kv(key, std::to_string(value)); }
    void kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }

    void graph_block(const std::string& prefix, const Graph& g) {
        kv(prefix + ".n", g.vertex_count());
        kv(prefix + ".m", g.edge_count());
        for (const Edge& e : g.edges())
            kv(prefix + ".edge", std::to_string(e.u) + " " + std::to_string(e.v));
    }

    void coloring_block(const std::string& prefix, const Graph& g, const EdgeColoring& c) {
        kv(prefix + ".k", c.color_count());
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const Edge& e = g.edges()[i];
            kv(prefix + ".edge", std::to_string(e.u) + " " + std::to_string(e.v) + " " +
                                     std::to_string(c.color_at(i)));
        }
    }

    void input_block(const std::string& path, const Graph& g) {
        kv("input.path", path);
        kv("input.n", g.vertex_count());
        kv("input.m", g.edge_count());
        std::ostringstream ds;
        auto set = degree_set(g);
        for (std::size_t i = 0; i < set.values.size(); ++i)
            ds << (i ? " " : "") << set.values[i];
        kv("input.degree-set", ds.str());
    }

    void flush(std::ostream& out) {
        if (porcelain) out << "unigraph-report 1\n";
        out << body.str();
    }
};

int env_workers() {
    const char* raw = std::getenv("UNIGRAPH_WORKERS");
    if (!raw) return 1;
    int value = std::atoi(raw);
    return value >= 1 ? value : 1;
}

std::string bounds_line(const std::vector<BoundEntry>& entries) {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        out << (i ? " " : "") << entries[i].value << ":" << to_string(entries[i].source);
    return out.str();
}

void write_coloring_file(const std::string& path, const Graph& g, const EdgeColoring& c) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open output file: " + path);
    write_coloring(out, g, c);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void cmd_recognize(const std::string& path, Report& report) {
    Timer timer;
    Graph g = read_edge_list_file(path);
    report.kv("command", std::string("recognize"));
    report.input_block(path, g);
    auto verdict = is_unigraph(g);
    report.kv("result.unigraph", verdict.is_unigraph);
    report.kv("result.decided-by", to_string(verdict.decided_by));
    auto filter = fast_filter(g);
    report.kv("result.fast-filter", filter ? to_string(*filter) : std::string("unknown"));
    if (verdict.witness) report.graph_block("witness", *verdict.witness);
    report.kv("time-ms", std::to_string(timer.ms()));
}

void cmd_check_coloring(const std::string& graph_path, const std::string& coloring_path,
                        bool strong, Report& report) {
    Timer timer;
    Graph g = read_edge_list_file(graph_path);
    EdgeColoring c = read_coloring_file(coloring_path, g);
    report.kv("command", std::string(strong ? "check-coloring --strong" : "check-coloring"));
    report.input_block(graph_path, g);
    report.kv("input.coloring", coloring_path);
    report.kv("input.k", c.color_count());

    ColoringVerdict verdict =
        strong ? is_strongly_unigraphic_coloring(g, c) : is_unigraphic_coloring(g, c);
    report.kv("result.accepted", verdict.accepted);
    if (!verdict.accepted) {
        if (auto* bad = std::get_if<BadColorClass>(&*verdict.failure)) {
            report.kv("result.failure", std::string("bad-color-class"));
            report.kv("result.failure.color", bad->color);
            report.kv("result.failure.reason",
                      std::string(bad->reason == BadClassReason::Disconnected ? "disconnected"
                                                                              : "not-unigraph"));
        } else if (auto* non = std::get_if<NonUniqueRealization>(&*verdict.failure)) {
            report.kv("result.failure", std::string("non-unique-realization"));
            report.graph_block("witness", non->witness);
            report.coloring_block("witness.coloring", non->witness, non->witness_coloring);
        }
    }
    report.kv("time-ms", std::to_string(timer.ms()));
}

void decompose_component(const Graph& g, const std::string& prefix, bool strong, Report& report,
                         SearchContext& ctx, const SearchLimits& limits) {
    auto [w, w_witness] = unigraph_number(g, limits, &ctx);
    report.kv(prefix + "w", w);
    report.coloring_block(prefix + "w.coloring", g, w_witness);
    if (strong) {
        auto [s, s_witness] = strong_unigraph_number(g, limits, &ctx);
        report.kv(prefix + "s", s);
        report.coloring_block(prefix + "s.coloring", g, s_witness);
    }
}

void cmd_decompose(const std::string& path, bool strong, bool bounds_only, Report& report) {
    Timer timer;
    Graph g = read_edge_list_file(path);
    report.kv("command", std::string("decompose"));
    report.input_block(path, g);

    SearchContext ctx;
    SearchLimits limits;
    limits.workers = env_workers();

    if (bounds_only) {
        auto b = bounds(g, &ctx);
        if (b.w) report.kv("result.w", *b.w);
        if (b.s) report.kv("result.s", *b.s);
        report.kv("bounds.w.lower", bounds_line(b.w_lower));
        report.kv("bounds.w.upper", bounds_line(b.w_upper));
        report.kv("bounds.s.lower", bounds_line(b.s_lower));
        report.kv("bounds.s.upper", bounds_line(b.s_upper));
        if (b.w_witness) report.coloring_block("result.w.coloring", g, *b.w_witness);
        report.kv("time-ms", std::to_string(timer.ms()));
        return;
    }

    auto comps = connected_components(g);
    if (comps.size() <= 1) {
        decompose_component(g, "result.", strong, report, ctx, limits);
    } else {
        // Values are reported per connected component.
        report.kv("result.components", static_cast<long long>(comps.size()));
        for (std::size_t i = 0; i < comps.size(); ++i) {
            auto sub = vertex_induced_subgraph(g, comps[i]);
            std::string prefix = "component." + std::to_string(i) + ".";
            std::ostringstream verts;
            for (std::size_t j = 0; j < sub.vertex_map.size(); ++j)
                verts << (j ? " " : "") << sub.vertex_map[j];
            report.kv(prefix + "vertices", verts.str());
            decompose_component(sub.graph, prefix, strong, report, ctx, limits);
        }
    }
    report.kv("time-ms", std::to_string(timer.ms()));
}

void cmd_tree(const std::string& path, const std::string& out_path, Report& report) {
    Timer timer;
    Graph g = read_edge_list_file(path);
    report.kv("command", std::string("tree"));
    report.input_block(path, g);
    auto [k, coloring] = tree_unigraph_number(g);
    report.kv("result.k", k);
    report.coloring_block("result.coloring", g, coloring);
    if (!out_path.empty()) {
        write_coloring_file(out_path, g, coloring);
        report.kv("output.coloring", out_path);
    }
    report.kv("time-ms", std::to_string(timer.ms()));
}

void cmd_star_coloring(const std::string& path, const std::string& cover_arg,
                       const std::string& out_path, Report& report) {
    Timer timer;
    Graph g = read_edge_list_file(path);
    report.kv("command", std::string("star-coloring"));
    report.input_block(path, g);

    std::vector<int> cover;
    bool exact = true;
    if (!cover_arg.empty()) {
        std::istringstream in(cover_arg);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) continue;
            try {
                cover.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ValidationError("invalid cover vertex: '" + tok + "'");
            }
        }
    } else {
        auto mvc = minimum_vertex_cover(g);
        cover = mvc.vertices;
        exact = mvc.exact;
    }
    auto coloring = star_coloring_from_vertex_cover(g, cover);
    std::ostringstream cov;
    for (std::size_t i = 0; i < cover.size(); ++i) cov << (i ? " " : "") << cover[i];
    report.kv("result.cover", cov.str());
    report.kv("result.cover.minimum", exact && cover_arg.empty());
    report.kv("result.k", coloring.color_count());
    report.coloring_block("result.coloring", g, coloring);
    if (!out_path.empty()) {
        write_coloring_file(out_path, g, coloring);
        report.kv("output.coloring", out_path);
    }
    report.kv("time-ms", std::to_string(timer.ms()));
}

void cmd_export_dot(const std::string& graph_path, const std::string& coloring_path,
                    const std::string& out_path, Report& report) {
    Timer timer;
    Graph g = read_edge_list_file(graph_path);
    EdgeColoring c = read_coloring_file(coloring_path, g);
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot open output file: " + out_path);
    write_dot(out, g, &c);
    report.kv("command", std::string("export-dot"));
    report.input_block(graph_path, g);
    report.kv("input.coloring", coloring_path);
    report.kv("output.path", out_path);
    report.kv("time-ms", std::to_string(timer.ms()));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unigraph decomposition toolkit"};
    app.require_subcommand(1);
    bool porcelain = false;
    app.add_flag("--porcelain", porcelain, "machine-readable key-value output");

    std::string graph_path, coloring_path, out_path, cover_arg;
    bool strong = false, bounds_only = false;

    auto* recognize = app.add_subcommand("recognize", "decide whether the graph is a unigraph");
    recognize->add_option("graph", graph_path, "edge-list file")->required();

    auto* check = app.add_subcommand("check-coloring", "validate a (strongly) unigraphic coloring");
    check->add_option("graph", graph_path, "edge-list file")->required();
    check->add_option("coloring", coloring_path, "coloring file")->required();
    check->add_flag("--strong", strong, "also require a unique colored realization");

    auto* decompose = app.add_subcommand("decompose", "exact unigraph numbers by search");
    decompose->add_option("graph", graph_path, "edge-list file")->required();
    decompose->add_flag("--strong", strong, "also compute the strong unigraph number");
    decompose->add_flag("--bounds-only", bounds_only, "report bounds without searching");

    auto* tree = app.add_subcommand("tree", "unigraph number of a tree in linear time");
    tree->add_option("graph", graph_path, "edge-list file")->required();
    tree->add_option("--out", out_path, "write the witness coloring to a file");

    auto* star = app.add_subcommand("star-coloring", "star coloring from a vertex cover");
    star->add_option("graph", graph_path, "edge-list file")->required();
    star->add_option("--cover", cover_arg, "comma-separated cover vertices");
    star->add_option("--out", out_path, "write the coloring to a file");

    auto* dot = app.add_subcommand("export-dot", "write a colored DOT file");
    dot->add_option("graph", graph_path, "edge-list file")->required();
    dot->add_option("coloring", coloring_path, "coloring file")->required();
    dot->add_option("out", out_path, "output DOT file")->required();

    CLI11_PARSE(app, argc, argv);

    Report report;
    report.porcelain = porcelain;
    try {
        if (recognize->parsed())
            cmd_recognize(graph_path, report);
        else if (check->parsed())
            cmd_check_coloring(graph_path, coloring_path, strong, report);
        else if (decompose->parsed())
            cmd_decompose(graph_path, strong, bounds_only, report);
        else if (tree->parsed())
            cmd_tree(graph_path, out_path, report);
        else if (star->parsed())
            cmd_star_coloring(graph_path, cover_arg, out_path, report);
        else if (dot->parsed())
            cmd_export_dot(graph_path, coloring_path, out_path, report);
    } catch (const unigraph::SizeBoundError& e) {
        report.kv("status", std::string("size-bound"));
        report.kv("error.message", std::string(e.what()));
        report.flush(std::cout);
        return kExitSizeBound;
    } catch (const unigraph::ValidationError& e) {
        report.kv("status", std::string("error"));
        report.kv("error.message", std::string(e.what()));
        report.flush(std::cout);
        return kExitInvalid;
    }
    report.kv("status", std::string("ok"));
    report.flush(std::cout);
    return kExitOk;
}
