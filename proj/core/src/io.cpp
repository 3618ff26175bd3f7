#include "unigraph/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "unigraph/errors.hpp"

namespace unigraph {

namespace {

[[noreturn]] void parse_error(int line, const std::string& message) {
    throw ValidationError("line " + std::to_string(line) + ": " + message);
}

// Tokenized non-comment lines with their 1-based line numbers.
struct LineReader {
    std::istream& in;
    int line_number = 0;

    std::optional<std::pair<int, std::vector<std::string>>> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_number;
            if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
            std::istringstream tokens(line);
            std::vector<std::string> out;
            std::string tok;
            while (tokens >> tok) out.push_back(tok);
            if (!out.empty()) return std::make_pair(line_number, std::move(out));
        }
        return std::nullopt;
    }
};

int parse_int(int line, const std::string& tok, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        parse_error(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        parse_error(line, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    LineReader reader{in};
    auto header = reader.next();
    if (!header) throw ValidationError("empty graph file: missing 'n m' header");
    auto& [hline, htok] = *header;
    if (htok.size() != 2) parse_error(hline, "header must be 'n m'");
    int n = parse_int(hline, htok[0], "vertex count");
    int m = parse_int(hline, htok[1], "edge count");
    if (n < 0 || m < 0) parse_error(hline, "counts must be non-negative");

    std::vector<Edge> edges;
    edges.reserve(m);
    std::vector<int> edge_lines;
    for (int i = 0; i < m; ++i) {
        auto row = reader.next();
        if (!row)
            throw ValidationError("unexpected end of file: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
        auto& [lno, tok] = *row;
        if (tok.size() != 2) parse_error(lno, "edge line must be 'u v'");
        int u = parse_int(lno, tok[0], "vertex label");
        int v = parse_int(lno, tok[1], "vertex label");
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_error(lno, "vertex label out of range [0," + std::to_string(n) + ")");
        if (u == v) parse_error(lno, "self-loop");
        edges.push_back(make_edge(u, v));
        edge_lines.push_back(lno);
    }
    if (auto extra = reader.next()) parse_error(extra->first, "trailing content after edge list");

    // Attribute duplicate edges to their line before Graph's own validation.
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i] == edges[j])
                parse_error(edge_lines[j], "duplicate edge " + to_string(edges[j]));
    return Graph(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

EdgeColoring read_coloring(std::istream& in, const Graph& host) {
    LineReader reader{in};
    std::vector<int> colors(host.edge_count(), 0);
    int assigned = 0;
    while (auto row = reader.next()) {
        auto& [lno, tok] = *row;
        if (tok.size() != 3) parse_error(lno, "coloring line must be 'u v c'");
        int u = parse_int(lno, tok[0], "vertex label");
        int v = parse_int(lno, tok[1], "vertex label");
        int c = parse_int(lno, tok[2], "color");
        if (c < 1) parse_error(lno, "colors must be positive integers");
        int idx = host.edge_index(u, v);
        if (idx < 0) parse_error(lno, "edge " + to_string(make_edge(u, v)) + " not in graph");
        if (colors[idx] != 0)
            parse_error(lno, "edge " + to_string(make_edge(u, v)) + " colored twice");
        colors[idx] = c;
        ++assigned;
    }
    if (assigned != host.edge_count()) {
        for (int i = 0; i < host.edge_count(); ++i)
            if (colors[i] == 0)
                throw ValidationError("coloring does not cover edge " +
                                      to_string(host.edges()[i]));
    }
    return EdgeColoring::normalized(host, std::move(colors));
}

void write_coloring(std::ostream& out, const Graph& host, const EdgeColoring& c) {
    for (std::size_t i = 0; i < host.edges().size(); ++i) {
        const Edge& e = host.edges()[i];
        out << e.u << ' ' << e.v << ' ' << c.color_at(i) << '\n';
    }
}

const char* const kDotPalette[12] = {"black",   "red",  "green", "blue", "orange", "purple",
                                     "brown",   "cyan", "magenta", "gold", "navy",  "teal"};

void write_dot(std::ostream& out, const Graph& g, const EdgeColoring* coloring) {
    out << "graph unigraph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        out << "  " << e.u << " -- " << e.v;
        if (coloring) {
            int c = coloring->color_at(i);
            out << " [color=\"" << kDotPalette[(c - 1) % 12] << "\" label=\"" << c << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file: " + path);
    return read_edge_list(in);
}

EdgeColoring read_coloring_file(const std::string& path, const Graph& host) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open coloring file: " + path);
    return read_coloring(in, host);
}

}  // namespace unigraph
