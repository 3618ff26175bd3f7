#pragma once

#include <iosfwd>
#include <string>

#include "unigraph/coloring.hpp"
#include "unigraph/graph.hpp"

namespace unigraph {

// Edge-list text format: the first non-comment line is "n m", followed by m
// lines "u v". '#' starts a comment; tokens are whitespace-separated; labels
// are integers in [0, n). Parse errors carry 1-based line numbers.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Coloring text format: one line "u v c" per edge, colors positive integers;
// the lines must cover E(host) exactly. Parsed colorings are normalized.
EdgeColoring read_coloring(std::istream& in, const Graph& host);
void write_coloring(std::ostream& out, const Graph& host, const EdgeColoring& c);

// DOT export; edge colors cycle through a fixed 12-entry palette.
void write_dot(std::ostream& out, const Graph& g, const EdgeColoring* coloring = nullptr);

extern const char* const kDotPalette[12];

Graph read_edge_list_file(const std::string& path);
EdgeColoring read_coloring_file(const std::string& path, const Graph& host);

}  // namespace unigraph
