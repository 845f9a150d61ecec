#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dcol/clique.hpp"
#include "dcol/graph.hpp"

namespace dcol {

enum class GraphFormat {
  edgelist,    ///< "u v" per line, '#' starts a comment
  dimacs,      ///< "c ..." comments, "p edge n m", "e u v" (IDs 1..n)
  hypergraph,  ///< one hyperedge per line, whitespace-separated IDs
};

GraphFormat parse_format(const std::string& name);

/// Parse errors are InvalidInput carrying "<source>:<line>: <reason>".
Graph read_graph(std::istream& in, GraphFormat format, const std::string& source = "<input>");
Hypergraph read_hypergraph(std::istream& in, const std::string& source = "<input>");

/// Throws InvalidInput when the file cannot be opened.
Graph load_graph(const std::string& path, GraphFormat format = GraphFormat::edgelist);
Hypergraph load_hypergraph(const std::string& path);

/// One clique per line, vertex IDs of g.
CliqueCover read_cover(std::istream& in, const Graph& g, const std::string& source = "<input>");
CliqueCover load_cover(const std::string& path, const Graph& g);

void write_edgelist(std::ostream& out, const Graph& g);
void write_cover(std::ostream& out, const Graph& g, const CliqueCover& cover);

/// Vertex colorings: "id color"; edge colorings: "u v color", one item per line.
void write_coloring(std::ostream& out, const Graph& g, const Coloring& c);
/// Reads the format above; every vertex (edge) must be listed exactly once.
/// The palette is max color + 1.
Coloring read_coloring(std::istream& in, const Graph& g, ColoringKind kind, const std::string& source = "<input>");

}  // namespace dcol
