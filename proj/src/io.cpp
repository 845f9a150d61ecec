#include "dcol/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "dcol/error.hpp"

namespace dcol {

namespace {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  /// Next line with comments stripped, split into tokens. False at EOF.
  bool next(std::vector<std::string>& tokens, char comment = '#') {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto pos = line.find(comment); pos != std::string::npos) line.erase(pos);
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& reason) const {
    throw InvalidInput(source_ + ":" + std::to_string(line_no_) + ": " + reason);
  }

  std::uint64_t number(const std::string& tok) const {
    std::uint64_t value = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc() || ptr != end) fail("expected a non-negative integer, got '" + tok + "'");
    return value;
  }

  std::size_t line() const { return line_no_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return in;
}

struct EdgeCollector {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::map<std::pair<VertexId, VertexId>, std::size_t> seen;

  void add(LineReader& r, VertexId u, VertexId v) {
    if (u == v) r.fail("self-loop at vertex " + std::to_string(u));
    const auto key = std::minmax(u, v);
    const auto [it, fresh] = seen.emplace(key, r.line());
    if (!fresh) {
      r.fail("duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second) +
             " (first on line " + std::to_string(it->second) + ")");
    }
    edges.emplace_back(u, v);
  }
};

Graph read_edgelist(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  EdgeCollector c;
  std::vector<VertexId> ids;
  std::vector<std::string> tok;
  while (r.next(tok)) {
    if (tok.size() == 1) {
      ids.push_back(r.number(tok[0]));
      continue;
    }
    if (tok.size() != 2) r.fail("expected 'u v'");
    const auto u = r.number(tok[0]), v = r.number(tok[1]);
    c.add(r, u, v);
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return Graph::from_edges(std::move(ids), c.edges);
}

Graph read_dimacs(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  EdgeCollector c;
  std::vector<std::string> tok;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  while (r.next(tok, '%')) {
    if (tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (header) r.fail("second 'p' line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) r.fail("expected 'p edge n m'");
      header = {r.number(tok[2]), r.number(tok[3])};
      continue;
    }
    if (tok[0] != "e") r.fail("unknown line type '" + tok[0] + "'");
    if (!header) r.fail("edge before the 'p edge' header");
    if (tok.size() != 3) r.fail("expected 'e u v'");
    const auto u = r.number(tok[1]), v = r.number(tok[2]);
    if (u < 1 || u > header->first || v < 1 || v > header->first) {
      r.fail("endpoint outside 1.." + std::to_string(header->first));
    }
    c.add(r, u, v);
  }
  if (!header) r.fail("missing 'p edge n m' header");
  if (c.edges.size() != header->second) {
    r.fail("header declares " + std::to_string(header->second) + " edges, found " + std::to_string(c.edges.size()));
  }
  std::vector<VertexId> ids(header->first);
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i + 1;
  return Graph::from_edges(std::move(ids), c.edges);
}

}  // namespace

GraphFormat parse_format(const std::string& name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "hypergraph") return GraphFormat::hypergraph;
  throw InvalidInput("unknown format '" + name + "'");
}

Graph read_graph(std::istream& in, GraphFormat format, const std::string& source) {
  switch (format) {
    case GraphFormat::edgelist: return read_edgelist(in, source);
    case GraphFormat::dimacs: return read_dimacs(in, source);
    case GraphFormat::hypergraph: break;
  }
  throw InvalidInput("hypergraph input must be read with read_hypergraph");
}

Hypergraph read_hypergraph(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  Hypergraph h;
  std::vector<std::string> tok;
  while (r.next(tok)) {
    std::vector<VertexId> e;
    for (const auto& t : tok) e.push_back(r.number(t));
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) r.fail("repeated vertex in hyperedge");
    h.hyperedges.push_back(std::move(e));
  }
  return h;
}

Graph load_graph(const std::string& path, GraphFormat format) {
  auto in = open(path);
  return read_graph(in, format, path);
}

Hypergraph load_hypergraph(const std::string& path) {
  auto in = open(path);
  return read_hypergraph(in, path);
}

CliqueCover read_cover(std::istream& in, const Graph& g, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::vector<Vertex>> cliques;
  std::vector<std::string> tok;
  while (r.next(tok)) {
    std::vector<Vertex> q;
    for (const auto& t : tok) {
      const auto v = g.find(r.number(t));
      if (!v) r.fail("unknown vertex " + t);
      q.push_back(*v);
    }
    cliques.push_back(std::move(q));
  }
  CliqueCover cover(g.num_vertices(), std::move(cliques), CoverMode::provided);
  cover.validate(g);
  return cover;
}

CliqueCover load_cover(const std::string& path, const Graph& g) {
  auto in = open(path);
  return read_cover(in, g, path);
}

void write_edgelist(std::ostream& out, const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) out << g.id(v) << '\n';
  for (const auto& e : g.edges()) out << g.id(e.u) << ' ' << g.id(e.v) << '\n';
}

void write_cover(std::ostream& out, const Graph& g, const CliqueCover& cover) {
  for (const auto& q : cover.cliques()) {
    for (std::size_t i = 0; i < q.size(); ++i) out << (i ? " " : "") << g.id(q[i]);
    out << '\n';
  }
}

void write_coloring(std::ostream& out, const Graph& g, const Coloring& c) {
  if (c.kind == ColoringKind::vertex) {
    for (Vertex v = 0; v < c.size(); ++v) out << g.id(v) << ' ' << c[v] << '\n';
  } else {
    for (std::size_t e = 0; e < c.size(); ++e) {
      out << g.id(g.edge(e).u) << ' ' << g.id(g.edge(e).v) << ' ' << c[e] << '\n';
    }
  }
}

Coloring read_coloring(std::istream& in, const Graph& g, ColoringKind kind, const std::string& source) {
  LineReader r(in, source);
  const bool vertex = kind == ColoringKind::vertex;
  const std::size_t items = vertex ? g.num_vertices() : g.num_edges();
  std::vector<Color> colors(items, 0);
  std::vector<char> seen(items, 0);
  Color max_color = 0;
  std::vector<std::string> tok;
  while (r.next(tok)) {
    if (tok.size() != (vertex ? 2u : 3u)) r.fail(vertex ? "expected 'id color'" : "expected 'u v color'");
    std::size_t item = 0;
    auto vertex_of = [&](const std::string& t) {
      const auto v = g.find(r.number(t));
      if (!v) r.fail("unknown vertex " + t);
      return *v;
    };
    if (vertex) {
      item = vertex_of(tok[0]);
    } else {
      const auto e = g.edge_index(vertex_of(tok[0]), vertex_of(tok[1]));
      if (!e) r.fail("not an edge: " + tok[0] + " " + tok[1]);
      item = *e;
    }
    if (seen[item]) r.fail("item colored twice");
    seen[item] = 1;
    colors[item] = r.number(tok.back());
    max_color = std::max(max_color, colors[item]);
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InvalidInput(source + ": coloring is partial");
  }
  return {kind, std::move(colors), max_color + 1};
}

}  // namespace dcol
