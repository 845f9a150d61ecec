// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dcol/arb_edge.hpp"
#include "dcol/base_color.hpp"
#include "dcol/cd_color.hpp"
#include "dcol/cli.hpp"
#include "dcol/generate.hpp"
#include "dcol/line_graph.hpp"
#include "dcol/star_edge.hpp"
#include "dcol/verify.hpp"

using namespace dcol;

namespace {

struct Sample {
  std::string name;
  Generated gen;
};

std::vector<Sample> build_corpus() {
  std::vector<Sample> c;
  auto add = [&](std::string name, GenKind k, GenParams p) { c.push_back({std::move(name), generate(k, p)}); };
  for (std::size_t i = 0; i < 30; ++i) {
    const std::size_t delta = 4 + i % 29;
    add("random(n=90,delta=" + std::to_string(delta) + ")", GenKind::random,
        {.n = 90, .delta = delta, .seed = 100 + i});
  }
  for (std::size_t i = 0; i < 15; ++i) {
    const std::size_t delta = 2 + 3 * i;
    add("forest(n=150,delta=" + std::to_string(delta) + ")", GenKind::forest,
        {.n = 150, .delta = delta, .seed = 200 + i});
  }
  for (std::size_t i = 0; i < 10; ++i) {
    add("grid(" + std::to_string(3 + i) + "x" + std::to_string(3 + (i * 7) % 9) + ")", GenKind::grid,
        {.w = 3 + i, .h = 3 + (i * 7) % 9});
  }
  for (std::size_t n = 3; n <= 12; ++n) add("K" + std::to_string(n), GenKind::complete, {.n = n});
  for (std::size_t i = 0; i < 20; ++i) {
    const std::size_t n = 20 + 2 * i, delta = 3 + i % 10;
    add("line_of(n=" + std::to_string(n) + ",delta=" + std::to_string(delta) + ")", GenKind::line_of,
        {.n = n, .delta = delta, .seed = 300 + i});
  }
  for (std::size_t i = 0; i < 15; ++i) {
    const std::size_t n = 20 + 2 * i, m = 40 + 4 * i;
    add("hyper_line(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")", GenKind::hyper_line,
        {.n = n, .edges = m, .rank = 3, .seed = 400 + i});
  }
  return c;
}

CliqueCover cover_of(const Sample& s) {
  return s.gen.cover ? *s.gen.cover : enumerate_maximal_cliques(s.gen.graph);
}

/// Independent pairwise properness check.
bool naive_proper(const Graph& g, const Coloring& c) {
  if (c.kind == ColoringKind::vertex) {
    for (const auto& e : g.edges())
      if (c[e.u] == c[e.v]) return false;
    return true;
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    for (std::size_t f = e + 1; f < g.num_edges(); ++f) {
      const auto a = g.edge(e), b = g.edge(f);
      const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      if (share && c[e] == c[f]) return false;
    }
  return true;
}

struct Outcome {
  std::string algorithm;
  Coloring coloring;
};

/// Every algorithm of the library on one sample.
std::vector<Outcome> run_all(const Sample& s) {
  const auto& g = s.gen.graph;
  const auto cover = cover_of(s);
  const auto a = s.gen.arboricity_bound;
  std::vector<Outcome> out;
  out.push_back({"cd_coloring", cd_coloring(g, cover, choose_params(cover.max_clique(), 1), 1).coloring});
  out.push_back({"refined_coloring", refined_coloring(g, cover, 1).coloring});
  for (std::size_t x = 1; x <= 3; ++x) {
    out.push_back({"star_edge(x=" + std::to_string(x) + ")", recursive_star_edge_coloring(g, x).coloring});
  }
  out.push_back({"arb_edge", arb_edge_coloring(g, a).coloring});
  out.push_back({"delta_plus_little_o", delta_plus_little_o(g, a).coloring});
  for (std::size_t x = 1; x <= 3; ++x) {
    out.push_back({"powered(x=" + std::to_string(x) + ")", powered_edge_coloring(g, a, kDefaultQ, x).coloring});
  }
  return out;
}

int failures = 0;

void report(int id, const std::string& title, const std::function<std::string()>& check) {
  std::string problem;
  try {
    problem = check();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  if (problem.empty()) {
    std::printf("PASS [%d] %s\n", id, title.c_str());
  } else {
    ++failures;
    std::printf("FAIL [%d] %s: %s\n", id, title.c_str(), problem.c_str());
  }
  std::fflush(stdout);
}

std::string num(double v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

}  // namespace

int main() {
  const auto corpus = build_corpus();

  report(1, "properness suite on the 100-graph corpus", [&]() -> std::string {
    if (corpus.size() != 100) return "corpus has " + std::to_string(corpus.size()) + " graphs";
    const auto start = std::chrono::steady_clock::now();
    std::size_t runs = 0;
    for (const auto& s : corpus) {
      for (const auto& r : run_all(s)) {
        const auto v = r.coloring.kind == ColoringKind::vertex ? is_proper_vertex(s.gen.graph, r.coloring)
                                                               : is_proper_edge(s.gen.graph, r.coloring);
        if (!v.ok) return r.algorithm + " on " + s.name + ": " + v.violations.front().reason;
        ++runs;
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 120) return "took " + num(secs) + " s";
    std::printf("  %zu runs, %.1f s\n", runs, secs);
    return "";
  });

  report(2, "refined palette <= D^(x+1) S on line graphs and 3-uniform hypergraph line graphs", [&]() -> std::string {
    std::vector<Sample> graphs;
    for (const auto& s : corpus)
      if (s.gen.cover) graphs.push_back(s);
    graphs.push_back({"line_of(n=200,delta=40)", generate(GenKind::line_of, {.n = 200, .delta = 40, .seed = 23})});
    graphs.push_back({"hyper_line(n=60,m=700)", generate(GenKind::hyper_line, {.n = 60, .edges = 700, .seed = 5})});
    for (const auto& s : graphs) {
      const auto D = s.gen.cover->diversity(), S = s.gen.cover->max_clique();
      for (std::size_t x = 1; x <= 3; ++x) {
        const auto r = refined_coloring(s.gen.graph, *s.gen.cover, x);
        const auto bound = static_cast<Color>(std::pow(D, x + 1)) * S;
        if (!is_proper_vertex(s.gen.graph, r.coloring).ok) return s.name + " improper";
        if (r.coloring.palette > bound || r.coloring.distinct() > bound) {
          return s.name + " x=" + std::to_string(x) + ": " + std::to_string(r.coloring.palette) + " > " +
                 std::to_string(bound);
        }
      }
    }
    return "";
  });

  report(3, "star-edge: 4 Delta for x=1, 2^(x+1) Delta for x=2,3", [&]() -> std::string {
    for (std::size_t delta : {9, 16, 25, 36}) {
      const auto g = random_bounded_degree(400, delta, delta);
      if (g.max_degree() != delta) return "generator missed Delta=" + std::to_string(delta);
      const auto r = star_edge_coloring_4delta(g);
      if (!is_proper_edge(g, r.coloring).ok || r.coloring.palette > 4 * delta) {
        return "4Delta scheme, Delta=" + std::to_string(delta) + ": " + std::to_string(r.coloring.palette);
      }
      for (std::size_t x : {2, 3}) {
        const auto rx = recursive_star_edge_coloring(g, x);
        if (!is_proper_edge(g, rx.coloring).ok || rx.coloring.palette > (Color{1} << (x + 1)) * delta) {
          return "x=" + std::to_string(x) + ", Delta=" + std::to_string(delta) + ": " +
                 std::to_string(rx.coloring.palette);
        }
      }
    }
    return "";
  });

  report(4, "decomposition audit: leaves <= (tD)^x, leaf clique <= S/t^x + 2", [&]() -> std::string {
    std::vector<std::pair<std::string, Graph>> graphs;
    for (unsigned seed = 0; seed < 6; ++seed) {
      graphs.emplace_back("dense random " + std::to_string(seed), [&] {
        std::vector<std::pair<VertexId, VertexId>> es;
        std::uint64_t state = 12345 + seed;
        for (VertexId i = 0; i < 50; ++i)
          for (VertexId j = i + 1; j < 50; ++j) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            if ((state >> 33) % 100 < 55) es.emplace_back(i, j);
          }
        std::vector<VertexId> ids(50);
        for (VertexId i = 0; i < 50; ++i) ids[i] = i;
        return Graph::from_edges(ids, es);
      }());
    }
    for (const auto& s : corpus)
      if (!s.gen.cover && s.gen.graph.num_vertices() <= 60) graphs.emplace_back(s.name, s.gen.graph);
    std::size_t audited = 0;
    for (const auto& [name, g] : graphs) {
      const auto cover = enumerate_maximal_cliques(g);
      const auto D = cover.diversity(), S = cover.max_clique();
      for (std::size_t x = 1; x <= 2; ++x) {
        for (std::size_t t : {2, 3}) {
          const auto r = cd_coloring(g, cover, t, x, {.audit = true});
          if (r.report.levels.size() != x) return name + ": missing level stats";
          const auto& leaf = r.report.levels.back();
          const double leaves = std::pow(static_cast<double>(t * D), static_cast<double>(x));
          const double clique = static_cast<double>(S) / std::pow(static_cast<double>(t), x) + 2;
          if (leaf.subgraphs > leaves) return name + ": " + std::to_string(leaf.subgraphs) + " leaves";
          if (!leaf.exact_max_clique || *leaf.exact_max_clique > clique) return name + ": leaf clique too large";
          ++audited;
        }
      }
    }
    std::printf("  %zu audited runs\n", audited);
    return "";
  });

  report(5, "merge: exactly d rounds, crossing palette <= Delta + d - 1, proper", [&]() -> std::string {
    for (unsigned seed = 0; seed < 20; ++seed) {
      const auto g = random_bounded_degree(80, 6 + seed % 5, 500 + seed);
      const std::size_t d = 2 + seed % 4;
      std::vector<Vertex> A, B;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) <= d && (v * 7 + seed) % 3 != 0) A.push_back(v);
        else B.push_back(v);
      }
      const auto colA = edge_coloring_2delta(induced_subgraph_by_index(g, A)).coloring;
      const auto colB = edge_coloring_2delta(induced_subgraph_by_index(g, B)).coloring;
      const auto m = merge_cross_coloring(g, A, B, colA, colB, d);
      if (m.trace.rounds() != d || m.active.size() != d) return "round count differs from d";
      if (m.crossing_palette > g.max_degree() + d - 1) return "crossing palette too large";
      std::set<Vertex> inA(A.begin(), A.end());
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const bool crossing = inA.count(g.edge(e).u) != inA.count(g.edge(e).v);
        if (crossing && m.coloring[e] >= m.crossing_palette) return "crossing color outside its palette";
      }
      if (!is_proper_edge(g, m.coloring).ok || !naive_proper(g, m.coloring)) return "improper merge";
    }
    return "";
  });

  report(6, "arb-edge <= Delta + 5q a; powered <= (ceil(Delta^(1/x)) + ceil(a_hat^(1/x)) + 3)^x", [&]() -> std::string {
    std::vector<std::pair<std::size_t, Graph>> graphs;
    for (std::size_t delta : {16, 64, 81, 100}) {
      graphs.emplace_back(1, generate(GenKind::forest, {.n = 1000, .delta = delta, .seed = delta}).graph);
      graphs.emplace_back(4, generate(GenKind::forests, {.n = 800, .delta = delta, .forests = 4, .seed = delta}).graph);
    }
    const double q = kDefaultQ;
    for (const auto& [a, g] : graphs) {
      const auto delta = g.max_degree();
      const auto r = arb_edge_coloring(g, a, q);
      const auto d = static_cast<std::size_t>(std::floor(q * a));
      const Color closed = delta + 5 * d - 1;
      if (r.report.bound != closed || r.coloring.palette > closed ||
          static_cast<double>(r.coloring.palette) > delta + arb_edge_constant(q) * a) {
        return "arb-edge a=" + std::to_string(a) + " Delta=" + std::to_string(delta);
      }
      for (std::size_t x = 1; x <= 3; ++x) {
        const auto p = powered_edge_coloring(g, a, q, x);
        const auto bound = powered_bound(delta, q * a, x);
        if (p.coloring.palette != powered_palette(delta, p.report.d, p.report.s_in, p.report.s_out, x)) {
          return "powered palette differs from its closed form";
        }
        if (!is_proper_edge(g, p.coloring).ok || p.coloring.palette > bound) {
          return "powered a=" + std::to_string(a) + " Delta=" + std::to_string(delta) + " x=" + std::to_string(x) +
                 ": " + std::to_string(p.coloring.palette) + " > " + std::to_string(bound);
        }
      }
    }
    return "";
  });

  report(7, "Delta + o(Delta) on forests: colors/Delta decreasing and within 1 + C1/sqrt(Delta) + C2/Delta",
         [&]() -> std::string {
           double prev = INFINITY, prev_used = INFINITY;
           for (std::size_t delta : {16, 64, 256}) {
             const auto g = generate(GenKind::forest, {.n = 3000, .delta = delta, .seed = 7}).graph;
             const auto r = delta_plus_little_o(g, 1);
             if (!is_proper_edge(g, r.coloring).ok) return "improper";
             const double D = static_cast<double>(delta);
             const double ratio = static_cast<double>(r.coloring.palette) / D;
             const double limit = 1 + r.report.c1 / std::sqrt(D) + r.report.c2 / D;
             std::printf("  Delta=%zu palette=%llu used=%zu ratio=%.3f limit=%.3f\n", delta,
                         static_cast<unsigned long long>(r.coloring.palette), r.coloring.distinct(), ratio, limit);
             if (ratio > limit) return "ratio above limit at Delta=" + std::to_string(delta);
             const double used = static_cast<double>(r.coloring.distinct()) / D;
             if (!(ratio < prev) || !(used < prev_used)) {
               return "ratio not strictly decreasing at Delta=" + std::to_string(delta);
             }
             prev = ratio;
             prev_used = used;
           }
           return "";
         });

  report(8, "log* behavior of Linial coloring on paths", [&]() -> std::string {
    std::vector<std::size_t> rounds;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t n : {std::size_t{1} << 4, std::size_t{1} << 16, std::size_t{1000000}}) {
      const auto g = generate(GenKind::path, {.n = n}).graph;
      const auto r = linial_coloring(g);
      if (!is_proper_vertex(g, r.coloring).ok) return "improper";
      if (r.coloring.palette > kLinialConstant * 4) return "palette " + std::to_string(r.coloring.palette);
      rounds.push_back(r.trace.rounds());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("  rounds %zu, %zu, %zu; %.1f s\n", rounds[0], rounds[1], rounds[2], secs);
    for (std::size_t i = 1; i < rounds.size(); ++i)
      if (rounds[i] > rounds[i - 1] + 2 || rounds[i - 1] > rounds[i] + 2) return "round counts jump";
    if (secs >= 60) return "too slow";
    return "";
  });

  report(9, "oracle equivalence on small graphs", [&]() -> std::string {
    std::size_t checked = 0, line_checked = 0;
    for (const auto& s : corpus) {
      const auto& g = s.gen.graph;
      if (g.num_vertices() > 12) continue;
      const auto outcomes = run_all(s);
      if (g.num_vertices() <= kChromaticOracleMaxVertices) {
        const auto chi = brute_force_chromatic(g);
        const bool edge_oracle = g.num_edges() <= kEdgeChromaticOracleMaxEdges;
        const auto chi_e = edge_oracle ? brute_force_edge_chromatic(g) : 0;
        for (const auto& r : outcomes) {
          if (!naive_proper(g, r.coloring)) return r.algorithm + " on " + s.name + " fails the naive oracle";
          const auto need = r.coloring.kind == ColoringKind::vertex ? chi : chi_e;
          if (r.coloring.distinct() < need) return r.algorithm + " on " + s.name + " beats the chromatic number";
          ++checked;
        }
      }
      const auto [lg, lcover] = line_graph(g);
      for (const auto& r : outcomes) {
        if (r.algorithm.rfind("star_edge", 0) != 0) continue;
        const auto as_vertex = Coloring::vertex(r.coloring.colors, r.coloring.palette);
        if (is_proper_vertex(lg, as_vertex).ok != is_proper_edge(g, r.coloring).ok) {
          return "line-graph check disagrees on " + s.name;
        }
        ++line_checked;
      }
    }
    std::printf("  %zu oracle comparisons, %zu line-graph comparisons\n", checked, line_checked);
    return checked && line_checked ? "" : "nothing checked";
  });

  report(10, "H-partition invariant, l <= 2 log2 n, l weakly decreasing in q", [&]() -> std::string {
    for (const auto& s : corpus) {
      const auto& g = s.gen.graph;
      const auto h = h_partition(g, s.gen.arboricity_bound, 2.5);
      if (!check_h_partition(g, h)) return "invariant broken on " + s.name;
      const double n = static_cast<double>(g.num_vertices());
      if (h.size() > std::max(1.0, 2 * std::log2(n))) return "too many sets on " + s.name;
      if (h.size() > h_partition_bound(g.num_vertices(), 2.5)) return "recorded bound missed on " + s.name;
      std::size_t prev = h.size();
      for (double q : {3.0, 4.0, 6.0, 10.0}) {
        const auto l = h_partition(g, s.gen.arboricity_bound, q).size();
        if (l > prev) return "set count grew with q on " + s.name;
        prev = l;
      }
    }
    return "";
  });

  report(11, "determinism: repeated runs give identical reports", [&]() -> std::string {
    const std::vector<std::vector<std::string>> runs = {
        {"cd-color", "--gen", "line_of", "--n", "40", "--delta", "8", "--x", "2", "--audit"},
        {"refined", "--gen", "hyper_line", "--n", "40", "--edges", "200", "--x", "2"},
        {"star-edge", "--gen", "random", "--n", "150", "--delta", "16", "--x", "2"},
        {"arb-edge", "--gen", "forests", "--n", "300", "--delta", "30", "--forests", "3"},
        {"delta-little-o", "--gen", "forest", "--n", "400", "--delta", "49"},
        {"powered", "--gen", "forests", "--n", "300", "--delta", "64", "--forests", "4", "--x", "3"},
    };
    for (const auto& args : runs) {
      std::ostringstream a, b, err;
      const int ca = run_cli(args, a, err), cb = run_cli(args, b, err);
      if (ca != 0 || cb != 0) return args[0] + " failed: " + err.str();
      if (strip_wall_time(a.str()) != strip_wall_time(b.str())) return args[0] + " reports differ";
    }
    for (const auto& s : corpus) {
      const auto x = run_all(s), y = run_all(s);
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].coloring.colors != y[i].coloring.colors) return x[i].algorithm + " differs on " + s.name;
    }
    return "";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
