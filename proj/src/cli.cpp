#include "dcol/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "dcol/arb_edge.hpp"
#include "dcol/cd_color.hpp"
#include "dcol/error.hpp"
#include "dcol/generate.hpp"
#include "dcol/io.hpp"
#include "dcol/line_graph.hpp"
#include "dcol/star_edge.hpp"
#include "dcol/verify.hpp"

namespace dcol {

using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string format = "edgelist";
  std::string gen;
  GenParams gp;
  std::string cover = "auto";
  std::optional<std::size_t> x, t, a, round_cap;
  std::optional<double> q;
  double epsilon = kDefaultEpsilon;
  bool audit = false;
  std::string json_path;
  std::string coloring_out;
  std::string coloring_in;
  std::string kind = "edge";
  std::string output;
  std::string cover_out;
};

struct Input {
  Graph graph;
  std::optional<CliqueCover> cover;
  std::optional<std::size_t> a_bound;
  bool hypergraph = false;
  Hypergraph hyper;
  json source;
};

Input load_input(const Options& o) {
  Input in;
  if (!o.gen.empty()) {
    const auto kind = parse_gen_kind(o.gen);
    auto g = generate(kind, o.gp);
    in.graph = std::move(g.graph);
    in.cover = std::move(g.cover);
    in.a_bound = g.arboricity_bound;
    in.source = {{"generator", o.gen}, {"n", o.gp.n},      {"delta", o.gp.delta}, {"forests", o.gp.forests},
                 {"w", o.gp.w},        {"h", o.gp.h},      {"edges", o.gp.edges}, {"rank", o.gp.rank},
                 {"seed", o.gp.seed}};
    return in;
  }
  if (o.input.empty()) throw InvalidInput("either --input or --gen is required");
  const auto fmt = parse_format(o.format);
  in.source = {{"input", o.input}, {"format", o.format}};
  if (fmt == GraphFormat::hypergraph) {
    in.hypergraph = true;
    in.hyper = load_hypergraph(o.input);
    auto [lg, cover] = hypergraph_line_graph(in.hyper);
    in.graph = std::move(lg);
    in.cover = std::move(cover);
  } else {
    in.graph = load_graph(o.input, fmt);
  }
  return in;
}

json graph_stats(const Graph& g) {
  return {{"n", g.num_vertices()},
          {"m", g.num_edges()},
          {"max_degree", g.max_degree()},
          {"arboricity_estimate", estimate_arboricity(g)}};
}

json trace_json(const RoundTrace& t) {
  json phases = json::array();
  for (const auto& p : t.phases()) phases.push_back({{"label", p.label}, {"rounds", p.rounds}});
  return {{"total", t.rounds()}, {"phases", std::move(phases)}};
}

/// What every algorithm hands back to the report writer.
struct Outcome {
  Graph colored;  ///< the graph the coloring lives on
  Coloring coloring;
  Color palette = 0;
  Color bound = 0;
  std::string bound_formula;
  RoundTrace trace;
  json params;
  json details;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
}

// --- vertex algorithms --------------------------------------------------------

struct CoverChoice {
  Graph graph;
  CliqueCover cover;
  std::string name;
};

CoverChoice resolve_cover(const Options& o, Input& in) {
  CoverChoice c;
  std::string mode = o.cover;
  if (mode == "auto") mode = in.cover ? "given" : "intrinsic";
  if (mode == "line") {
    if (in.hypergraph) {
      c.graph = in.graph;
      c.cover = *in.cover;
    } else {
      auto [lg, cover] = line_graph(in.graph);
      c.graph = std::move(lg);
      c.cover = std::move(cover);
    }
  } else if (mode == "given") {
    c.graph = in.graph;
    c.cover = *in.cover;
  } else if (mode == "intrinsic") {
    if (in.hypergraph) throw InvalidInput("hypergraph input needs --cover line");
    c.graph = in.graph;
    c.cover = enumerate_maximal_cliques(in.graph);
  } else if (mode.rfind("provided:", 0) == 0) {
    c.graph = in.graph;
    c.cover = load_cover(mode.substr(9), in.graph);
  } else {
    throw InvalidInput("unknown cover '" + o.cover + "'");
  }
  c.name = mode;
  return c;
}

json levels_json(const DecompositionReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    json j = {{"subgraphs", l.subgraphs}, {"max_clique", l.max_clique}, {"max_degree", l.max_degree}};
    if (l.exact_max_clique) j["exact_max_clique"] = *l.exact_max_clique;
    if (l.max_diversity) j["max_diversity"] = *l.max_diversity;
    levels.push_back(std::move(j));
  }
  return levels;
}

Outcome run_cd(const Options& o, Input& in, bool refined, const SimConfig& sim) {
  auto c = resolve_cover(o, in);
  const auto x = o.x.value_or(1);
  const auto D = c.cover.diversity(), S = c.cover.max_clique();
  CdOptions opts{o.audit, sim};
  Outcome out;
  CdResult r;
  if (refined) {
    r = refined_coloring(c.graph, c.cover, x, opts);
    out.bound_formula = "D^(x+1) * S";
  } else {
    const auto t = o.t.value_or(choose_params(S, x));
    r = cd_coloring(c.graph, c.cover, t, x, opts);
    out.bound_formula = "D^(x+1) (S + 2 t^x) + (t D)^x";
  }
  out.bound = r.report.bound;
  out.palette = r.coloring.palette;
  out.params = {{"x", x}, {"t", r.report.params.t}, {"cover", c.name}, {"audit", o.audit}};
  out.details = {{"diversity", D},
                 {"max_clique", S},
                 {"levels", levels_json(r.report)},
                 {"fallback", r.report.fallback},
                 {"palette", r.report.palette}};
  out.coloring = std::move(r.coloring);
  out.trace = std::move(r.trace);
  out.colored = std::move(c.graph);
  return out;
}

// --- edge algorithms ------------------------------------------------------------

std::size_t resolve_a(const Options& o, const Input& in, json& params) {
  if (o.a) {
    params["a_source"] = "flag";
    return *o.a;
  }
  if (in.a_bound) {
    params["a_source"] = "generator";
    return *in.a_bound;
  }
  params["a_source"] = "estimate";
  return estimate_arboricity(in.graph);
}

Outcome run_star(const Options& o, Input& in, const SimConfig& sim) {
  const auto x = o.x.value_or(1);
  auto r = recursive_star_edge_coloring(in.graph, x, sim);
  Outcome out;
  const Color delta = in.graph.max_degree();
  out.bound = std::max<Color>(1, (Color{1} << std::min<std::size_t>(x + 1, 62)) * delta);
  out.bound_formula = "2^(x+1) Delta";
  out.palette = r.coloring.palette;
  out.params = {{"x", x}, {"t", r.report.t}};
  json levels = json::array();
  for (const auto& l : r.report.levels) levels.push_back({{"classes", l.classes}, {"max_star", l.max_star}});
  out.details = {{"levels", std::move(levels)}, {"palette", r.report.palette}, {"declared_bound", r.report.bound}};
  out.coloring = std::move(r.coloring);
  out.trace = std::move(r.trace);
  out.colored = in.graph;
  return out;
}

Outcome run_arb(const Options& o, Input& in, double q, const SimConfig& sim) {
  Outcome out;
  out.params = {{"q", q}};
  const auto a = resolve_a(o, in, out.params);
  out.params["a"] = a;
  auto r = arb_edge_coloring(in.graph, a, q, sim);
  const auto C = arb_edge_constant(q);
  out.bound = static_cast<Color>(
      std::floor(static_cast<double>(in.graph.max_degree()) + C * static_cast<double>(a) + 1e-9));
  out.bound_formula = "Delta + C a, C = 5q";
  out.palette = r.coloring.palette;
  const auto& rep = r.report;
  out.details = {{"d", rep.d},         {"sets", rep.sets},       {"low", rep.low},
                 {"high", rep.high},   {"declared_bound", rep.bound}, {"C", C}};
  out.coloring = std::move(r.coloring);
  out.trace = std::move(r.trace);
  out.colored = in.graph;
  return out;
}

Outcome run_little_o(const Options& o, Input& in, double q, const SimConfig& sim) {
  Outcome out;
  out.params = {{"q", q}};
  const auto a = resolve_a(o, in, out.params);
  out.params["a"] = a;
  auto r = delta_plus_little_o(in.graph, a, q, sim);
  const auto& rep = r.report;
  out.bound = rep.bound;
  out.bound_formula = "(ceil(sqrt Delta) + (1+5q) s)^2, s = ceil(sqrt d)";
  out.palette = r.coloring.palette;
  const double delta = static_cast<double>(std::max<std::size_t>(1, in.graph.max_degree()));
  out.details = {{"d", rep.d},
                 {"k", rep.k},
                 {"in_size", rep.in_size},
                 {"s", rep.s},
                 {"phi_palette", rep.phi_palette},
                 {"psi_palette", rep.psi_palette},
                 {"C1", rep.c1},
                 {"C2", rep.c2},
                 {"ratio", static_cast<double>(rep.palette) / delta},
                 {"ratio_bound", 1.0 + rep.c1 / std::sqrt(delta) + rep.c2 / delta}};
  out.coloring = std::move(r.coloring);
  out.trace = std::move(r.trace);
  out.colored = in.graph;
  return out;
}

Outcome run_powered(const Options& o, Input& in, double q, const SimConfig& sim) {
  Outcome out;
  out.params = {{"q", q}};
  const auto a = resolve_a(o, in, out.params);
  out.params["a"] = a;
  std::size_t x = 0;
  if (o.x) {
    x = *o.x;
  } else {
    const auto p = auto_params(std::max<std::size_t>(1, in.graph.max_degree()), a, o.epsilon);
    x = p.x;
    out.params["auto"] = {{"x", p.x},         {"q", p.q},   {"eta", p.eta}, {"small_arboricity", p.small_arboricity},
                          {"guarantee", p.guarantee}};
  }
  out.params["x"] = x;
  auto r = powered_edge_coloring(in.graph, a, q, x, sim);
  const auto& rep = r.report;
  out.bound = rep.bound;
  out.bound_formula = "(ceil(Delta^(1/x)) + ceil(a_hat^(1/x)) + 3)^x, a_hat = q a";
  out.palette = r.coloring.palette;
  out.details = {{"d", rep.d},
                 {"a_hat", rep.a_hat},
                 {"s_in", rep.s_in},
                 {"s_out", rep.s_out},
                 {"level_palettes", rep.level_palettes},
                 {"leaf_palette", rep.leaf_palette},
                 {"within_bound", rep.within_bound}};
  out.coloring = std::move(r.coloring);
  out.trace = std::move(r.trace);
  out.colored = in.graph;
  return out;
}

json verdict_json(const Verdict& v) {
  json reasons = json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(10, v.violations.size()); ++i) {
    reasons.push_back(v.violations[i].reason);
  }
  return {{"proper", v.ok}, {"violations", v.violations.size()}, {"first_violations", std::move(reasons)}};
}

int emit(const json& report, const Options& o, std::ostream& out) {
  const auto text = report.dump(2) + "\n";
  out << text;
  if (!o.json_path.empty()) write_file(o.json_path, text);
  return report.value("ok", false) ? kExitOk : kExitVerification;
}

int run_algorithm(const std::string& name, const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  SimConfig sim;
  sim.round_cap = o.round_cap;
  auto in = load_input(o);
  const double q = o.q.value_or(2.0 + o.epsilon);

  Outcome r;
  if (name == "cd-color") r = run_cd(o, in, false, sim);
  else if (name == "refined") r = run_cd(o, in, true, sim);
  else {
    if (in.hypergraph) throw InvalidInput(name + " needs a graph, not a hypergraph");
    if (name == "star-edge") r = run_star(o, in, sim);
    else if (name == "arb-edge") r = run_arb(o, in, q, sim);
    else if (name == "delta-little-o") r = run_little_o(o, in, q, sim);
    else r = run_powered(o, in, q, sim);
  }

  const auto verdict = r.coloring.kind == ColoringKind::vertex ? is_proper_vertex(r.colored, r.coloring)
                                                               : is_proper_edge(r.colored, r.coloring);
  const auto used = r.coloring.distinct();
  const bool within_palette = used <= r.palette;
  const bool within_bound = r.palette <= r.bound;
  json report;
  report["algorithm"] = name;
  report["params"] = r.params;
  report["params"]["epsilon"] = o.epsilon;
  if (o.round_cap) report["params"]["round_cap"] = *o.round_cap;
  report["source"] = in.source;
  report["graph"] = graph_stats(in.graph);
  if (r.colored.num_vertices() != in.graph.num_vertices() || r.colored.num_edges() != in.graph.num_edges() ||
      r.details.contains("diversity")) {
    report["colored_graph"] = graph_stats(r.colored);
  }
  report["colors_used"] = used;
  report["palette"] = r.palette;
  report["bound"] = {{"formula", r.bound_formula}, {"value", r.bound}};
  report["rounds"] = trace_json(r.trace);
  report["verdict"] = verdict_json(verdict);
  report["verdict"]["colors_within_palette"] = within_palette;
  report["verdict"]["palette_within_bound"] = within_bound;
  report["details"] = r.details;
  report["ok"] = verdict.ok && within_palette && within_bound;
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (!o.coloring_out.empty()) {
    std::ofstream f(o.coloring_out);
    if (!f) throw InvalidInput("cannot write " + o.coloring_out);
    write_coloring(f, r.colored, r.coloring);
  }
  return emit(report, o, out);
}

int run_verify(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  if (o.coloring_in.empty()) throw InvalidInput("verify needs --coloring PATH");
  auto in = load_input(o);
  ColoringKind kind;
  if (o.kind == "vertex") kind = ColoringKind::vertex;
  else if (o.kind == "edge") kind = ColoringKind::edge;
  else throw InvalidInput("--kind must be vertex or edge");
  std::ifstream f(o.coloring_in);
  if (!f) throw InvalidInput("cannot open " + o.coloring_in);
  const auto c = read_coloring(f, in.graph, kind, o.coloring_in);
  const auto v = kind == ColoringKind::vertex ? is_proper_vertex(in.graph, c) : is_proper_edge(in.graph, c);
  json report;
  report["algorithm"] = "verify";
  report["params"] = {{"kind", o.kind}, {"coloring", o.coloring_in}};
  report["source"] = in.source;
  report["graph"] = graph_stats(in.graph);
  report["colors_used"] = c.distinct();
  report["verdict"] = verdict_json(v);
  report["ok"] = v.ok;
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return emit(report, o, out);
}

int run_gen(const Options& o, std::ostream& out) {
  if (o.gen.empty()) throw InvalidInput("gen needs --gen KIND");
  const auto start = std::chrono::steady_clock::now();
  auto in = load_input(o);
  std::ostringstream graph_text;
  write_edgelist(graph_text, in.graph);
  json report;
  report["algorithm"] = "gen";
  report["source"] = in.source;
  report["graph"] = graph_stats(in.graph);
  report["graph"]["arboricity_bound"] = *in.a_bound;
  if (in.cover) {
    report["graph"]["diversity"] = in.cover->diversity();
    report["graph"]["max_clique"] = in.cover->max_clique();
  }
  report["ok"] = true;
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!o.cover_out.empty()) {
    if (!in.cover) throw InvalidInput("generator '" + o.gen + "' has no cover");
    std::ostringstream cover_text;
    write_cover(cover_text, in.graph, *in.cover);
    write_file(o.cover_out, cover_text.str());
  }
  if (o.output.empty()) {
    out << graph_text.str();
    if (!o.json_path.empty()) write_file(o.json_path, report.dump(2) + "\n");
    return kExitOk;
  }
  write_file(o.output, graph_text.str());
  return emit(report, o, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Deterministic LOCAL-model coloring simulator", "dcolor"};
  app.set_config("--config", "", "TOML or INI file with option defaults");
  app.require_subcommand(1, 1);

  app.add_option("--input", o.input, "Graph file");
  app.add_option("--format", o.format, "edgelist | dimacs | hypergraph")
      ->check(CLI::IsMember({"edgelist", "dimacs", "hypergraph"}))
      ->capture_default_str();
  app.add_option("--gen", o.gen, "Generator: path random forest forests grid complete line_of hyper_line");
  app.add_option("--n", o.gp.n, "Generator: vertex count")->capture_default_str();
  app.add_option("--delta", o.gp.delta, "Generator: maximum degree")->capture_default_str();
  app.add_option("--forests", o.gp.forests, "Generator: number of forests")->capture_default_str();
  app.add_option("--width", o.gp.w, "Generator: grid width")->capture_default_str();
  app.add_option("--height", o.gp.h, "Generator: grid height")->capture_default_str();
  app.add_option("--edges", o.gp.edges, "Generator: hyperedge count (0 = 2n)")->capture_default_str();
  app.add_option("--rank", o.gp.rank, "Generator: hyperedge size")->capture_default_str();
  app.add_option("--seed", o.gp.seed, "Generator seed")->capture_default_str();
  app.add_option("--x", o.x, "Recursion depth");
  app.add_option("--t", o.t, "Connector part size (cd-color)");
  app.add_option("--q", o.q, "H-partition ratio (default 2 + epsilon)");
  app.add_option("--a", o.a, "Arboricity bound (default: generator bound or estimate)");
  app.add_option("--epsilon", o.epsilon, "Slack epsilon")->capture_default_str();
  app.add_option("--cover", o.cover, "auto | intrinsic | line | provided:PATH")->capture_default_str();
  app.add_flag("--audit", o.audit, "Per-level decomposition checks");
  app.add_option("--json", o.json_path, "Also write the report here");
  app.add_option("--round-cap", o.round_cap, "Round cap per simulated routine");
  app.add_option("--coloring-out", o.coloring_out, "Write the coloring here");
  app.add_option("--coloring", o.coloring_in, "verify: coloring file");
  app.add_option("--kind", o.kind, "verify: vertex | edge")->capture_default_str();
  app.add_option("--output", o.output, "gen: graph file (default stdout)");
  app.add_option("--cover-out", o.cover_out, "gen: cover file");

  const char* commands[][2] = {
      {"cd-color", "Clique-decomposition vertex coloring"},
      {"refined", "Refined clique-decomposition coloring, D^(x+1) S colors"},
      {"star-edge", "Star-partition edge coloring, 2^(x+1) Delta colors"},
      {"arb-edge", "Delta + O(a) edge coloring"},
      {"delta-little-o", "Delta + o(Delta) edge coloring"},
      {"powered", "Powered arboricity edge coloring"},
      {"verify", "Check a coloring file"},
      {"gen", "Generate a graph"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto name = app.get_subcommands().front()->get_name();
  try {
    if (name == "verify") return run_verify(o, out);
    if (name == "gen") return run_gen(o, out);
    return run_algorithm(name, o, out);
  } catch (const InvalidInput& e) {
    err << "dcolor: " << e.what() << "\n";
    out << json{{"algorithm", name}, {"ok", false}, {"error", e.what()}}.dump(2) << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "dcolor: " << e.what() << "\n";
    out << json{{"algorithm", name}, {"ok", false}, {"error", e.what()}}.dump(2) << "\n";
    return kExitVerification;
  }
}

std::string strip_wall_time(const std::string& report) {
  auto j = json::parse(report);
  j.erase("wall_time_ms");
  return j.dump(2);
}

}  // namespace dcol
