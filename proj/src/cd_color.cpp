#include "dcol/cd_color.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

#include "dcol/error.hpp"
#include "dcol/verify.hpp"

namespace dcol {

namespace {

using u128 = unsigned __int128;

Color mul(Color a, Color b) {
  const u128 p = u128{a} * b;
  if (p > std::numeric_limits<Color>::max()) throw LimitExceeded("palette does not fit in 64 bits");
  return static_cast<Color>(p);
}

Color power(Color b, std::size_t e) {
  Color r = 1;
  for (std::size_t i = 0; i < e; ++i) r = mul(r, b);
  return r;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

Color direct_palette(std::size_t D, std::size_t S) {
  return S == 0 ? 1 : static_cast<Color>(D) * (S - 1) + 1;
}

struct Node {
  Coloring coloring;
  RoundTrace trace;
};

class Recursion {
 public:
  Recursion(std::size_t D, bool intrinsic, const CdOptions& opt, std::vector<LevelStats>& levels)
      : D_(D), intrinsic_(intrinsic), opt_(opt), levels_(levels) {}

  Color refined_palette(std::size_t S, std::size_t x) const {
    if (S < kRefinedSmallCliqueThreshold || D_ < 2) return direct_palette(D_, S);
    const auto t = choose_params(S, x);
    const Color gamma = static_cast<Color>(D_) * (t - 1) + 1;
    const auto k = ceil_div(S, t);
    const Color sub = x == 1 ? direct_palette(D_, k) : refined_palette(k, x - 1);
    return std::min(mul(gamma, sub), mul(power(D_, x + 1), S));
  }

  Node leaf(const Graph& g, const LocalIds& ids, std::size_t S) const {
    const Color declared = direct_palette(D_, S);
    if (g.max_degree() + 1 > declared) {
      throw InvariantViolation("leaf degree " + std::to_string(g.max_degree()) +
                               " exceeds D(S-1) = " + std::to_string(declared - 1));
    }
    auto run = delta_plus_one(g, ids.ids, ids.space, opt_.sim);
    run.coloring.palette = declared;
    RoundTrace tr;
    tr.then(run.trace, "leaf");
    return {std::move(run.coloring), std::move(tr)};
  }

  Node plain(const Graph& g, const CliqueCover& cover, const LocalIds& ids, std::size_t S,
             std::size_t t, std::size_t x, std::size_t depth) {
    if (x == 0) return leaf(g, ids, S);
    const auto k = ceil_div(S, t);
    const Color sub = cd_palette(D_, k, t, x - 1);
    return split(g, cover, ids, S, t, depth, sub,
                 [&](const Graph& cg, const CliqueCover& cc, const LocalIds& ci) {
                   return plain(cg, cc, ci, k, t, x - 1, depth + 1);
                 });
  }

  Node refined(const Graph& g, const CliqueCover& cover, const LocalIds& ids, std::size_t S,
               std::size_t x, std::size_t depth) {
    if (S < kRefinedSmallCliqueThreshold || D_ < 2) return leaf(g, ids, S);
    const auto t = choose_params(S, x);
    const auto k = ceil_div(S, t);
    const Color sub = x == 1 ? direct_palette(D_, k) : refined_palette(k, x - 1);
    auto node = split(g, cover, ids, S, t, depth, sub,
                      [&](const Graph& cg, const CliqueCover& cc, const LocalIds& ci) {
                        return x == 1 ? leaf(cg, ci, k) : refined(cg, cc, ci, k, x - 1, depth + 1);
                      });
    const Color target = mul(power(D_, x + 1), S);
    if (node.coloring.palette > target) {
      auto red = reduce_palette(g, node.coloring, target, opt_.sim);
      node.trace.then(red.trace, "trim");
      node.coloring = std::move(red.coloring);
    }
    return node;
  }

 private:
  template <class Child>
  Node split(const Graph& g, const CliqueCover& cover, const LocalIds& ids, std::size_t S,
             std::size_t t, std::size_t depth, Color sub_palette, Child&& child) {
    const auto conn = build_vertex_connector(g, cover, t);
    const Color gamma = static_cast<Color>(D_) * (t - 1) + 1;
    auto phi = delta_plus_one(conn.derived, ids.ids, ids.space, opt_.sim);
    if (phi.coloring.palette > gamma) throw InvariantViolation("connector needs more than D(t-1)+1 colors");
    if (opt_.audit) audit_connector(g, conn, phi.coloring);

    std::vector<std::vector<Vertex>> classes(gamma);
    for (Vertex v = 0; v < g.num_vertices(); ++v) classes[phi.coloring[v]].push_back(v);

    const auto k = ceil_div(S, t);
    if (levels_.size() <= depth) levels_.resize(depth + 1);

    std::vector<Color> colors(g.num_vertices(), 0);
    std::vector<RoundTrace> traces;
    for (Color c = 0; c < gamma; ++c) {
      const auto& members = classes[c];
      if (members.empty()) continue;
      const auto sub = induced_subgraph_by_index(g, members);
      const auto sub_cover = restrict_cover(cover, g.num_vertices(), members);
      if (sub_cover.max_clique() > k) {
        throw InvariantViolation("class clique of size " + std::to_string(sub_cover.max_clique()) +
                                 " exceeds ceil(S/t) = " + std::to_string(k));
      }
      {
        auto& stats = levels_[depth];  // levels_ may grow during the child call
        ++stats.subgraphs;
        stats.max_clique = std::max(stats.max_clique, sub_cover.max_clique());
        stats.max_degree = std::max(stats.max_degree, sub.max_degree());
        if (opt_.audit) audit_class(sub, k, stats);
      }

      LocalIds sub_ids{{}, ids.space};
      for (auto v : members) sub_ids.ids.push_back(ids.ids[v]);
      auto res = child(sub, sub_cover, sub_ids);
      if (res.coloring.palette > sub_palette) throw InvariantViolation("class palette above its budget");
      for (std::size_t i = 0; i < members.size(); ++i) colors[members[i]] = c * sub_palette + res.coloring[i];
      traces.push_back(std::move(res.trace));
    }

    RoundTrace tr("connector", 2);
    tr.then(phi.trace, "connector-color");
    tr.then(RoundTrace::parallel(traces), "classes");
    return {Coloring::vertex(std::move(colors), mul(gamma, sub_palette)), std::move(tr)};
  }

  void audit_connector(const Graph& g, const Connector& conn, const Coloring& phi) const {
    if (conn.derived.max_degree() > D_ * (conn.t - 1)) throw InvariantViolation("audit: connector degree above D(t-1)");
    if (!is_proper_vertex(conn.derived, phi).ok) throw InvariantViolation("audit: connector coloring not proper");
    // Each class meets each block of each clique at most once.
    std::vector<std::tuple<CliqueId, std::size_t, Color>> keys;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (const auto& p : conn.part_of[v]) keys.emplace_back(p.clique, p.index, phi[v]);
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
      throw InvariantViolation("audit: a color class meets a block twice");
    }
  }

  void audit_class(const Graph& sub, std::size_t k, LevelStats& stats) const {
    const auto exact = max_clique_size(sub);
    stats.exact_max_clique = std::max(stats.exact_max_clique.value_or(0), exact);
    if (!intrinsic_) return;
    if (exact > k) throw InvariantViolation("audit: class clique exceeds ceil(S/t)");
    const auto div = enumerate_maximal_cliques(sub).diversity();
    stats.max_diversity = std::max(stats.max_diversity.value_or(0), div);
    if (div > D_) throw InvariantViolation("audit: class diversity exceeds D");
  }

  std::size_t D_;
  bool intrinsic_;
  const CdOptions& opt_;
  std::vector<LevelStats>& levels_;
};

void check_inputs(const Graph& g, const CliqueCover& cover, std::size_t x) {
  if (x < 1) throw InvalidInput("recursion depth x must be at least 1");
  if (cover.num_vertices() != g.num_vertices()) throw InvalidInput("cover does not match the graph");
  cover.validate(g);
}

}  // namespace

std::uint64_t integer_root(std::uint64_t n, std::size_t k) {
  if (k == 0) throw InvalidInput("root of order 0");
  if (k == 1 || n < 2) return n;
  auto fits = [&](std::uint64_t r) {
    u128 acc = 1;
    for (std::size_t i = 0; i < k; ++i) {
      acc *= r;
      if (acc > n) return false;
    }
    return true;
  };
  std::uint64_t lo = 1, hi = std::min<std::uint64_t>(n, std::uint64_t{1} << 32);
  while (lo < hi) {
    const auto mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

std::size_t choose_params(std::size_t S, std::size_t x) {
  if (x < 1) throw InvalidInput("recursion depth x must be at least 1");
  return std::max<std::size_t>(2, integer_root(S, x + 1));
}

Color cd_palette(std::size_t D, std::size_t S, std::size_t t, std::size_t x) {
  if (x == 0) return direct_palette(D, S);
  const Color gamma = static_cast<Color>(D) * (t - 1) + 1;
  return mul(gamma, cd_palette(D, ceil_div(S, t), t, x - 1));
}

Color cd_palette_bound(std::size_t D, std::size_t S, std::size_t t, std::size_t x) {
  // (tD)^x (S/t^x + 2) D = D^(x+1) (S + 2 t^x)
  return mul(power(D, x + 1), S + 2 * power(t, x)) + power(mul(t, D), x);
}

CdResult cd_coloring(const Graph& g, const CliqueCover& cover, std::size_t t, std::size_t x,
                     const CdOptions& options) {
  if (t < 2) throw InvalidInput("connector part size t must be at least 2");
  check_inputs(g, cover, x);
  CdResult out;
  auto& rep = out.report;
  rep.diversity = cover.diversity();
  rep.max_clique = cover.max_clique();
  rep.params = {t, x, CdVariant::plain};
  if (g.num_vertices() == 0) {
    out.coloring = Coloring::vertex({}, 1);
    rep.palette = 1;
    rep.bound = 1;
    return out;
  }
  auto base = linial_coloring(g, options.sim);
  const auto ids = refresh_ids(g, base.coloring);
  Recursion rec(rep.diversity, cover.mode() == CoverMode::intrinsic, options, rep.levels);
  auto node = rec.plain(g, cover, ids, rep.max_clique, t, x, 0);

  out.trace.then(base.trace, "base");
  out.trace.then(node.trace);
  out.coloring = std::move(node.coloring);
  rep.palette = out.coloring.palette;
  rep.bound = cd_palette_bound(rep.diversity, rep.max_clique, t, x);
  rep.rounds = out.trace.rounds();
  if (rep.palette > rep.bound) throw InvariantViolation("palette exceeds (tD)^x (S/t^x + 2) D + (tD)^x");
  return out;
}

CdResult refined_coloring(const Graph& g, const CliqueCover& cover, std::size_t x,
                          const CdOptions& options) {
  check_inputs(g, cover, x);
  CdResult out;
  auto& rep = out.report;
  rep.diversity = cover.diversity();
  rep.max_clique = cover.max_clique();
  const auto D = rep.diversity, S = rep.max_clique;
  rep.fallback = S < kRefinedSmallCliqueThreshold || D < 2;
  rep.params = {rep.fallback ? 0 : choose_params(S, x), x, CdVariant::refined};
  if (g.num_vertices() == 0) {
    out.coloring = Coloring::vertex({}, 1);
    rep.palette = 1;
    rep.bound = 1;
    return out;
  }
  auto base = linial_coloring(g, options.sim);
  const auto ids = refresh_ids(g, base.coloring);
  Recursion rec(D, cover.mode() == CoverMode::intrinsic, options, rep.levels);
  auto node = rec.refined(g, cover, ids, S, x, 0);

  out.trace.then(base.trace, "base");
  out.trace.then(node.trace);
  out.coloring = std::move(node.coloring);
  rep.palette = out.coloring.palette;
  rep.bound = mul(power(D, x + 1), S);
  rep.rounds = out.trace.rounds();
  if (rep.palette != rec.refined_palette(S, x)) throw InvariantViolation("refined palette disagrees with its closed form");
  if (rep.palette > rep.bound) throw InvariantViolation("palette exceeds D^(x+1) S");
  return out;
}

}  // namespace dcol
