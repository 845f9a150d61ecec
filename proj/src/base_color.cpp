#include "dcol/base_color.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "dcol/error.hpp"
#include "dcol/line_graph.hpp"
#include "dcol/verify.hpp"

namespace dcol {

namespace {

using u128 = unsigned __int128;

bool is_prime(Color p) {
  if (p < 2) return false;
  for (Color d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Color next_prime_at_least(Color p) {
  while (!is_prime(p)) ++p;
  return p;
}

/// Smallest r with r^k >= m.
Color ceil_root(Color m, std::size_t k) {
  if (m <= 1) return 1;
  auto pow_at_least = [&](Color r) {
    u128 acc = 1;
    for (std::size_t i = 0; i < k; ++i) {
      acc *= r;
      if (acc >= m) return true;
    }
    return acc >= m;
  };
  Color lo = 1, hi = 2;
  while (!pow_at_least(hi)) hi *= 2;
  while (lo < hi) {
    const Color mid = lo + (hi - lo) / 2;
    if (pow_at_least(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

/// Color c read as a polynomial over GF(p) with base-p digits as coefficients,
/// evaluated at x.
Color eval_poly(Color c, std::size_t degree, Color p, Color x) {
  std::array<Color, 64> coef{};
  for (std::size_t i = 0; i <= degree; ++i) {
    coef[i] = c % p;
    c /= p;
  }
  Color acc = 0;
  for (std::size_t i = degree + 1; i-- > 0;) acc = static_cast<Color>((u128{acc} * x + coef[i]) % p);
  return acc;
}

class LinialProgram {
 public:
  using Message = Color;
  using Output = Color;

  LinialProgram(Color color, const std::vector<LinialStep>* schedule)
      : color_(color), schedule_(schedule) {}

  void init(VertexContext<Message>& ctx) {
    if (schedule_->empty()) {
      ctx.halt();
      return;
    }
    ctx.broadcast(color_);
  }

  void step(VertexContext<Message>& ctx, std::size_t round, std::span<const Envelope<Message>> inbox) {
    const auto& s = (*schedule_)[round - 1];
    // Pick the first point where our polynomial differs from every neighbor's.
    Color x = 0;
    for (; x < s.prime; ++x) {
      const auto mine = eval_poly(color_, s.degree, s.prime, x);
      bool clash = false;
      for (const auto& env : inbox) {
        if (eval_poly(env.message, s.degree, s.prime, x) == mine) {
          clash = true;
          break;
        }
      }
      if (!clash) break;
    }
    if (x == s.prime) throw InvariantViolation("Linial step found no separating point");
    color_ = x * s.prime + eval_poly(color_, s.degree, s.prime, x);
    if (round == schedule_->size()) {
      ctx.halt();
      return;
    }
    ctx.broadcast(color_);
  }

  Output output() const { return color_; }

 private:
  Color color_;
  const std::vector<LinialStep>* schedule_;
};

class ReductionProgram {
 public:
  using Message = Color;
  using Output = Color;

  ReductionProgram(Color color, Color palette, Color target)
      : color_(color), palette_(palette), target_(target) {}

  void init(VertexContext<Message>& ctx) {
    neighbor_colors_.assign(ctx.degree(), 0);
    if (palette_ <= target_) {
      ctx.halt();
      return;
    }
    ctx.broadcast(color_);
  }

  void step(VertexContext<Message>& ctx, std::size_t round, std::span<const Envelope<Message>> inbox) {
    auto nb = ctx.neighbors();
    for (const auto& env : inbox) {
      const auto slot = std::lower_bound(nb.begin(), nb.end(), env.from) - nb.begin();
      neighbor_colors_[static_cast<std::size_t>(slot)] = env.message;
    }
    if (color_ == palette_ - round) {
      std::vector<char> used(target_, 0);
      for (auto c : neighbor_colors_) {
        if (c < target_) used[c] = 1;
      }
      Color c = 0;
      while (c < target_ && used[c]) ++c;
      if (c == target_) throw InvariantViolation("basic reduction found no free color");
      color_ = c;
      ctx.broadcast(color_);
    }
    if (round == palette_ - target_) ctx.halt();
  }

  Output output() const { return color_; }

 private:
  Color color_;
  Color palette_;
  Color target_;
  std::vector<Color> neighbor_colors_;
};

SimConfig with_schedule(const Graph& g, const SimConfig& config, std::size_t scheduled) {
  if (config.round_cap) return config;
  return {std::max(default_round_cap(g), scheduled + 1)};
}

void require_proper(const Graph& g, const Coloring& c, const char* what) {
  const auto verdict = is_proper_vertex(g, c);
  if (!verdict.ok) throw InvalidInput(std::string(what) + ": " + verdict.violations.front().reason);
  count_colors(c);
}

RoundTrace doubled(const RoundTrace& t) {
  RoundTrace out;
  for (const auto& p : t.phases()) out.add("line-sim/" + p.label, 2 * p.rounds);
  return out;
}

}  // namespace

std::vector<LinialStep> linial_schedule(Color palette, std::size_t max_degree) {
  std::vector<LinialStep> steps;
  if (max_degree == 0) return steps;
  Color m = palette;
  for (;;) {
    LinialStep best;
    for (std::size_t d = 1; d < 64; ++d) {
      const Color floor_p = static_cast<Color>(d) * max_degree + 1;
      const Color p = next_prime_at_least(std::max(floor_p, ceil_root(m, d + 1)));
      if (p >= (Color{1} << 32)) continue;
      const Color sq = p * p;
      if (best.prime == 0 || sq < best.palette_after) best = {d, p, sq};
      if (floor_p > m) break;
    }
    if (best.palette_after >= m) break;
    steps.push_back(best);
    m = best.palette_after;
  }
  return steps;
}

ColoringRun linial_coloring(const Graph& g, std::span<const Color> initial, Color initial_palette,
                            const SimConfig& config) {
  if (initial.size() != g.num_vertices()) throw InvalidInput("initial coloring is not total");
  if (g.max_degree() == 0) {
    return {Coloring::vertex(std::vector<Color>(g.num_vertices(), 0), 1), RoundTrace("linial", 0)};
  }
  const auto schedule = linial_schedule(initial_palette, g.max_degree());
  auto res = run<LinialProgram>(
      g, [&](Vertex v) { return LinialProgram(initial[v], &schedule); },
      with_schedule(g, config, schedule.size()), "linial");
  const Color palette = schedule.empty() ? initial_palette : schedule.back().palette_after;
  return {Coloring::vertex(std::move(res.outputs), palette), std::move(res.trace)};
}

ColoringRun linial_coloring(const Graph& g, const SimConfig& config) {
  std::vector<Color> ids(g.ids().begin(), g.ids().end());
  const Color space = ids.empty() ? 1 : ids.back() + 1;
  return linial_coloring(g, ids, space, config);
}

ColoringRun reduce_palette(const Graph& g, const Coloring& c, Color target, const SimConfig& config) {
  require_proper(g, c, "basic reduction needs a proper coloring");
  if (target < g.max_degree() + 1) {
    throw InvalidInput("reduction target " + std::to_string(target) + " is below Delta + 1 = " +
                       std::to_string(g.max_degree() + 1));
  }
  if (c.palette <= target) return {c, RoundTrace("reduce", 0)};
  const auto rounds = c.palette - target;
  auto res = run<ReductionProgram>(
      g, [&](Vertex v) { return ReductionProgram(c[v], c.palette, target); },
      with_schedule(g, config, rounds), "reduce");
  return {Coloring::vertex(std::move(res.outputs), target), std::move(res.trace)};
}

ColoringRun reduce_colors(const Graph& g, const Coloring& c, const SimConfig& config) {
  if (c.palette < g.max_degree() + 1) {
    throw InvalidInput("palette must be Delta + r with r >= 1");
  }
  return reduce_palette(g, c, g.max_degree() + 1, config);
}

ColoringRun delta_plus_one(const Graph& g, std::span<const Color> initial, Color initial_palette,
                           const SimConfig& config) {
  auto lin = linial_coloring(g, initial, initial_palette, config);
  const Color target = g.max_degree() + 1;
  RoundTrace trace = lin.trace;
  if (lin.coloring.palette <= target) {
    lin.coloring.palette = target;
    return {std::move(lin.coloring), std::move(trace)};
  }
  auto red = reduce_palette(g, lin.coloring, target, config);
  trace.then(red.trace);
  return {std::move(red.coloring), std::move(trace)};
}

ColoringRun delta_plus_one(const Graph& g, const SimConfig& config) {
  std::vector<Color> ids(g.ids().begin(), g.ids().end());
  const Color space = ids.empty() ? 1 : ids.back() + 1;
  return delta_plus_one(g, ids, space, config);
}

LocalIds refresh_ids(const Graph& g, const Coloring& base) {
  require_proper(g, base, "ID replacement needs a proper base coloring");
  return {base.colors, base.palette};
}

ColoringRun edge_coloring_2delta(const Graph& g, const SimConfig& config) {
  if (g.num_edges() == 0) return {Coloring::edge({}, 1), RoundTrace("edge-color", 0)};
  const auto [lg, cover] = line_graph(g);
  auto res = delta_plus_one(lg, config);
  const Color declared = std::max<Color>(1, 2 * static_cast<Color>(g.max_degree()) - 1);
  if (res.coloring.palette > declared) {
    throw InvariantViolation("line graph degree exceeds 2 Delta - 2");
  }
  return {Coloring::edge(std::move(res.coloring.colors), declared), doubled(res.trace)};
}

ColoringRun reduce_edge_palette(const Graph& g, const Coloring& c, Color target,
                                const SimConfig& config) {
  if (c.kind != ColoringKind::edge) throw InvalidInput("expected an edge coloring");
  if (g.num_edges() == 0 || c.palette <= target) {
    return {c, RoundTrace("reduce", 0)};
  }
  const auto [lg, cover] = line_graph(g);
  auto res = reduce_palette(lg, Coloring::vertex(c.colors, c.palette), target, config);
  return {Coloring::edge(std::move(res.coloring.colors), res.coloring.palette), doubled(res.trace)};
}

}  // namespace dcol
