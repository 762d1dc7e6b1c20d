#include "hypembed/base_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hypembed/error.hpp"
#include "hypembed/neighborhood.hpp"

namespace hypembed {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ColoredCovering whole_space(const FiniteMetricSpace& space, std::size_t colors, double scale) {
  ColoredCovering c;
  c.scale = scale;
  c.colors.assign(colors, Family{space.all_points()});
  return c;
}

ColoredCovering singletons(const FiniteMetricSpace& space, std::size_t colors, double scale) {
  Family f;
  for (std::size_t z = 0; z < space.size(); ++z) f.push_back(Subset{static_cast<PointIndex>(z)});
  ColoredCovering c;
  c.scale = scale;
  c.colors.assign(colors, f);
  return c;
}

// Quality of a candidate level: the smallest of L, the per-color
// disjointness radius and the inner radius, relative to the scale.
double level_quality(const FiniteMetricSpace& space, const ColoredCovering& c, double scale) {
  double q = lebesgue(space, c);
  for (const auto& f : c.colors) {
    q = std::min(q, disjointness_radius(space, f));
    for (const auto& u : f) q = std::min(q, inner_radius(space, u));
  }
  return q / scale;
}

Subset window(std::size_t start, std::size_t length, std::size_t n) {
  std::vector<PointIndex> pts;
  pts.reserve(length);
  for (std::size_t i = 0; i < length; ++i) pts.push_back(static_cast<PointIndex>((start + i) % n));
  return Subset(std::move(pts));
}

// Longest window starting at `start` whose diameter stays within `scale`.
std::size_t max_window(const FiniteMetricSpace& space, std::size_t start, double scale, bool cyclic) {
  const std::size_t n = space.size();
  std::size_t len = 1;
  while (len < n) {
    if (!cyclic && start + len >= n) break;
    const auto next = static_cast<PointIndex>((start + len) % n);
    auto row = space.row(next);
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) ok = row[(start + i) % n] <= scale * (1.0 + kScaleSlack);
    if (!ok) break;
    ++len;
  }
  return len;
}

// Arcs (cyclic) or blocks (linear) of consecutive indices, colored
// round-robin. Searches window count and length for the best quality.
ColoredCovering window_covering(const FiniteMetricSpace& space, double scale, std::size_t colors, bool cyclic) {
  const std::size_t n = space.size();
  const std::size_t m = colors;
  std::size_t w = n;
  for (std::size_t s = 0; s < n; s += std::max<std::size_t>(1, n / 16)) w = std::min(w, max_window(space, s, scale, cyclic));
  if (w < 2) return singletons(space, colors, scale);

  ColoredCovering best = singletons(space, colors, scale);
  double best_q = -1.0;
  constexpr std::size_t kBudget = 160;
  std::size_t evaluated = 0;
  for (std::size_t len = w; len >= 2 && evaluated < kBudget; --len) {
    // Consecutive windows overlap (period <= len-1); windows of one color
    // are disjoint (m * period >= len).
    std::size_t k_lo, k_hi;
    if (cyclic) {
      k_lo = (n + len - 2) / (len - 1);
      k_hi = std::min(n, m * n / len);
      k_lo = ((k_lo + m - 1) / m) * m;
      k_hi = (k_hi / m) * m;
      k_lo = std::max(k_lo, m);
    } else {
      k_lo = len >= n ? 1 : (n - len + len - 2) / (len - 1) + 1;
      k_hi = n;
    }
    for (std::size_t k = k_lo; k <= k_hi && evaluated < kBudget; ++k) {
      std::vector<std::size_t> starts(k);
      for (std::size_t i = 0; i < k; ++i)
        starts[i] = cyclic ? i * n / k : (k == 1 ? 0 : i * (n - std::min(len, n)) / (k - 1));
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const std::size_t end = starts[i] + len;  // one past the window
        if (cyclic) {
          const std::size_t next = i + 1 < k ? starts[i + 1] : starts[0] + n;
          ok = end > next;
          if (ok && k > m) {
            const std::size_t same = i + m < k ? starts[i + m] : starts[i + m - k] + n;
            ok = end <= same;
          }
        } else {
          if (i + 1 < k) ok = end > starts[i + 1];
          if (ok && i + m < k) ok = end <= starts[i + m];
          if (ok && i + 1 == k) ok = end >= n;
        }
      }
      if (!ok) {
        if (!cyclic && k > k_lo + 4 * m) break;
        continue;
      }
      ColoredCovering c;
      c.scale = scale;
      c.colors.assign(m, {});
      for (std::size_t i = 0; i < k; ++i) c.colors[i % m].push_back(window(starts[i], std::min(len, n), n));
      if (mesh(space, c) > scale * (1.0 + kScaleSlack) || !covers(space, c.flatten())) continue;
      ++evaluated;
      const double q = level_quality(space, c, scale);
      if (q > best_q) {
        best_q = q;
        best = std::move(c);
      }
    }
  }
  return best;
}

// Aligned blocks of b^(D-l) consecutive indices (clopen cylinders), one
// copy per color.
ColoredCovering cylinder_covering(const FiniteMetricSpace& space, double scale, std::size_t colors) {
  const std::size_t n = space.size();
  const std::size_t b = space.layout().branching;
  if (b < 2) throw Error("cylinder strategy needs a hierarchical layout");
  for (std::size_t block = n; block >= 2; block /= b) {
    if (n % block != 0) throw Error("point count is not a power of the branching factor");
    Family f;
    double worst = 0.0;
    for (std::size_t s = 0; s < n; s += block) {
      f.push_back(window(s, block, n));
      worst = std::max(worst, diameter(space, f.back()));
    }
    if (worst <= scale * (1.0 + kScaleSlack)) {
      ColoredCovering c;
      c.scale = scale;
      c.colors.assign(colors, f);
      return c;
    }
  }
  return singletons(space, colors, scale);
}

// Balls of radius scale/2 around a greedy scale/4-net, greedily colored so
// that each color class stays delta*scale-disjoint.
ColoredCovering greedy_covering(const FiniteMetricSpace& space, double scale, std::size_t colors, double delta) {
  const std::size_t n = space.size();
  std::vector<PointIndex> centers;
  std::vector<double> near(n, kInf);
  for (std::size_t z = 0; z < n; ++z) {
    if (near[z] <= scale / 4.0) continue;
    centers.push_back(static_cast<PointIndex>(z));
    auto row = space.row(static_cast<PointIndex>(z));
    for (std::size_t y = 0; y < n; ++y) near[y] = std::min(near[y], row[y]);
  }
  Family balls;
  std::vector<std::vector<double>> fields;
  for (PointIndex c : centers) {
    balls.push_back(closed_neighborhood(space, Subset{c}, scale / 2.0));
    fields.push_back(distance_field(space, balls.back()));
  }
  const double sep = delta * scale;
  std::vector<std::size_t> color_of(balls.size(), 0);
  std::size_t used = 0;
  for (std::size_t i = 0; i < balls.size(); ++i) {
    std::vector<char> blocked(balls.size() + 1, 0);
    for (std::size_t k = 0; k < i; ++k) {
      double pair = kInf;
      for (std::size_t z = 0; z < n && pair >= sep; ++z) pair = std::min(pair, std::max(fields[i][z], fields[k][z]));
      if (pair < sep) blocked[color_of[k]] = 1;
    }
    std::size_t c = 0;
    while (blocked[c]) ++c;
    color_of[i] = c;
    used = std::max(used, c + 1);
  }
  ColoredCovering out;
  out.scale = scale;
  out.colors.assign(std::max(colors, used), {});
  for (std::size_t i = 0; i < balls.size(); ++i) out.colors[color_of[i]].push_back(balls[i]);
  return out;
}

std::string level_failure(std::size_t j, const char* quantity, double value, const char* rel, double bound) {
  std::ostringstream os;
  os << "level " << j << ": " << quantity << " = " << value << " " << rel << " " << bound;
  return os.str();
}

}  // namespace

std::string_view to_string(BaseStrategy s) {
  switch (s) {
    case BaseStrategy::circle_arcs: return "circle_arcs";
    case BaseStrategy::interval_blocks: return "interval_blocks";
    case BaseStrategy::cantor_clopen: return "cantor_clopen";
    case BaseStrategy::tree_boundary_cylinders: return "tree_boundary_cylinders";
    case BaseStrategy::generic_greedy: return "generic_greedy";
  }
  return "unknown";
}

BaseStrategy parse_strategy(std::string_view name) {
  for (auto s : {BaseStrategy::circle_arcs, BaseStrategy::interval_blocks, BaseStrategy::cantor_clopen,
                 BaseStrategy::tree_boundary_cylinders, BaseStrategy::generic_greedy})
    if (to_string(s) == name) return s;
  throw Error("unknown strategy '" + std::string(name) + "'");
}

BaseStrategy default_strategy(const FiniteMetricSpace& space) {
  switch (space.layout().kind) {
    case Layout::Kind::cyclic: return BaseStrategy::circle_arcs;
    case Layout::Kind::linear: return BaseStrategy::interval_blocks;
    case Layout::Kind::hierarchical:
      return space.layout().branching == 2 ? BaseStrategy::cantor_clopen : BaseStrategy::tree_boundary_cylinders;
    case Layout::Kind::unstructured: break;
  }
  return BaseStrategy::generic_greedy;
}

ColoredCovering strategy_covering(const FiniteMetricSpace& space, BaseStrategy strategy, double scale,
                                  std::size_t colors, double delta) {
  if (colors == 0) throw Error("at least one color is required");
  if (!(scale > 0.0)) throw Error("covering scale must be positive");
  if (space.size() == 1 || space.diameter() <= scale) return whole_space(space, colors, scale);
  const auto kind = space.layout().kind;
  switch (strategy) {
    case BaseStrategy::circle_arcs:
      if (kind != Layout::Kind::cyclic) throw Error("circle_arcs needs a cyclic layout");
      return window_covering(space, scale, colors, true);
    case BaseStrategy::interval_blocks:
      if (kind != Layout::Kind::linear) throw Error("interval_blocks needs a linear layout");
      return window_covering(space, scale, colors, false);
    case BaseStrategy::cantor_clopen:
    case BaseStrategy::tree_boundary_cylinders:
      if (kind != Layout::Kind::hierarchical) throw Error(std::string(to_string(strategy)) + " needs a hierarchical layout");
      return cylinder_covering(space, scale, colors);
    case BaseStrategy::generic_greedy:
      return greedy_covering(space, scale, colors, delta);
  }
  throw Error("unknown strategy");
}

std::size_t pad_nets(const FiniteMetricSpace& space, ColoredCovering& covering, double scale, double delta,
                     double lambda) {
  const std::size_t n = space.size();
  const double sep = delta * scale;
  std::size_t added = 0;
  for (std::size_t a = 0; a < covering.colors.size(); ++a) {
    Family& own = covering.colors[a];
    std::vector<std::vector<double>> own_fields;
    std::vector<double> reach(n, kInf);
    for (const auto& u : own) {
      own_fields.push_back(distance_field(space, u));
      for (std::size_t z = 0; z < n; ++z) reach[z] = std::min(reach[z], own_fields.back()[z]);
    }
    for (std::size_t z = 0; z < n; ++z) {
      if (reach[z] <= lambda * scale) continue;
      bool placed = false;
      for (std::size_t b = 0; b < covering.colors.size() && !placed; ++b) {
        if (b == a) continue;
        for (const auto& v : covering.colors[b]) {
          if (!v.contains(static_cast<PointIndex>(z))) continue;
          const auto fv = distance_field(space, v);
          bool fits = true;
          for (const auto& fu : own_fields) {
            double pair = kInf;
            for (std::size_t y = 0; y < n && pair >= sep; ++y) pair = std::min(pair, std::max(fu[y], fv[y]));
            if (pair < sep) {
              fits = false;
              break;
            }
          }
          if (!fits) continue;
          own.push_back(v);
          for (std::size_t y = 0; y < n; ++y) reach[y] = std::min(reach[y], fv[y]);
          own_fields.push_back(fv);
          ++added;
          placed = true;
          break;
        }
      }
    }
  }
  return added;
}

BaseSequence build_base(const FiniteMetricSpace& space, double r, std::size_t colors, std::size_t depth,
                        BaseStrategy strategy, const BaseOptions& options) {
  if (!(r > 0.0 && r < 1.0)) throw Error("r must lie in (0,1)");
  if (depth == 0) throw Error("depth must be at least 1");
  if (colors == 0) throw Error("at least one color is required");
  if (!(options.delta > 0.0 && options.delta < 1.0)) throw Error("delta must lie in (0,1)");
  const double lambda = options.lambda.value_or(1.0 + 2.0 * options.delta);
  if (lambda < 1.0) throw Error("lambda must be at least 1");

  BaseSequence base;
  base.delta = options.delta;
  base.lambda = lambda;
  base.ladder.r = r;
  std::size_t achieved_colors = colors;
  for (std::size_t j = 1; j <= depth; ++j) {
    const double scale = std::pow(r, static_cast<double>(j));
    base.ladder.levels.push_back(strategy_covering(space, strategy, scale, colors, options.delta));
    achieved_colors = std::max(achieved_colors, base.ladder.levels.back().color_count());
  }
  base.ladder.color_count = achieved_colors;
  std::size_t padded = 0;
  for (std::size_t j = 1; j <= depth; ++j) {
    auto& level = base.ladder.levels[j - 1];
    level.colors.resize(achieved_colors);
    padded += pad_nets(space, level, base.ladder.scale(j), options.delta, lambda);
  }

  auto& prov = base.provenance;
  prov.strategy = std::string(to_string(strategy));
  prov.requested_colors = colors;
  prov.achieved_colors = achieved_colors;
  prov.requested_delta = options.delta;
  prov.requested_lambda = lambda;
  prov.padded_members = padded;
  if (achieved_colors > colors) prov.notes.push_back("strategy needed more colors than requested");

  // First failing level, in order.
  const bool single = space.size() == 1;
  for (std::size_t j = 1; j <= depth; ++j) {
    const auto& level = base.ladder.level(j);
    const double scale = base.ladder.scale(j);
    for (const auto& f : level.colors)
      if (f.empty()) throw Error(level_failure(j, "empty color class", 0.0, "in", 0.0));
    if (!covers(space, level.flatten())) throw Error(level_failure(j, "covered", 0.0, "!=", 1.0));
    const double m = mesh(space, level) / scale;
    if (m > 1.0 + kScaleSlack) throw Error(level_failure(j, "mesh / r^j", m, ">", 1.0));
    if (!single) {
      const double l = lebesgue(space, level) / scale;
      if (l < options.delta || l == 0.0) {
        std::string msg = level_failure(j, "Lebesgue / r^j", l, "<", options.delta);
        if (mesh(space, level) == 0.0) msg += " (scale below the sampling resolution: members are singletons)";
        throw Error(msg);
      }
    }
    for (std::size_t a = 0; a < level.colors.size(); ++a) {
      Subset u;
      for (const auto& v : level.colors[a]) u = set_union(u, v);
      const double net = covering_radius(space, u) / scale;
      if (net > lambda) throw Error(level_failure(j, "net radius / r^j", net, ">", lambda));
      const double dis = disjointness_radius(space, level.colors[a]) / scale;
      if (dis < options.delta) throw Error(level_failure(j, "color disjointness / r^j", dis, "<", options.delta));
      if (!single)
        for (const auto& v : level.colors[a]) {
          const double inner = inner_radius(space, v) / scale;
          if (inner < options.delta) throw Error(level_failure(j, "inner ball / r^j", inner, "<", options.delta));
        }
    }
  }
  const auto report = verify_base(space, base);
  prov.achieved_delta = std::min({report.achieved.delta, report.achieved.disjointness, report.achieved.inner_ball});
  prov.achieved_lambda = report.achieved.lambda;
  if (!report.passed) throw Error("base sequence failed verification");
  return base;
}

}  // namespace hypembed
