#include "hypembed/separation.hpp"

#include <cmath>
#include <sstream>

#include "hypembed/error.hpp"
#include "hypembed/neighborhood.hpp"

namespace hypembed {

namespace {

struct Tracked {
  std::size_t level;
  Subset current;
  Subset intersection;
};

std::string witness_text(const CheckResult& c) {
  std::ostringstream os;
  os << c.property << " failed (achieved " << c.achieved << ", bound " << c.bound << ")";
  const auto& w = c.worst;
  if (w.level >= 0) os << " at level " << w.level;
  if (w.color >= 0) os << ", color " << w.color;
  if (w.member >= 0) os << ", member " << w.member;
  if (w.other_level >= 0) os << " vs level " << w.other_level << " member " << w.other_member;
  if (w.point >= 0) os << ", point " << w.point;
  if (!w.detail.empty()) os << " (" << w.detail << ")";
  return os.str();
}

}  // namespace

Family ast_shrink(const FiniteMetricSpace& space, const Family& f, const Family& ghat, double s, double delta) {
  if (!(s > 0.0)) throw Error("ast_shrink: s must be positive");
  if (!(delta > 0.0 && delta <= 2.0 / 3.0)) throw Error("ast_shrink: delta must lie in (0, 2/3]");
  if (!ghat.empty()) {
    const double m = mesh(space, ghat);
    if (m > 2.0 * s) {
      std::ostringstream os;
      os << "ast_shrink: mesh(Ghat) = " << m << " exceeds 2s = " << 2.0 * s;
      throw Error(os.str());
    }
    const double sep = disjointness_radius(space, ghat);
    if (sep < delta * s) {
      std::ostringstream os;
      os << "ast_shrink: Ghat is not delta*s-disjoint (radius " << sep << " < " << delta * s << ")";
      throw Error(os.str());
    }
  }
  const double inner = delta * s;
  Family grown_g;
  grown_g.reserve(ghat.size());
  for (const auto& g : ghat) grown_g.push_back(neighborhood(space, g, inner));
  Family out;
  out.reserve(f.size());
  for (const auto& u : f) {
    const Subset core = neighborhood(space, u, -4.0 * s);
    if (core.empty()) {
      out.emplace_back();
      continue;
    }
    const Subset grown_core = neighborhood(space, core, inner);
    Subset v = core;
    for (std::size_t k = 0; k < ghat.size(); ++k)
      if (grown_core.intersects(grown_g[k])) v = set_union(v, ghat[k]);
    out.push_back(neighborhood(space, v, inner));
  }
  return out;
}

void check_standing_assumptions(double r, double delta, double lambda) {
  std::ostringstream os;
  const double tail = 2.0 * r / (1.0 - r);
  if (tail > delta / 4.0) {
    os << "standing assumption violated: 2r/(1-r) = " << tail << " > delta/4 = " << delta / 4.0;
    throw Error(os.str());
  }
  if (delta / 4.0 > 1.0 / 6.0) {
    os << "standing assumption violated: delta/4 = " << delta / 4.0 << " > 1/6";
    throw Error(os.str());
  }
  if ((lambda + 1.0) * r >= delta / 2.0) {
    os << "standing assumption violated: (lambda+1) r = " << (lambda + 1.0) * r << " >= delta/2 = " << delta / 2.0;
    throw Error(os.str());
  }
}

std::vector<GammaTraceEntry> gamma_recursion(double r, double delta, std::size_t depth) {
  std::vector<GammaTraceEntry> trace;
  for (std::size_t j = 1; j <= depth; ++j) {
    double g = delta / 2.0;
    trace.push_back({j, j, g});
    for (std::size_t k = j + 1; k <= depth; ++k) {
      g -= 2.0 * std::pow(r, static_cast<double>(k - j));
      trace.push_back({k, j, g});
    }
  }
  return trace;
}

CharSequence separate(const FiniteMetricSpace& space, const BaseSequence& base, const SeparationOptions& options) {
  const auto& in = base.ladder;
  const double r = in.r;
  const double delta = base.delta;
  const std::size_t depth = in.depth();
  if (depth == 0) throw Error("separate: empty base sequence");
  if (options.enforce_standing_assumptions) check_standing_assumptions(r, delta, base.lambda);

  CharSequence out;
  out.ladder.r = r;
  out.ladder.color_count = in.color_count;
  out.ladder.levels.resize(depth);
  for (std::size_t j = 1; j <= depth; ++j) {
    out.ladder.levels[j - 1].scale = in.scale(j);
    out.ladder.levels[j - 1].colors.resize(in.color_count);
  }

  std::size_t dropped = 0;
  for (std::size_t a = 0; a < in.color_count; ++a) {
    std::vector<Tracked> members;
    for (const auto& u : in.members(1, a)) members.push_back({1, u, u});
    for (std::size_t k = 1; k < depth; ++k) {
      const double s = in.scale(k + 1) / 2.0;
      const Family& ghat = in.members(k + 1, a);
      Family current;
      current.reserve(members.size());
      for (const auto& t : members) current.push_back(t.current);
      Family next = ast_shrink(space, current, ghat, s, delta);
      for (std::size_t i = 0; i < members.size(); ++i) {
        members[i].intersection = set_intersection(members[i].intersection, next[i]);
        members[i].current = std::move(next[i]);
      }
      for (const auto& g : ghat) members.push_back({k + 1, g, g});
    }
    for (auto& t : members) {
      if (t.intersection.empty()) {
        ++dropped;
        continue;
      }
      out.ladder.levels[t.level - 1].colors[a].push_back(std::move(t.intersection));
    }
  }

  out.delta = delta / 2.0;
  out.gamma = delta / 4.0;
  out.lambda = base.lambda + 1.0;
  out.base_delta = delta;
  out.base_lambda = base.lambda;
  out.provenance = base.provenance;
  if (!options.enforce_standing_assumptions) out.provenance.notes.push_back("standing assumptions not enforced");
  if (dropped > 0) out.provenance.notes.push_back("dropped " + std::to_string(dropped) + " empty members");
  out.gamma_trace = gamma_recursion(r, delta, depth);
  for (std::size_t j = 1; j <= depth; ++j) {
    double sum = 0.0;
    for (std::size_t k = j; k < depth; ++k) sum += 2.0 * std::pow(r, static_cast<double>(k + 1));
    out.shrink_budget.push_back({j, sum, 2.0 * std::pow(r, static_cast<double>(j + 1)) / (1.0 - r)});
  }

  if (options.require_verification) {
    const auto report = verify_char_seq(space, out);
    if (!report.passed)
      for (const auto& c : report.checks)
        if (!c.passed) throw Error("separated sequence failed verification: " + witness_text(c));
  }
  return out;
}

}  // namespace hypembed
