#include "hypembed/char_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hypembed/neighborhood.hpp"

namespace hypembed {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Subset color_union(const Family& f) {
  Subset u;
  for (const auto& m : f) u = set_union(u, m);
  return u;
}

std::string describe(const char* what, double value) {
  std::ostringstream os;
  os << what << " " << value;
  return os.str();
}

CheckResult check_covering(const FiniteMetricSpace& space, const CoveringLadder& ladder) {
  CheckResult res{"covering", true, 1.0, 1.0, {}};
  for (std::size_t j = 1; j <= ladder.depth(); ++j) {
    const auto& level = ladder.level(j);
    Witness w;
    w.level = static_cast<long>(j);
    if (level.color_count() != ladder.color_count) {
      w.detail = "color count differs from ladder";
    } else {
      for (std::size_t a = 0; a < level.colors.size() && w.detail.empty(); ++a)
        for (std::size_t i = 0; i < level.colors[a].size(); ++i)
          if (level.colors[a][i].empty()) {
            w.color = static_cast<long>(a);
            w.member = static_cast<long>(i);
            w.detail = "empty member";
            break;
          }
      if (w.detail.empty() && !covers(space, level.flatten())) {
        std::vector<char> hit(space.size(), 0);
        for (const auto& u : level.flatten())
          for (PointIndex p : u) hit[p] = 1;
        w.point = std::find(hit.begin(), hit.end(), 0) - hit.begin();
        w.detail = "point not covered";
      }
    }
    if (!w.detail.empty()) {
      res.passed = false;
      res.achieved = 0.0;
      res.worst = w;
      return res;
    }
  }
  return res;
}

CheckResult check_mesh(const FiniteMetricSpace& space, const CoveringLadder& ladder) {
  CheckResult res{"mesh", true, 0.0, 1.0, {}};
  for (std::size_t j = 1; j <= ladder.depth(); ++j) {
    const auto& level = ladder.level(j);
    for (std::size_t a = 0; a < level.colors.size(); ++a)
      for (std::size_t i = 0; i < level.colors[a].size(); ++i) {
        const auto& u = level.colors[a][i];
        if (u.empty()) continue;
        const double ratio = diameter(space, u) / ladder.scale(j);
        if (ratio > res.achieved) {
          res.achieved = ratio;
          res.worst = Witness{static_cast<long>(j), static_cast<long>(a), static_cast<long>(i), -1, -1, -1,
                              describe("diameter / r^j =", ratio)};
        }
      }
  }
  res.passed = res.achieved <= 1.0 + kScaleSlack;
  return res;
}

CheckResult check_lebesgue(const FiniteMetricSpace& space, const CoveringLadder& ladder, double delta) {
  CheckResult res{"lebesgue", true, kInf, delta, {}};
  if (space.size() == 1) {
    res.achieved = 1.0;
    res.worst.detail = "single-point space: vacuous";
    return res;
  }
  for (std::size_t j = 1; j <= ladder.depth(); ++j) {
    const auto& level = ladder.level(j);
    const Family flat = level.flatten();
    if (flat.empty() || !covers(space, flat)) {
      res.achieved = 0.0;
      res.worst = Witness{static_cast<long>(j), -1, -1, -1, -1, -1, "level is not a covering"};
      break;
    }
    const double ratio = lebesgue(space, level) / ladder.scale(j);
    if (ratio < res.achieved) {
      res.achieved = ratio;
      res.worst = Witness{static_cast<long>(j), -1, -1, -1, -1, -1, describe("L(U_j) / r^j =", ratio)};
    }
  }
  if (ladder.depth() == 0) res.achieved = 1.0;
  res.passed = res.achieved >= delta && res.achieved > 0.0;
  return res;
}

CheckResult check_net(const FiniteMetricSpace& space, const CoveringLadder& ladder, double lambda) {
  CheckResult res{"net", true, 0.0, lambda, {}};
  for (std::size_t j = 1; j <= ladder.depth(); ++j)
    for (std::size_t a = 0; a < ladder.color_count; ++a) {
      const Subset u = color_union(ladder.members(j, a));
      double radius = kInf;
      long far_point = -1;
      if (!u.empty()) {
        const auto field = distance_field(space, u);
        auto it = std::max_element(field.begin(), field.end());
        radius = *it;
        far_point = it - field.begin();
      }
      const double ratio = radius / ladder.scale(j);
      if (ratio > res.achieved) {
        res.achieved = ratio;
        res.worst = Witness{static_cast<long>(j), static_cast<long>(a), -1, -1, -1, far_point,
                            describe("net radius / r^j =", ratio)};
      }
    }
  res.passed = res.achieved <= lambda;
  return res;
}

CheckResult check_disjointness(const FiniteMetricSpace& space, const CoveringLadder& ladder, double delta) {
  CheckResult res{"disjointness", true, kInf, delta, {}};
  for (std::size_t j = 1; j <= ladder.depth(); ++j)
    for (std::size_t a = 0; a < ladder.color_count; ++a) {
      const double ratio = disjointness_radius(space, ladder.members(j, a)) / ladder.scale(j);
      if (ratio < res.achieved) {
        res.achieved = ratio;
        res.worst = Witness{static_cast<long>(j), static_cast<long>(a), -1, -1, -1, -1,
                            describe("disjointness radius / r^j =", ratio)};
      }
    }
  res.passed = res.achieved >= delta;
  return res;
}

CheckResult check_inner_ball(const FiniteMetricSpace& space, const CoveringLadder& ladder, double delta) {
  CheckResult res{"inner_ball", true, kInf, delta, {}};
  if (space.size() == 1) {
    res.achieved = 1.0;
    res.worst.detail = "single-point space: vacuous";
    return res;
  }
  for (std::size_t j = 1; j <= ladder.depth(); ++j)
    for (std::size_t a = 0; a < ladder.color_count; ++a) {
      const auto& fam = ladder.members(j, a);
      for (std::size_t i = 0; i < fam.size(); ++i) {
        const double ratio = inner_radius(space, fam[i]) / ladder.scale(j);
        if (ratio < res.achieved) {
          res.achieved = ratio;
          res.worst = Witness{static_cast<long>(j), static_cast<long>(a), static_cast<long>(i), -1, -1, -1,
                              describe("inner radius / r^j =", ratio)};
        }
      }
    }
  res.passed = res.achieved >= delta;
  return res;
}

void finish(PropertyReport& report) {
  report.passed = std::all_of(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return c.passed; });
  for (const auto& c : report.checks) {
    if (c.property == "lebesgue") report.achieved.delta = c.achieved;
    if (c.property == "net") report.achieved.lambda = c.achieved;
    if (c.property == "mesh") report.achieved.mesh_ratio = c.achieved;
    if (c.property == "separation") report.achieved.gamma = c.achieved;
    if (c.property == "disjointness") report.achieved.disjointness = c.achieved;
    if (c.property == "inner_ball") report.achieved.inner_ball = c.achieved;
  }
}

}  // namespace

double CoveringLadder::scale(std::size_t j) const { return std::pow(r, static_cast<double>(j)); }

const CheckResult* PropertyReport::find(const std::string& property) const {
  for (const auto& c : checks)
    if (c.property == property) return &c;
  return nullptr;
}

double separation_coefficient(const FiniteMetricSpace& space, const CoveringLadder& ladder, Witness* worst) {
  const std::size_t n = space.size();
  const std::size_t depth = ladder.depth();
  double best = 1.0;
  Witness worst_w;
  auto note = [&](double ratio, Witness w) {
    if (ratio < best) {
      best = ratio;
      worst_w = std::move(w);
    }
  };

  for (std::size_t a = 0; a < ladder.color_count; ++a) {
    // point -> members containing it, per level
    std::vector<std::vector<std::vector<std::uint32_t>>> index(depth + 1);
    for (std::size_t j = 1; j <= depth; ++j) {
      index[j].assign(n, {});
      const auto& fam = ladder.members(j, a);
      for (std::size_t i = 0; i < fam.size(); ++i)
        for (PointIndex p : fam[i]) index[j][p].push_back(static_cast<std::uint32_t>(i));
    }
    // exist[j'][i'][j]: best inner margin of a level-j member inside U'
    std::vector<std::vector<std::vector<double>>> exist(depth + 1);
    for (std::size_t jp = 1; jp <= depth; ++jp)
      exist[jp].assign(ladder.members(jp, a).size(), std::vector<double>(depth + 1, -1.0));

    std::size_t widest = 0;
    for (std::size_t j = 1; j <= depth; ++j) widest = std::max(widest, ladder.members(j, a).size());
    std::vector<std::size_t> stamp(widest, 0);  // indexed by member
    std::vector<char> in_other(n, 0);
    std::size_t stamp_id = 0;
    for (std::size_t j = 1; j <= depth; ++j) {
      const double cap = ladder.scale(j);
      const auto& fam = ladder.members(j, a);
      for (std::size_t i = 0; i < fam.size(); ++i) {
        const Subset& u = fam[i];
        if (u.empty()) continue;
        const auto field = distance_field(space, u);
        for (std::size_t jp = 1; jp <= j; ++jp) {
          const auto& other = ladder.members(jp, a);
          std::vector<std::uint32_t> candidates;
          ++stamp_id;
          for (std::size_t z = 0; z < n; ++z) {
            if (field[z] >= cap) continue;
            for (std::uint32_t c : index[jp][z])
              if (stamp[c] != stamp_id) {
                stamp[c] = stamp_id;
                candidates.push_back(c);
              }
          }
          std::sort(candidates.begin(), candidates.end());
          for (std::uint32_t c : candidates) {
            if (jp == j && c == i) continue;
            const Subset& v = other[c];
            double bound = 0.0;
            const bool nested = u.is_subset_of(v);
            if (!u.intersects(v)) {
              bound = kInf;
              for (PointIndex p : v) bound = std::min(bound, field[p]);
            } else if (nested) {
              for (PointIndex p : v) in_other[p] = 1;
              bound = kInf;
              for (std::size_t z = 0; z < n; ++z)
                if (!in_other[z]) bound = std::min(bound, field[z]);
              for (PointIndex p : v) in_other[p] = 0;
            }
            const double ratio = std::min(bound, cap) / cap;
            note(ratio, Witness{static_cast<long>(j), static_cast<long>(a), static_cast<long>(i), static_cast<long>(jp),
                                static_cast<long>(c), -1,
                                bound == 0.0 ? "members overlap without nesting" : describe("margin / r^j =", ratio)});
            if (jp < j && nested) exist[jp][c][j] = std::max(exist[jp][c][j], ratio);
          }
        }
      }
    }
    for (std::size_t jp = 1; jp <= depth; ++jp)
      for (std::size_t c = 0; c < exist[jp].size(); ++c) {
        if (ladder.members(jp, a)[c].empty()) continue;
        for (std::size_t j = jp + 1; j <= depth; ++j) {
          const double ratio = std::max(exist[jp][c][j], 0.0);
          note(ratio, Witness{static_cast<long>(j), static_cast<long>(a), -1, static_cast<long>(jp), static_cast<long>(c),
                              -1,
                              ratio == 0.0 ? "no finer member nested inside"
                                           : describe("finest nested margin / r^j =", ratio)});
        }
      }
  }
  if (worst) *worst = worst_w;
  return best;
}

PropertyReport verify_char_seq(const FiniteMetricSpace& space, const CharSequence& seq) {
  PropertyReport report;
  report.declared_delta = seq.delta;
  report.declared_gamma = seq.gamma;
  report.declared_lambda = seq.lambda;
  const auto& ladder = seq.ladder;
  report.checks.push_back(check_covering(space, ladder));
  report.checks.push_back(check_mesh(space, ladder));
  report.checks.push_back(check_lebesgue(space, ladder, seq.delta));
  report.checks.push_back(check_net(space, ladder, seq.lambda));
  CheckResult sep{"separation", true, 0.0, seq.gamma, {}};
  sep.achieved = separation_coefficient(space, ladder, &sep.worst);
  sep.passed = sep.achieved >= seq.gamma && sep.achieved > 0.0;
  report.checks.push_back(std::move(sep));
  if (space.size() == 1) report.notes.push_back("single-point space: Lebesgue condition is vacuous");
  finish(report);
  return report;
}

PropertyReport verify_base(const FiniteMetricSpace& space, const BaseSequence& base) {
  PropertyReport report;
  report.declared_delta = base.delta;
  report.declared_lambda = base.lambda;
  const auto& ladder = base.ladder;
  report.checks.push_back(check_covering(space, ladder));
  report.checks.push_back(check_mesh(space, ladder));
  report.checks.push_back(check_lebesgue(space, ladder, base.delta));
  report.checks.push_back(check_net(space, ladder, base.lambda));
  report.checks.push_back(check_disjointness(space, ladder, base.delta));
  report.checks.push_back(check_inner_ball(space, ladder, base.delta));
  finish(report);
  return report;
}

}  // namespace hypembed
