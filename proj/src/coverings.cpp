#include "hypembed/coverings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypembed/error.hpp"
#include "hypembed/neighborhood.hpp"

namespace hypembed {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// dist(z, Z \ U) for every z in U, in member order.
std::vector<double> depths(const FiniteMetricSpace& space, const Subset& u) {
  std::vector<double> out(u.size(), kInf);
  if (u.size() == space.size()) return out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto row = space.row(u[i]);
    double d = kInf;
    auto it = u.begin();
    for (std::size_t z = 0; z < space.size(); ++z) {
      if (it != u.end() && *it == z) {
        ++it;
        continue;
      }
      d = std::min(d, row[z]);
    }
    out[i] = d;
  }
  return out;
}

std::size_t max_count(std::size_t n, const Family& family) {
  std::vector<std::size_t> count(n, 0);
  for (const auto& u : family)
    for (PointIndex p : u) ++count[p];
  return family.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

}  // namespace

std::size_t ColoredCovering::member_count() const noexcept {
  std::size_t n = 0;
  for (const auto& f : colors) n += f.size();
  return n;
}

Family ColoredCovering::flatten() const {
  Family out;
  out.reserve(member_count());
  for (const auto& f : colors) out.insert(out.end(), f.begin(), f.end());
  return out;
}

bool covers(const FiniteMetricSpace& space, const Family& family) {
  std::vector<char> hit(space.size(), 0);
  for (const auto& u : family)
    for (PointIndex p : u) hit[p] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

void validate_covering(const FiniteMetricSpace& space, const ColoredCovering& c) {
  if (c.colors.empty()) throw Error("covering needs at least one color");
  for (const auto& f : c.colors)
    for (const auto& u : f) {
      if (u.empty()) throw Error("covering member is empty");
      if (u.points().back() >= space.size()) throw Error("covering member references a foreign point");
    }
  if (!covers(space, c.flatten())) throw Error("family does not cover the space");
}

double mesh(const FiniteMetricSpace& space, const Family& family) {
  if (family.empty()) throw Error("empty family");
  double m = 0.0;
  for (const auto& u : family) m = std::max(m, diameter(space, u));
  return m;
}

double mesh(const FiniteMetricSpace& space, const ColoredCovering& c) { return mesh(space, c.flatten()); }

std::size_t multiplicity(const FiniteMetricSpace& space, const Family& family) {
  return max_count(space.size(), family);
}

std::size_t r_multiplicity(const FiniteMetricSpace& space, const Family& family, double r) {
  if (!(r > 0.0)) throw Error("r-multiplicity needs r > 0");
  Family grown;
  grown.reserve(family.size());
  for (const auto& u : family) grown.push_back(neighborhood(space, u, r));
  return max_count(space.size(), grown);
}

bool is_r_disjoint(const FiniteMetricSpace& space, const Family& family, double r) {
  return family.size() < 2 || r_multiplicity(space, family, r) <= 1;
}

double disjointness_radius(const FiniteMetricSpace& space, const Family& family) {
  std::vector<std::vector<double>> fields;
  fields.reserve(family.size());
  for (const auto& u : family) fields.push_back(distance_field(space, u));
  double best = kInf;
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      // min_z max(f_a, f_b) >= dist(U_a, U_b) / 2, so far pairs cannot win.
      double gap = kInf;
      for (PointIndex p : family[b]) gap = std::min(gap, fields[a][p]);
      if (gap / 2.0 >= best) continue;
      double pair = kInf;
      for (std::size_t z = 0; z < space.size(); ++z) pair = std::min(pair, std::max(fields[a][z], fields[b][z]));
      best = std::min(best, pair);
    }
  }
  return best;
}

double depth_in(const FiniteMetricSpace& space, PointIndex z, const Subset& u) {
  if (!u.contains(z)) return 0.0;
  return dist_to_set(space, z, complement(space, u));
}

double inner_radius(const FiniteMetricSpace& space, const Subset& u) {
  if (u.empty()) return 0.0;
  const auto d = depths(space, u);
  return *std::max_element(d.begin(), d.end());
}

double lebesgue_at(const FiniteMetricSpace& space, const ColoredCovering& c, PointIndex z) {
  double best = 0.0;
  for (const auto& f : c.colors)
    for (const auto& u : f) best = std::max(best, depth_in(space, z, u));
  return std::min(best, mesh(space, c));
}

double lebesgue(const FiniteMetricSpace& space, const ColoredCovering& c) {
  // Members not containing z contribute 0 to the sup, so only the depths
  // of each member's own points matter.
  std::vector<double> best(space.size(), 0.0);
  for (const auto& f : c.colors)
    for (const auto& u : f) {
      const auto d = depths(space, u);
      for (std::size_t i = 0; i < u.size(); ++i) best[u[i]] = std::max(best[u[i]], d[i]);
    }
  const double lprime = *std::min_element(best.begin(), best.end());
  return std::min(lprime, mesh(space, c));
}

double capacity(const FiniteMetricSpace& space, const ColoredCovering& c) {
  const double m = mesh(space, c);
  if (m == 0.0) return 1.0;
  const double l = lebesgue(space, c);
  if (std::isinf(l) && std::isinf(m)) return 1.0;
  return l / m;
}

ColoredCovering shrink(const FiniteMetricSpace& space, const ColoredCovering& c, double s) {
  if (!(s > 0.0)) throw Error("shrink radius must be positive");
  if (s >= lebesgue(space, c)) throw Error("shrink exceeds Lebesgue number");
  ColoredCovering out;
  out.scale = c.scale;
  out.colors.resize(c.colors.size());
  for (std::size_t a = 0; a < c.colors.size(); ++a)
    for (const auto& u : c.colors[a]) {
      Subset v = neighborhood(space, u, -s);
      if (!v.empty()) out.colors[a].push_back(std::move(v));
    }
  if (!covers(space, out.flatten())) throw Error("shrunk family no longer covers the space");
  return out;
}

Family star_merge(const FiniteMetricSpace& space, const Family& f, const Family& g, double s) {
  if (!(s > 0.0)) throw Error("star_merge radius must be positive");
  Family grown_g;
  grown_g.reserve(g.size());
  for (const auto& u : g) grown_g.push_back(neighborhood(space, u, s));
  Family out;
  out.reserve(f.size());
  for (const auto& u : f) {
    const Subset grown_u = neighborhood(space, u, s);
    Subset v = u;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (grown_u.intersects(grown_g[k])) v = set_union(v, g[k]);
    out.push_back(neighborhood(space, v, s));
  }
  return out;
}

}  // namespace hypembed
