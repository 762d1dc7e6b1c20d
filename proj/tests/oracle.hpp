#pragma once
// Reference implementations written straight from the definitions, with
// no shared code paths with the library beyond the distance table.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "hypembed/metric_space.hpp"

namespace oracle {

using hypembed::FiniteMetricSpace;
using hypembed::PointIndex;
using Set = std::set<PointIndex>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline Set to_set(const hypembed::Subset& s) { return Set(s.begin(), s.end()); }
inline hypembed::Subset to_subset(const Set& s) { return hypembed::Subset(std::vector<PointIndex>(s.begin(), s.end())); }

inline double dist_point_set(const FiniteMetricSpace& z, PointIndex p, const Set& u) {
  double d = kInf;
  for (PointIndex q : u) d = std::min(d, z(p, q));
  return d;
}

inline Set complement(const FiniteMetricSpace& z, const Set& u) {
  Set out;
  for (PointIndex p = 0; p < z.size(); ++p)
    if (!u.count(p)) out.insert(p);
  return out;
}

// B_r(U) for every real r, by the definition.
inline Set ball(const FiniteMetricSpace& z, const Set& u, double r) {
  if (r == 0.0) return u;
  Set out;
  if (r > 0.0) {
    for (PointIndex p = 0; p < z.size(); ++p)
      if (dist_point_set(z, p, u) < r) out.insert(p);
    return out;
  }
  const Set c = complement(z, u);
  for (PointIndex p = 0; p < z.size(); ++p)
    if (!(dist_point_set(z, p, c) <= -r)) out.insert(p);
  return out;
}

inline bool subset_of(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline bool meets(const Set& a, const Set& b) {
  for (PointIndex p : a)
    if (b.count(p)) return true;
  return false;
}

inline double diam(const FiniteMetricSpace& z, const Set& u) {
  double d = 0.0;
  for (PointIndex a : u)
    for (PointIndex b : u) d = std::max(d, z(a, b));
  return d;
}

inline double mesh(const FiniteMetricSpace& z, const std::vector<Set>& f) {
  double m = 0.0;
  for (const auto& u : f) m = std::max(m, diam(z, u));
  return m;
}

// Largest number of members sharing a point.
inline std::size_t multiplicity(const FiniteMetricSpace& z, const std::vector<Set>& f) {
  std::size_t best = 0;
  for (PointIndex p = 0; p < z.size(); ++p) {
    std::size_t k = 0;
    for (const auto& u : f) k += u.count(p);
    best = std::max(best, k);
  }
  return best;
}

inline std::size_t r_multiplicity(const FiniteMetricSpace& z, const std::vector<Set>& f, double r) {
  std::vector<Set> grown;
  for (const auto& u : f) grown.push_back(ball(z, u, r));
  return multiplicity(z, grown);
}

// L(U) = inf_z min(sup_U dist(z, Z \ U), mesh).
inline double lebesgue(const FiniteMetricSpace& z, const std::vector<Set>& f) {
  const double m = mesh(z, f);
  double worst = kInf;
  for (PointIndex p = 0; p < z.size(); ++p) {
    double best = 0.0;
    for (const auto& u : f) {
      if (!u.count(p)) continue;
      best = std::max(best, dist_point_set(z, p, complement(z, u)));
    }
    worst = std::min(worst, std::min(best, m));
  }
  return worst;
}

inline bool covers(const FiniteMetricSpace& z, const std::vector<Set>& f) {
  Set all;
  for (const auto& u : f) all.insert(u.begin(), u.end());
  return all.size() == z.size();
}

// sinh-free hyperboloid model: points (cosh t, sinh t cos a, sinh t sin a).
inline long double hyperboloid_distance(long double t, long double a, long double t2, long double a2) {
  const long double x0 = std::cosh(t), x1 = std::sinh(t) * std::cos(a), x2 = std::sinh(t) * std::sin(a);
  const long double y0 = std::cosh(t2), y1 = std::sinh(t2) * std::cos(a2), y2 = std::sinh(t2) * std::sin(a2);
  const long double inner = x0 * y0 - x1 * y1 - x2 * y2;
  return std::acosh(std::max(inner, 1.0L));
}

// Path lengths in an undirected graph given by adjacency lists.
inline std::vector<std::vector<int>> bfs_all(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (auto w : adj[v])
        if (d[s][w] < 0) {
          d[s][w] = d[s][v] + 1;
          q.push(w);
        }
    }
  }
  return d;
}

// Four-point scan of delta w.r.t. base o, by the definition, no doubling.
template <class D>
double delta_brute(std::size_t n, D&& d, std::size_t o) {
  auto gp = [&](std::size_t x, std::size_t y) { return 0.5 * (double(d(x, o)) + double(d(y, o)) - double(d(x, y))); };
  double worst = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t w = 0; w < n; ++w) worst = std::max(worst, std::min(gp(x, y), gp(y, w)) - gp(x, w));
  return worst;
}

}  // namespace oracle
