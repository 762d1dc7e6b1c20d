#pragma once
// Seeded random spaces and subsets for the property suites.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hypembed/coverings.hpp"
#include "hypembed/metric_space.hpp"

namespace rnd {

using hypembed::FiniteMetricSpace;
using hypembed::PointIndex;
using hypembed::Subset;

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(g() >> 11) * 0x1.0p-53);
}

inline std::size_t below(std::mt19937_64& g, std::size_t n) { return static_cast<std::size_t>(g() % n); }

inline std::vector<std::string> ids(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

// Points in the unit square (Euclidean) or on a weighted random graph
// (shortest paths), alternating by a coin flip.
inline FiniteMetricSpace space(std::mt19937_64& g, std::size_t n) {
  if (g() & 1U) {
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = uniform(g, 0, 1);
      y[i] = uniform(g, 0, 1);
    }
    return FiniteMetricSpace::from_function(
        ids(n), [&](std::size_t i, std::size_t k) { return std::hypot(x[i] - x[k], y[i] - y[k]) + 1e-9; },
        FiniteMetricSpace::Validation::structural);
  }
  // Integer-weighted graph; Floyd-Warshall keeps distances exact.
  const double inf = 1e18;
  std::vector<double> d(n * n, inf);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t p = below(g, i);
    const double w = 1.0 + static_cast<double>(below(g, 5));
    d[i * n + p] = d[p * n + i] = w;
  }
  for (std::size_t e = 0; e < n; ++e) {
    const std::size_t a = below(g, n), b = below(g, n);
    if (a == b) continue;
    const double w = 1.0 + static_cast<double>(below(g, 5));
    d[a * n + b] = d[b * n + a] = std::min(d[a * n + b], w);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  return FiniteMetricSpace(ids(n), d, FiniteMetricSpace::Validation::structural);
}

inline Subset subset(std::mt19937_64& g, std::size_t n, double density) {
  std::vector<PointIndex> pts;
  for (std::size_t i = 0; i < n; ++i)
    if (uniform(g, 0, 1) < density) pts.push_back(static_cast<PointIndex>(i));
  return Subset(std::move(pts));
}

// Random open-ball covering: balls of radius rho around random centers,
// then singleton patches for anything missed.
inline hypembed::ColoredCovering ball_covering(std::mt19937_64& g, const FiniteMetricSpace& z, double rho,
                                               std::size_t colors) {
  hypembed::ColoredCovering c;
  c.colors.assign(colors, {});
  std::vector<char> hit(z.size(), 0);
  std::size_t k = 0;
  for (std::size_t it = 0; it < z.size(); ++it) {
    const auto center = static_cast<PointIndex>(below(g, z.size()));
    std::vector<PointIndex> pts;
    for (PointIndex p = 0; p < z.size(); ++p)
      if (z(center, p) < rho) pts.push_back(p);
    for (auto p : pts) hit[p] = 1;
    c.colors[k++ % colors].emplace_back(std::move(pts));
  }
  for (PointIndex p = 0; p < z.size(); ++p)
    if (!hit[p]) c.colors[k++ % colors].push_back(Subset{p});
  return c;
}

}  // namespace rnd
