#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypembed/metric_space.hpp"

namespace hypembed {

/// Polar coordinates (z, t) in the hyperbolic cone; t = 0 is the vertex
/// whatever z is.
struct ConePoint {
  PointIndex z = 0;
  double t = 0.0;

  bool is_vertex() const noexcept { return t == 0.0; }
};

/// Distance in H^2 between points at radii t, t2 from a common origin with
/// angle `angle` between them (hyperbolic law of cosines, evaluated through
/// sinh^2(d/2) to stay accurate at small distances).
double hyperbolic_distance(double t, double t2, double angle);

/// The cone metric over a bounded space, with angle mu |zz'|,
/// mu = pi / diam Z. A single-point space uses the product metric |t - t'|.
class ConeMetric {
 public:
  explicit ConeMetric(const FiniteMetricSpace& space);

  double mu() const noexcept { return mu_; }
  double angle(PointIndex z, PointIndex z2) const;
  double operator()(const ConePoint& x, const ConePoint& y) const;

  const FiniteMetricSpace& space() const noexcept { return *space_; }

 private:
  const FiniteMetricSpace* space_;
  double mu_ = 0.0;
};

/// |z_j z'_j| on the sphere of radius jR:
/// 2 asinh(sinh(jR) sin(mu |zz'| / 2)).
double sphere_dist(const FiniteMetricSpace& space, PointIndex z, PointIndex z2, std::size_t j, double big_r, double mu);

/// The net X = {o} union Z_1 .. Z_J with Z_j = Z x {jR}, R = ln(1/r).
/// Index 0 is the vertex; index 1 + (j-1)|Z| + z is (z, jR).
class ConeGrid {
 public:
  static constexpr double kMaxRadius = 40.0;

  ConeGrid(const FiniteMetricSpace& space, double r, std::size_t depth);

  std::size_t size() const noexcept { return 1 + depth_ * space_->size(); }
  std::size_t depth() const noexcept { return depth_; }
  double r() const noexcept { return r_; }
  /// R = ln(1/r).
  double big_r() const noexcept { return big_r_; }

  ConePoint point(std::size_t index) const;
  /// Sphere level of a grid point (0 for the vertex).
  std::size_t level(std::size_t index) const;
  /// pi_j: the base point of a non-vertex grid point.
  PointIndex projection(std::size_t index) const;
  std::size_t index_of(PointIndex z, std::size_t level) const;
  /// Grid index of a cone point, if it lies on the grid.
  std::optional<std::size_t> find(const ConePoint& x) const;

  const FiniteMetricSpace& space() const noexcept { return *space_; }
  const ConeMetric& metric() const noexcept { return metric_; }
  double distance(std::size_t a, std::size_t b) const { return metric_(point(a), point(b)); }

 private:
  const FiniteMetricSpace* space_;
  double r_;
  std::size_t depth_;
  double big_r_;
  ConeMetric metric_;
};

}  // namespace hypembed
