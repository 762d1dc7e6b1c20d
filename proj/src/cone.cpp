#include "hypembed/cone.hpp"

#include <cmath>
#include <numbers>

#include "hypembed/error.hpp"

namespace hypembed {

double hyperbolic_distance(double t, double t2, double angle) {
  // cosh d = cosh(t - t2) + 2 sinh t sinh t2 sin^2(angle/2), hence
  // sinh^2(d/2) = sinh^2((t - t2)/2) + sinh t sinh t2 sin^2(angle/2).
  const double radial = std::sinh((t - t2) / 2.0);
  const double half = std::sin(angle / 2.0);
  const double s2 = radial * radial + std::sinh(t) * std::sinh(t2) * half * half;
  return 2.0 * std::asinh(std::sqrt(s2));
}

ConeMetric::ConeMetric(const FiniteMetricSpace& space) : space_(&space) {
  if (space.diameter() > 0.0) mu_ = std::numbers::pi / space.diameter();
}

double ConeMetric::angle(PointIndex z, PointIndex z2) const {
  return std::min(mu_ * (*space_)(z, z2), std::numbers::pi);
}

double ConeMetric::operator()(const ConePoint& x, const ConePoint& y) const {
  if (x.is_vertex() || y.is_vertex() || mu_ == 0.0 || x.z == y.z) return std::abs(x.t - y.t);
  return hyperbolic_distance(x.t, y.t, angle(x.z, y.z));
}

double sphere_dist(const FiniteMetricSpace& space, PointIndex z, PointIndex z2, std::size_t j, double big_r, double mu) {
  if (j == 0) throw Error("sphere_dist needs j >= 1");
  const double tau = std::min(mu * space(z, z2), std::numbers::pi);
  return 2.0 * std::asinh(std::sinh(static_cast<double>(j) * big_r) * std::sin(tau / 2.0));
}

ConeGrid::ConeGrid(const FiniteMetricSpace& space, double r, std::size_t depth)
    : space_(&space), r_(r), depth_(depth), big_r_(0.0), metric_(space) {
  if (!(r > 0.0 && r < 1.0)) throw Error("grid parameter r must lie in (0,1)");
  if (space.diameter() > 0.0 && r >= space.diameter()) throw Error("grid parameter r must be below diam Z");
  big_r_ = std::log(1.0 / r);
  if (static_cast<double>(depth) * big_r_ > kMaxRadius)
    throw Error("grid radius J ln(1/r) exceeds 40; distances would lose double precision");
}

ConePoint ConeGrid::point(std::size_t index) const {
  if (index >= size()) throw Error("grid index out of range");
  if (index == 0) return {};
  const std::size_t n = space_->size();
  return {static_cast<PointIndex>((index - 1) % n), static_cast<double>((index - 1) / n + 1) * big_r_};
}

std::size_t ConeGrid::level(std::size_t index) const {
  if (index >= size()) throw Error("grid index out of range");
  return index == 0 ? 0 : (index - 1) / space_->size() + 1;
}

PointIndex ConeGrid::projection(std::size_t index) const {
  if (index == 0) throw Error("the cone vertex has no projection");
  return point(index).z;
}

std::size_t ConeGrid::index_of(PointIndex z, std::size_t level) const {
  if (level == 0) return 0;
  if (level > depth_ || z >= space_->size()) throw Error("point is not on the grid");
  return 1 + (level - 1) * space_->size() + z;
}

std::optional<std::size_t> ConeGrid::find(const ConePoint& x) const {
  if (x.is_vertex()) return 0;
  if (x.z >= space_->size()) return std::nullopt;
  const double k = x.t / big_r_;
  const double j = std::round(k);
  if (j < 1.0 || j > static_cast<double>(depth_) || std::abs(k - j) > 1e-12 * std::max(1.0, j)) return std::nullopt;
  return index_of(x.z, static_cast<std::size_t>(j));
}

}  // namespace hypembed
