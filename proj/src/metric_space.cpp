#include "hypembed/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

#include "hypembed/error.hpp"

namespace hypembed {

Subset::Subset(std::initializer_list<PointIndex> points) : Subset(std::vector<PointIndex>(points)) {}

Subset::Subset(std::vector<PointIndex> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

Subset Subset::from_sorted(std::vector<PointIndex> points) {
  Subset s;
  s.points_ = std::move(points);
  return s;
}

bool Subset::contains(PointIndex p) const { return std::binary_search(points_.begin(), points_.end(), p); }

bool Subset::is_subset_of(const Subset& other) const {
  return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

bool Subset::intersects(const Subset& other) const {
  auto a = points_.begin();
  auto b = other.points_.begin();
  while (a != points_.end() && b != other.points_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

Subset set_union(const Subset& a, const Subset& b) {
  std::vector<PointIndex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.points_.begin(), a.points_.end(), b.points_.begin(), b.points_.end(), std::back_inserter(out));
  return Subset::from_sorted(std::move(out));
}

Subset set_intersection(const Subset& a, const Subset& b) {
  std::vector<PointIndex> out;
  std::set_intersection(a.points_.begin(), a.points_.end(), b.points_.begin(), b.points_.end(),
                        std::back_inserter(out));
  return Subset::from_sorted(std::move(out));
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> ids, std::vector<double> table,
                                     Validation validation, double relative_tolerance)
    : ids_(std::move(ids)), table_(std::move(table)) {
  const std::size_t n = ids_.size();
  if (n == 0) throw Error("metric space needs at least one point");
  if (table_.size() != n * n) throw Error("distance table size does not match point count");
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(ids_[i], static_cast<PointIndex>(i)).second)
      throw Error("duplicate point id '" + ids_[i] + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i * n + i] != 0.0) throw Error("nonzero self-distance at '" + ids_[i] + "'");
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = table_[i * n + j];
      if (!std::isfinite(d) || d < 0.0) throw Error("distance must be finite and nonnegative");
      if (d != table_[j * n + i]) throw Error("distance table is not symmetric");
      if (d == 0.0) throw Error("distinct points '" + ids_[i] + "' and '" + ids_[j] + "' at distance 0");
      diameter_ = std::max(diameter_, d);
    }
  }
  if (validation == Validation::full) {
    const double excess = worst_triangle_violation();
    if (excess > relative_tolerance) {
      std::ostringstream msg;
      msg << "triangle inequality violated (relative excess " << excess << ")";
      throw Error(msg.str());
    }
  }
}

PointIndex FiniteMetricSpace::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error("unknown point id '" + id + "'");
  return it->second;
}

double FiniteMetricSpace::eccentricity(PointIndex i) const {
  auto r = row(i);
  return *std::max_element(r.begin(), r.end());
}

Subset FiniteMetricSpace::all_points() const {
  std::vector<PointIndex> pts(size());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<PointIndex>(i);
  return Subset::from_sorted(std::move(pts));
}

double FiniteMetricSpace::worst_triangle_violation() const {
  const std::size_t n = size();
  if (n < 3 || diameter_ == 0.0) return 0.0;
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double* dj = table_.data() + j * n;
    for (std::size_t i = 0; i < n; ++i) {
      const double* di = table_.data() + i * n;
      const double dij = dj[i];
      for (std::size_t k = i + 1; k < n; ++k) worst = std::max(worst, di[k] - dij - dj[k]);
    }
  }
  return worst / diameter_;
}

}  // namespace hypembed
