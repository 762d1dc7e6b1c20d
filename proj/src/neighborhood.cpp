#include "hypembed/neighborhood.hpp"

#include <algorithm>
#include <limits>

#include "hypembed/error.hpp"

namespace hypembed {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Subset filter_points(const FiniteMetricSpace& space, const std::vector<double>& field, auto keep) {
  std::vector<PointIndex> out;
  for (std::size_t z = 0; z < space.size(); ++z)
    if (keep(field[z])) out.push_back(static_cast<PointIndex>(z));
  return Subset::from_sorted(std::move(out));
}

}  // namespace

double diameter(const FiniteMetricSpace& space, const Subset& u) {
  if (u.empty()) throw Error("empty subset");
  double d = 0.0;
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = a + 1; b < u.size(); ++b) d = std::max(d, space(u[a], u[b]));
  return d;
}

double dist_to_set(const FiniteMetricSpace& space, PointIndex z, const Subset& u) {
  auto row = space.row(z);
  double d = kInf;
  for (PointIndex p : u) d = std::min(d, row[p]);
  return d;
}

std::vector<double> distance_field(const FiniteMetricSpace& space, const Subset& u) {
  std::vector<double> field(space.size(), kInf);
  for (PointIndex p : u) {
    auto row = space.row(p);
    for (std::size_t z = 0; z < field.size(); ++z) field[z] = std::min(field[z], row[z]);
  }
  return field;
}

double dist_sets(const FiniteMetricSpace& space, const Subset& u, const Subset& v) {
  if (u.empty() || v.empty()) throw Error("empty subset");
  double d = kInf;
  for (PointIndex p : u) d = std::min(d, dist_to_set(space, p, v));
  return d;
}

Subset complement(const FiniteMetricSpace& space, const Subset& u) {
  std::vector<PointIndex> out;
  out.reserve(space.size() - u.size());
  auto it = u.begin();
  for (std::size_t z = 0; z < space.size(); ++z) {
    if (it != u.end() && *it == z) {
      ++it;
      continue;
    }
    out.push_back(static_cast<PointIndex>(z));
  }
  return Subset::from_sorted(std::move(out));
}

Subset neighborhood(const FiniteMetricSpace& space, const Subset& u, double r) {
  if (r == 0.0) return u;
  if (r > 0.0) return filter_points(space, distance_field(space, u), [r](double d) { return d < r; });
  // Points farther than |r| from the complement; the empty complement is
  // infinitely far away, so B_r(Z) = Z.
  const auto field = distance_field(space, complement(space, u));
  const double s = -r;
  return filter_points(space, field, [s](double d) { return d > s; });
}

Subset closed_neighborhood(const FiniteMetricSpace& space, const Subset& u, double r) {
  if (u.empty()) throw Error("empty subset");
  if (r < 0.0) throw Error("closed neighborhood radius must be nonnegative");
  return filter_points(space, distance_field(space, u), [r](double d) { return d <= r; });
}

double covering_radius(const FiniteMetricSpace& space, const Subset& x) {
  const auto field = distance_field(space, x);
  return *std::max_element(field.begin(), field.end());
}

bool is_lambda_net(const FiniteMetricSpace& space, const Subset& x, double lambda) {
  return covering_radius(space, x) <= lambda;
}

}  // namespace hypembed
