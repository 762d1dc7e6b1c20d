#pragma once

#include <cstddef>
#include <vector>

#include "hypembed/metric_space.hpp"

namespace hypembed {

/// Ordered list of subsets. Identity is positional, so duplicate sets stay
/// distinct members (net padding relies on this).
using Family = std::vector<Subset>;

/// Families indexed by color 0..m-1 at one nominal scale.
struct ColoredCovering {
  std::vector<Family> colors;
  double scale = 0.0;

  std::size_t color_count() const noexcept { return colors.size(); }
  std::size_t member_count() const noexcept;
  /// All members, color by color.
  Family flatten() const;
};

bool covers(const FiniteMetricSpace& space, const Family& family);

/// Throws unless `c` has a color, nonempty members and covers the space.
void validate_covering(const FiniteMetricSpace& space, const ColoredCovering& c);

/// sup of member diameters; throws on an empty family.
double mesh(const FiniteMetricSpace& space, const Family& family);
double mesh(const FiniteMetricSpace& space, const ColoredCovering& c);

/// Max over points of the number of members containing the point.
std::size_t multiplicity(const FiniteMetricSpace& space, const Family& family);

/// Multiplicity of the open r-neighborhoods of the members; r > 0.
std::size_t r_multiplicity(const FiniteMetricSpace& space, const Family& family, double r);

/// m_r(F) <= 1; the empty family is r-disjoint.
bool is_r_disjoint(const FiniteMetricSpace& space, const Family& family, double r);

/// Largest r for which the family is r-disjoint: min over member pairs of
/// min_z max(dist(z,U), dist(z,U')). +infinity for fewer than two members.
double disjointness_radius(const FiniteMetricSpace& space, const Family& family);

/// dist(z, Z \ U); +infinity when U = Z.
double depth_in(const FiniteMetricSpace& space, PointIndex z, const Subset& u);

/// Largest radius of a ball centered in U and contained in U.
double inner_radius(const FiniteMetricSpace& space, const Subset& u);

/// L(C,z) = min(sup_U dist(z, Z \ U), mesh(C)).
double lebesgue_at(const FiniteMetricSpace& space, const ColoredCovering& c, PointIndex z);

/// L(C) = min_z L(C,z).
double lebesgue(const FiniteMetricSpace& space, const ColoredCovering& c);

/// L/mesh in [0,1]; 1 when the mesh is 0.
double capacity(const FiniteMetricSpace& space, const ColoredCovering& c);

/// Memberwise B_{-s}, dropping members that become empty. Requires
/// 0 < s < L(C); throws "shrink exceeds Lebesgue number" otherwise.
ColoredCovering shrink(const FiniteMetricSpace& space, const ColoredCovering& c, double s);

/// F *_s G: member i becomes B_s(F_i union {G_k : B_s(F_i) meets B_s(G_k)}).
Family star_merge(const FiniteMetricSpace& space, const Family& f, const Family& g, double s);

}  // namespace hypembed
