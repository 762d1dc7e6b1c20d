#pragma once

#include <vector>

#include "hypembed/metric_space.hpp"

namespace hypembed {

// Signed-radius neighborhood calculus on a finite metric space. All
// queries are exhaustive.

/// Max pairwise distance within `u`; throws "empty subset" when empty.
double diameter(const FiniteMetricSpace& space, const Subset& u);

/// dist(z, U); +infinity when U is empty.
double dist_to_set(const FiniteMetricSpace& space, PointIndex z, const Subset& u);

/// dist(z, U) for every z of the space.
std::vector<double> distance_field(const FiniteMetricSpace& space, const Subset& u);

/// inf over pairs; throws on empty input.
double dist_sets(const FiniteMetricSpace& space, const Subset& u, const Subset& v);

Subset complement(const FiniteMetricSpace& space, const Subset& u);

/// B_r(U) for signed r:
///   r > 0: {z : dist(z,U) < r}
///   r = 0: U
///   r < 0: Z \ closed_neighborhood(Z \ U, |r|)
/// The result may be empty for r < 0.
Subset neighborhood(const FiniteMetricSpace& space, const Subset& u, double r);

/// {z : dist(z,U) <= r}; throws on empty U or negative r.
Subset closed_neighborhood(const FiniteMetricSpace& space, const Subset& u, double r);

/// max_z dist(z, X).
double covering_radius(const FiniteMetricSpace& space, const Subset& x);

/// True iff every point is within `lambda` of X (<= comparison).
bool is_lambda_net(const FiniteMetricSpace& space, const Subset& x, double lambda);

}  // namespace hypembed
