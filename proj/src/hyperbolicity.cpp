#include "hypembed/hyperbolicity.hpp"

#include "hypembed/error.hpp"

namespace hypembed {

double gromov_product(const FiniteMetricSpace& space, PointIndex o, PointIndex x, PointIndex x2) {
  if (o >= space.size() || x >= space.size() || x2 >= space.size()) throw Error("point is not in the space");
  return 0.5 * (space(x, o) + space(x2, o) - space(x, x2));
}

double delta_hyperbolicity(const FiniteMetricSpace& space, PointIndex o) {
  if (o >= space.size()) throw Error("base point is not in the space");
  return delta_hyperbolicity(
      space.size(), [&](std::size_t i, std::size_t k) { return space(static_cast<PointIndex>(i), static_cast<PointIndex>(k)); },
      o);
}

}  // namespace hypembed
