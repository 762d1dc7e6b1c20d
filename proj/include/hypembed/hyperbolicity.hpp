#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "hypembed/metric_space.hpp"

namespace hypembed {

/// (x|x')_o = (|xo| + |x'o| - |xx'|) / 2.
double gromov_product(const FiniteMetricSpace& space, PointIndex o, PointIndex x, PointIndex x2);

/// Smallest delta with (x|x'')_o >= min{(x|x')_o, (x'|x'')_o} - delta for
/// all triples, base point fixed. O(n^3). `dist(i, j)` may return an
/// integer type, in which case the computation is exact (doubled Gromov
/// products in 64-bit integers, halved once at the end).
template <class Dist>
double delta_hyperbolicity(std::size_t n, Dist&& dist, std::size_t o) {
  if (n < 3) return 0.0;
  using Raw = std::decay_t<decltype(dist(std::size_t{0}, std::size_t{0}))>;
  using Acc = std::conditional_t<std::is_integral_v<Raw>, std::int64_t, double>;
  std::vector<Acc> to_o(n);
  for (std::size_t i = 0; i < n; ++i) to_o[i] = static_cast<Acc>(dist(i, o));
  // g(i, k) = 2 (i|k)_o
  std::vector<Acc> g(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) g[i * n + k] = to_o[i] + to_o[k] - static_cast<Acc>(dist(i, k));
  Acc worst = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = x; z < n; ++z) {
      const Acc xz = g[x * n + z];
      for (std::size_t y = 0; y < n; ++y) {
        const Acc m = std::min(g[x * n + y], g[y * n + z]);
        if (m - xz > worst) worst = m - xz;
      }
    }
  return static_cast<double>(worst) / 2.0;
}

/// delta_hyperbolicity of a finite metric space with base point o.
double delta_hyperbolicity(const FiniteMetricSpace& space, PointIndex o);

}  // namespace hypembed
