#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypembed/metric_space.hpp"

namespace hypembed {

struct CapacityEntry {
  double tau = 0.0;
  /// Color count is m + 1.
  std::size_t m = 0;
  /// Best capacity among admissible candidates; 0 when none qualified.
  double capacity = 0.0;
  double mesh = 0.0;
  std::size_t candidates = 0;
  std::string strategy;
};

struct CapacityProfile {
  double delta = 0.0;
  std::size_t budget = 0;
  std::vector<CapacityEntry> entries;
  std::string caveat;
};

/// Lower-bound witness for the finite-scale capacity c_tau(Z, m, delta):
/// for each tau and m, tries `budget` candidate scales in (0, tau] with the
/// structure-aware strategy and the greedy one, keeps coverings with at
/// most m+1 disjoint color classes and delta tau <= mesh <= tau, and
/// records the best capacity.
CapacityProfile capacity_profile(const FiniteMetricSpace& space, const std::vector<std::size_t>& m_values,
                                 const std::vector<double>& tau_ladder, double delta, std::size_t budget = 8);

/// tau_k = diam Z * ratio^k for k = 0 .. count-1.
std::vector<double> geometric_ladder(double top, double ratio, std::size_t count);

extern const char* const kCapacityCaveat;

}  // namespace hypembed
