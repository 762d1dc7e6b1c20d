#include "hypembed/profile.hpp"

#include <algorithm>
#include <cmath>

#include "hypembed/base_sequence.hpp"
#include "hypembed/error.hpp"

namespace hypembed {

const char* const kCapacityCaveat =
    "Lower-bound witnesses only: each value is the best capacity found by a budgeted covering search at one "
    "finite scale. It bounds c_tau(Z,m,delta) from below; the limits tau -> 0 and delta -> 0 and the supremum over "
    "all coverings are not computed, so no capacity dimension is claimed.";

namespace {

// Any positive separation makes color classes disjoint on a finite space.
constexpr double kDisjoint = 1e-9;

}  // namespace

std::vector<double> geometric_ladder(double top, double ratio, std::size_t count) {
  if (!(top > 0.0) || !(ratio > 0.0 && ratio < 1.0)) throw Error("ladder needs top > 0 and ratio in (0,1)");
  std::vector<double> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(top * std::pow(ratio, static_cast<double>(k)));
  return out;
}

CapacityProfile capacity_profile(const FiniteMetricSpace& space, const std::vector<std::size_t>& m_values,
                                 const std::vector<double>& tau_ladder, double delta, std::size_t budget) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must lie in (0,1)");
  if (budget == 0) throw Error("budget must be positive");
  CapacityProfile prof;
  prof.delta = delta;
  prof.budget = budget;
  prof.caveat = kCapacityCaveat;
  std::vector<BaseStrategy> strategies{default_strategy(space)};
  if (strategies[0] != BaseStrategy::generic_greedy) strategies.push_back(BaseStrategy::generic_greedy);

  for (double tau : tau_ladder) {
    if (!(tau > 0.0) || (space.diameter() > 0.0 && tau > space.diameter() * (1.0 + 1e-12)))
      throw Error("ladder scales must lie in (0, diam Z]");
    for (std::size_t m : m_values) {
      CapacityEntry e;
      e.tau = tau;
      e.m = m;
      if (space.size() == 1) {
        e.capacity = 1.0;
        e.candidates = 1;
        e.strategy = "whole_space";
        prof.entries.push_back(e);
        continue;
      }
      // Candidate scales tau, tau q, ..., independent of delta, so a stricter
      // delta only removes candidates.
      const double q = std::pow(0.1, 1.0 / static_cast<double>(budget));
      for (std::size_t k = 0; k < budget; ++k) {
        const double scale = tau * std::pow(q, static_cast<double>(k));
        for (auto strategy : strategies) {
          ColoredCovering c;
          try {
            c = strategy_covering(space, strategy, scale, m + 1, kDisjoint);
          } catch (const Error&) {
            continue;
          }
          if (c.color_count() > m + 1) continue;
          bool disjoint = true;
          for (const auto& f : c.colors)
            for (std::size_t i = 0; i < f.size() && disjoint; ++i)
              for (std::size_t l = i + 1; l < f.size() && disjoint; ++l) disjoint = !f[i].intersects(f[l]);
          if (!disjoint) continue;
          const double ms = mesh(space, c);
          if (ms < delta * tau || ms > tau) continue;
          ++e.candidates;
          const double cap = capacity(space, c);
          if (cap > e.capacity || e.strategy.empty()) {
            e.capacity = std::max(e.capacity, cap);
            e.mesh = ms;
            e.strategy = std::string(to_string(strategy));
          }
        }
      }
      prof.entries.push_back(e);
    }
  }
  return prof;
}

}  // namespace hypembed
