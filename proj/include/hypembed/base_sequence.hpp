#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hypembed/char_sequence.hpp"

namespace hypembed {

/// Constructive covering generators for the base ladder.
enum class BaseStrategy { circle_arcs, interval_blocks, cantor_clopen, tree_boundary_cylinders, generic_greedy };

std::string_view to_string(BaseStrategy s);
BaseStrategy parse_strategy(std::string_view name);
/// The structure-aware strategy for a space's layout.
BaseStrategy default_strategy(const FiniteMetricSpace& space);

struct BaseOptions {
  /// Requested characteristic constant delta in (0,1).
  double delta = 0.1;
  /// Requested net constant; unset means 1 + 2 delta.
  std::optional<double> lambda;
};

/// One colored covering at nominal scale `scale` (mesh <= scale) with at
/// least `colors` colors, each color class delta*scale-disjoint. The generic
/// strategy may return more colors than requested.
ColoredCovering strategy_covering(const FiniteMetricSpace& space, BaseStrategy strategy, double scale,
                                  std::size_t colors, double delta);

/// Pads each color class with copies of other colors' members, keeping the
/// class delta*scale-disjoint, until it is a lambda*scale-net or no copy fits.
/// Returns the number of copies added.
std::size_t pad_nets(const FiniteMetricSpace& space, ColoredCovering& covering, double scale, double delta,
                     double lambda);

/// Builds levels 1..depth, pads nets and verifies the base properties.
/// Throws with the first failing level and quantity when the requested
/// constants are not met.
BaseSequence build_base(const FiniteMetricSpace& space, double r, std::size_t colors, std::size_t depth,
                        BaseStrategy strategy, const BaseOptions& options = {});

}  // namespace hypembed
