#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hypembed/metric_space.hpp"

namespace hypembed {

/// N equispaced points on a circle of circumference 2 pi, arc metric.
FiniteMetricSpace make_circle(std::size_t n);
/// N equispaced points of [0, 1]; a single point when N = 1.
FiniteMetricSpace make_interval(std::size_t n);
/// Left endpoints of the 2^depth intervals of the depth-th middle-thirds
/// stage, Euclidean metric.
FiniteMetricSpace make_cantor(std::size_t depth);
/// Leaves of the complete b-ary tree of height d; two leaves whose deepest
/// common ancestor sits at depth k are b^-k apart.
FiniteMetricSpace make_tree_boundary(std::size_t branching, std::size_t depth);
/// N sorted uniform angles on the unit circle, chordal metric.
FiniteMetricSpace make_random_circle(std::size_t n, std::uint64_t seed);
/// One point.
FiniteMetricSpace make_point();

/// Dispatch by name: circle{N}, interval{N}, cantor{depth},
/// tree_boundary{b, d}, random_circle{N}, visual_circle{N}, point{}.
FiniteMetricSpace generate(const std::string& name, const std::map<std::string, double>& params, std::uint64_t seed);

/// Parameters used when a generator is named without any: N = 512 for the
/// circle family, depth 9 for cantor, b = 2 and d = 9 for tree_boundary.
std::map<std::string, double> default_params(const std::string& name);

/// Rebuilds a space from its descriptor.
FiniteMetricSpace regenerate(const GeneratorDescriptor& g);

}  // namespace hypembed
