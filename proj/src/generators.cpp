#include "hypembed/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hypembed/error.hpp"
#include "hypembed/qi_fit.hpp"

namespace hypembed {

namespace {

constexpr std::size_t kMaxPoints = 20000;

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

std::size_t count_param(const std::map<std::string, double>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw Error("missing generator parameter '" + key + "'");
  const double v = it->second;
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e9) throw Error("parameter '" + key + "' must be a nonnegative integer");
  return static_cast<std::size_t>(v);
}

void check_count(std::size_t n) {
  if (n == 0) throw Error("a space needs at least one point");
  if (n > kMaxPoints) throw Error("point count exceeds " + std::to_string(kMaxPoints));
}

}  // namespace

FiniteMetricSpace make_circle(std::size_t n) {
  check_count(n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  auto space = FiniteMetricSpace::from_function(
      numbered("c", n),
      [&](std::size_t i, std::size_t k) { return static_cast<double>(std::min(k - i, n - (k - i))) * step; },
      FiniteMetricSpace::Validation::structural);
  space.set_layout({Layout::Kind::cyclic, 0});
  space.set_generator({"circle", {{"N", static_cast<double>(n)}}, 0});
  return space;
}

FiniteMetricSpace make_interval(std::size_t n) {
  check_count(n);
  const double step = n == 1 ? 0.0 : 1.0 / static_cast<double>(n - 1);
  auto space = FiniteMetricSpace::from_function(
      numbered("i", n), [&](std::size_t i, std::size_t k) { return static_cast<double>(k - i) * step; },
      FiniteMetricSpace::Validation::structural);
  space.set_layout({Layout::Kind::linear, 0});
  space.set_generator({"interval", {{"N", static_cast<double>(n)}}, 0});
  return space;
}

FiniteMetricSpace make_cantor(std::size_t depth) {
  if (depth > 14) throw Error("cantor depth must be at most 14");
  const std::size_t n = std::size_t{1} << depth;
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double v = 0.0;
    double w = 1.0;
    for (std::size_t l = 0; l < depth; ++l) {
      w /= 3.0;
      if ((i >> (depth - 1 - l)) & 1U) v += 2.0 * w;
    }
    x[i] = v;
  }
  auto space = FiniteMetricSpace::from_function(
      numbered("k", n), [&](std::size_t i, std::size_t k) { return std::abs(x[k] - x[i]); },
      FiniteMetricSpace::Validation::structural);
  space.set_layout({Layout::Kind::hierarchical, 2});
  space.set_generator({"cantor", {{"depth", static_cast<double>(depth)}}, 0});
  return space;
}

FiniteMetricSpace make_tree_boundary(std::size_t branching, std::size_t depth) {
  if (branching < 2) throw Error("tree_boundary needs b >= 2");
  std::size_t n = 1;
  for (std::size_t l = 0; l < depth; ++l) {
    n *= branching;
    if (n > kMaxPoints) throw Error("b^d exceeds " + std::to_string(kMaxPoints));
  }
  std::vector<double> scale(depth + 1);
  for (std::size_t k = 0; k <= depth; ++k) scale[k] = std::pow(static_cast<double>(branching), -static_cast<double>(k));
  auto space = FiniteMetricSpace::from_function(
      numbered("t", n),
      [&](std::size_t i, std::size_t k) {
        std::size_t common = depth;
        while (i != k) {
          i /= branching;
          k /= branching;
          --common;
        }
        return scale[common];
      },
      FiniteMetricSpace::Validation::structural);
  space.set_layout({Layout::Kind::hierarchical, branching});
  space.set_generator({"tree_boundary", {{"b", static_cast<double>(branching)}, {"d", static_cast<double>(depth)}}, 0});
  return space;
}

FiniteMetricSpace make_random_circle(std::size_t n, std::uint64_t seed) {
  check_count(n);
  std::mt19937_64 gen(seed);
  std::vector<double> angle(n);
  // 53 random bits per angle keeps the stream identical across standard libraries.
  for (auto& a : angle) a = 2.0 * std::numbers::pi * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
  std::sort(angle.begin(), angle.end());
  for (std::size_t i = 1; i < n; ++i)
    if (angle[i] == angle[i - 1]) throw Error("random_circle drew a repeated angle; use another seed");
  auto space = FiniteMetricSpace::from_function(
      numbered("p", n),
      [&](std::size_t i, std::size_t k) { return 2.0 * std::sin((angle[k] - angle[i]) / 2.0); },
      FiniteMetricSpace::Validation::structural);
  space.set_layout({Layout::Kind::cyclic, 0});
  space.set_generator({"random_circle", {{"N", static_cast<double>(n)}}, seed});
  return space;
}

FiniteMetricSpace make_point() {
  auto space = FiniteMetricSpace({"o"}, {0.0});
  space.set_generator({"point", {}, 0});
  return space;
}

namespace {

void only_params(const std::map<std::string, double>& params, std::initializer_list<const char*> allowed,
                 const std::string& name) {
  for (const auto& [key, value] : params)
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw Error("generator '" + name + "' has no parameter '" + key + "'");
}

}  // namespace

FiniteMetricSpace generate(const std::string& name, const std::map<std::string, double>& params, std::uint64_t seed) {
  if (name == "circle" || name == "interval" || name == "random_circle" || name == "visual_circle")
    only_params(params, {"N"}, name);
  else if (name == "cantor")
    only_params(params, {"depth"}, name);
  else if (name == "tree_boundary")
    only_params(params, {"b", "d"}, name);
  else if (name == "point")
    only_params(params, {}, name);
  if (name == "circle") return make_circle(count_param(params, "N"));
  if (name == "interval") return make_interval(count_param(params, "N"));
  if (name == "cantor") return make_cantor(count_param(params, "depth"));
  if (name == "tree_boundary") return make_tree_boundary(count_param(params, "b"), count_param(params, "d"));
  if (name == "random_circle") return make_random_circle(count_param(params, "N"), seed);
  if (name == "visual_circle") return visual_metric_circle(count_param(params, "N"));
  if (name == "point") return make_point();
  throw Error("unknown generator '" + name + "'");
}

std::map<std::string, double> default_params(const std::string& name) {
  if (name == "circle" || name == "interval" || name == "random_circle" || name == "visual_circle") return {{"N", 512}};
  if (name == "cantor") return {{"depth", 9}};
  if (name == "tree_boundary") return {{"b", 2}, {"d", 9}};
  if (name == "point") return {};
  throw Error("unknown generator '" + name + "'");
}

FiniteMetricSpace regenerate(const GeneratorDescriptor& g) { return generate(g.name, g.params, g.seed); }

}  // namespace hypembed
