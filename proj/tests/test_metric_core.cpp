#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypembed/error.hpp"
#include "hypembed/generators.hpp"
#include "hypembed/neighborhood.hpp"
#include "oracle.hpp"
#include "property_suites.hpp"

using namespace hypembed;

namespace {

FiniteMetricSpace line(std::vector<double> xs) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < xs.size(); ++i) ids.push_back("p" + std::to_string(i));
  return FiniteMetricSpace::from_function(ids, [&](std::size_t i, std::size_t k) { return std::abs(xs[i] - xs[k]); });
}

}  // namespace

TEST_CASE("space construction rejects broken tables") {
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {0, 1, 2, 0}), Error);          // asymmetric
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {0, 0, 0, 0}), Error);          // distinct points at 0
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {1, 1, 1, 0}), Error);          // nonzero diagonal
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "a"}, {0, 1, 1, 0}), Error);          // duplicate id
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {0, -1, -1, 0}), Error);        // negative
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {0, 1, 1}), Error);             // wrong size
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b", "c"}, {0, 1, 5, 1, 0, 1, 5, 1, 0}), Error);  // triangle
  CHECK_NOTHROW(FiniteMetricSpace({"a", "b", "c"}, {0, 1, 5, 1, 0, 1, 5, 1, 0}, FiniteMetricSpace::Validation::structural));
}

TEST_CASE("triangle check tolerates rounding but reports the excess") {
  const double eps = 1e-15;
  FiniteMetricSpace z({"a", "b", "c"}, {0, 1, 2 + eps, 1, 0, 1, 2 + eps, 1, 0});
  CHECK(z.worst_triangle_violation() <= 1e-12);
}

TEST_CASE("ids, diameter and lookup") {
  const auto z = line({0, 1, 3});
  CHECK(z.size() == 3);
  CHECK(z.diameter() == 3.0);
  CHECK(z.index_of("p2") == 2);
  CHECK_THROWS_AS(z.index_of("nope"), Error);
  CHECK(z.eccentricity(1) == 2.0);
}

TEST_CASE("subset algebra") {
  Subset a{3, 1, 1, 2};
  CHECK(a.size() == 3);
  CHECK(a[0] == 1);
  CHECK(a.contains(2));
  Subset b{2, 5};
  CHECK(set_union(a, b) == Subset{1, 2, 3, 5});
  CHECK(set_intersection(a, b) == Subset{2});
  CHECK(a.intersects(b));
  CHECK(Subset{2}.is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
}

TEST_CASE("neighborhood examples on a line") {
  const auto z = line({0, 1, 2, 3, 4});
  const Subset mid{2};
  CHECK(neighborhood(z, mid, 1.0) == Subset{2});          // open ball excludes distance 1
  CHECK(neighborhood(z, mid, 1.5) == Subset{1, 2, 3});
  CHECK(closed_neighborhood(z, mid, 1.0) == Subset{1, 2, 3});
  CHECK(neighborhood(z, mid, 0.0) == mid);
  const Subset block{1, 2, 3};
  CHECK(neighborhood(z, block, -1.0) == Subset{2});
  CHECK(neighborhood(z, block, -2.0) == Subset{});  // 2 is exactly 2 from the complement
  CHECK(neighborhood(z, block, -0.5) == Subset{1, 2, 3});
  CHECK(neighborhood(z, z.all_points(), -100.0) == z.all_points());
  CHECK(neighborhood(z, Subset{}, 2.0) == Subset{});
  CHECK_THROWS_AS(closed_neighborhood(z, Subset{}, 1.0), Error);
  CHECK_THROWS_AS(closed_neighborhood(z, mid, -1.0), Error);
}

TEST_CASE("set distances") {
  const auto z = line({0, 1, 2, 3, 4});
  CHECK(dist_sets(z, Subset{0, 1}, Subset{3, 4}) == 2.0);
  CHECK(std::isinf(dist_to_set(z, 0, Subset{})));
  CHECK_THROWS_AS(dist_sets(z, Subset{}, Subset{1}), Error);
  CHECK(diameter(z, Subset{1, 4}) == 3.0);
  CHECK_THROWS_AS(diameter(z, Subset{}), Error);
  CHECK(complement(z, Subset{0, 4}) == Subset{1, 2, 3});
}

TEST_CASE("nets") {
  const auto z = line({0, 1, 2, 3, 4});
  CHECK(covering_radius(z, Subset{0, 4}) == 2.0);
  CHECK(is_lambda_net(z, Subset{0, 4}, 2.0));
  CHECK_FALSE(is_lambda_net(z, Subset{0}, 3.5));
  CHECK(is_lambda_net(z, Subset{2}, 2.0));
}

TEST_CASE("generated circle matches its arc metric") {
  const auto z = make_circle(4);
  CHECK(z(0, 1) == doctest::Approx(std::numbers::pi / 2));
  CHECK(z(0, 2) == doctest::Approx(std::numbers::pi));
  CHECK(z(1, 3) == doctest::Approx(std::numbers::pi));
  CHECK(z.layout().kind == Layout::Kind::cyclic);
}

TEST_CASE("neighborhood calculus holds on random instances") {
  const auto res = suites::neighborhood_suite(200, 11);
  INFO(res.first);
  CHECK(res.cases == 200);
  CHECK(res.violations == 0);
}
