#include <doctest.h>

#include <cmath>

#include "hypembed/coverings.hpp"
#include "hypembed/error.hpp"
#include "hypembed/neighborhood.hpp"
#include "oracle.hpp"
#include "property_suites.hpp"

using namespace hypembed;

namespace {

FiniteMetricSpace line(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  return FiniteMetricSpace::from_function(ids, [](std::size_t i, std::size_t k) { return double(k > i ? k - i : i - k); });
}

ColoredCovering one_color(Family f) {
  ColoredCovering c;
  c.colors.push_back(std::move(f));
  return c;
}

std::vector<oracle::Set> sets(const Family& f) {
  std::vector<oracle::Set> out;
  for (const auto& u : f) out.push_back(oracle::to_set(u));
  return out;
}

}  // namespace

TEST_CASE("mesh, multiplicity and coverage on a hand instance") {
  const auto z = line(7);
  const Family f{{0, 1, 2}, {2, 3, 4}, {4, 5, 6}};
  CHECK(covers(z, f));
  CHECK(mesh(z, f) == 2.0);
  CHECK(multiplicity(z, f) == 2);
  CHECK(r_multiplicity(z, f, 0.5) == 2);
  CHECK(r_multiplicity(z, f, 1.5) == 3);  // point 3 is within 1.5 of all three
  CHECK(r_multiplicity(z, f, 2.5) == 3);
  CHECK_FALSE(covers(z, Family{{0, 1}, {3}}));
  CHECK_THROWS_AS(mesh(z, Family{}), Error);
  CHECK_THROWS_AS(r_multiplicity(z, f, 0.0), Error);
}

TEST_CASE("Lebesgue number follows the capped definition") {
  const auto z = line(7);
  const auto c = one_color({{0, 1, 2, 3}, {3, 4, 5, 6}});
  // Point 3: depth 1 in either member. Mesh is 3.
  CHECK(lebesgue_at(z, c, 3) == 1.0);
  CHECK(lebesgue(z, c) == 1.0);
  CHECK(lebesgue(z, c) == oracle::lebesgue(z, sets(c.flatten())));
  // The whole space as a member: L' is infinite, the mesh caps it.
  const auto whole = one_color({z.all_points()});
  CHECK(std::isinf(depth_in(z, 0, z.all_points())));
  CHECK(lebesgue(z, whole) == 6.0);
  CHECK(capacity(z, whole) == 1.0);
  CHECK(capacity(z, c) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("capacity of a singleton covering is 1 by convention") {
  const auto z = line(3);
  const auto c = one_color({{0}, {1}, {2}});
  CHECK(mesh(z, c) == 0.0);
  CHECK(capacity(z, c) == 1.0);
}

TEST_CASE("disjointness radius agrees with r-multiplicity") {
  std::mt19937_64 g(5);
  for (int it = 0; it < 60; ++it) {
    const auto z = rnd::space(g, 8 + rnd::below(g, 30));
    Family f;
    for (int k = 0; k < 4; ++k) {
      auto u = rnd::subset(g, z.size(), 0.15);
      if (!u.empty()) f.push_back(u);
    }
    if (f.size() < 2) continue;
    const double rad = disjointness_radius(z, f);
    const auto fs = sets(f);
    if (rad > 0.0) {
      CHECK(oracle::r_multiplicity(z, fs, rad) <= 1);
      CHECK(is_r_disjoint(z, f, rad));
    }
    CHECK(oracle::r_multiplicity(z, fs, rad * 1.0000001 + 1e-12) > 1);
  }
}

TEST_CASE("library Lebesgue and mesh match the oracle on random coverings") {
  std::mt19937_64 g(17);
  for (int it = 0; it < 40; ++it) {
    const auto z = rnd::space(g, 6 + rnd::below(g, 40));
    const auto c = rnd::ball_covering(g, z, rnd::uniform(g, 0.1, 0.7) * z.diameter(), 2);
    const auto fs = sets(c.flatten());
    CHECK(mesh(z, c) == oracle::mesh(z, fs));
    CHECK(lebesgue(z, c) == oracle::lebesgue(z, fs));
    CHECK(multiplicity(z, c.flatten()) == oracle::multiplicity(z, fs));
  }
}

TEST_CASE("inner radius") {
  const auto z = line(7);
  CHECK(inner_radius(z, Subset{1, 2, 3, 4, 5}) == 3.0);  // center 3, complement at 0 and 6
  CHECK(inner_radius(z, Subset{6}) == 1.0);
}

TEST_CASE("shrink refuses radii at or beyond the Lebesgue number") {
  const auto z = line(7);
  const auto c = one_color({{0, 1, 2, 3}, {3, 4, 5, 6}});
  CHECK_THROWS_WITH_AS(shrink(z, c, 1.0), "shrink exceeds Lebesgue number", Error);
  const auto s = shrink(z, c, 0.5);
  CHECK(covers(z, s.flatten()));
}

TEST_CASE("star merge absorbs nearby members") {
  const auto z = line(10);
  const Family f{{0, 1}};
  const Family g{{3}, {8}};
  const auto out = star_merge(z, f, g, 1.5);
  REQUIRE(out.size() == 1);
  // B_1.5({0,1}) = {0,1,2} meets B_1.5({3}) = {2,3,4}; {8} stays out.
  CHECK(out[0] == Subset{0, 1, 2, 3, 4});
}

TEST_CASE("shrinking keeps a covering without raising multiplicity") {
  const auto res = suites::shrink_suite(100, 23);
  INFO(res.first);
  CHECK(res.violations == 0);
}
