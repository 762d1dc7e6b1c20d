#pragma once
// Randomized suites for the neighborhood calculus, the shrink lemma and
// the star operation. Shared by the unit tests and the acceptance gate.

#include <sstream>
#include <string>
#include <vector>

#include "hypembed/coverings.hpp"
#include "hypembed/neighborhood.hpp"
#include "hypembed/separation.hpp"
#include "oracle.hpp"
#include "random_instances.hpp"

namespace suites {

struct Outcome {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first;

  void fail(const std::string& what) {
    if (violations++ == 0) first = what;
  }
};

inline std::vector<hypembed::FiniteMetricSpace> space_pool(std::mt19937_64& g, std::size_t count, std::size_t max_n) {
  std::vector<hypembed::FiniteMetricSpace> pool;
  for (std::size_t i = 0; i < count; ++i) pool.push_back(rnd::space(g, 5 + rnd::below(g, max_n - 4)));
  return pool;
}

// Inclusion B_{t-s}(U) in B_{-s}(B_t(U)), monotonicity in the signed
// radius, the complement duality and agreement with the definition.
inline Outcome neighborhood_suite(std::size_t cases, std::uint64_t seed) {
  using namespace hypembed;
  std::mt19937_64 g(seed);
  const auto pool = space_pool(g, 40, 200);
  Outcome out;
  for (std::size_t c = 0; c < cases; ++c) {
    const auto& z = pool[rnd::below(g, pool.size())];
    const double d = z.diameter();
    const Subset u = rnd::subset(g, z.size(), rnd::uniform(g, 0.05, 0.9));
    double s = rnd::uniform(g, 0.0, 0.6 * d);
    double t = rnd::uniform(g, 0.0, 0.6 * d);
    if (s > t) std::swap(s, t);
    if (!(s > 0.0 && s < t)) t = s + 0.01 * d;
    ++out.cases;
    std::ostringstream tag;
    tag << "case " << c << " (n=" << z.size() << ", |U|=" << u.size() << ", s=" << s << ", t=" << t << ")";

    if (!neighborhood(z, u, t - s).is_subset_of(neighborhood(z, neighborhood(z, u, t), -s))) {
      out.fail(tag.str() + ": inclusion fails");
      continue;
    }
    const double r1 = rnd::uniform(g, -0.7 * d, 0.7 * d), r2 = rnd::uniform(g, -0.7 * d, 0.7 * d);
    const double lo = std::min(r1, r2), hi = std::max(r1, r2);
    if (!neighborhood(z, u, lo).is_subset_of(neighborhood(z, u, hi))) {
      out.fail(tag.str() + ": not monotone in r");
      continue;
    }
    const Subset inner = neighborhood(z, u, -s);
    const Subset comp = complement(z, u);
    const Subset dual = comp.empty() ? z.all_points() : complement(z, closed_neighborhood(z, comp, s));
    if (!(inner == dual)) {
      out.fail(tag.str() + ": complement duality fails");
      continue;
    }
    if (!inner.is_subset_of(u) || !u.is_subset_of(neighborhood(z, u, s))) {
      out.fail(tag.str() + ": B_-s(U) in U in B_s(U) fails");
      continue;
    }
    const double rr = rnd::uniform(g, -0.7 * d, 0.7 * d);
    if (oracle::to_set(neighborhood(z, u, rr)) != oracle::ball(z, oracle::to_set(u), rr)) {
      out.fail(tag.str() + ": disagrees with the definition");
      continue;
    }
  }
  return out;
}

// Shrinking an open covering by s < L keeps it a covering whose
// s-multiplicity does not exceed the original multiplicity.
inline Outcome shrink_suite(std::size_t cases, std::uint64_t seed) {
  using namespace hypembed;
  std::mt19937_64 g(seed);
  const auto pool = space_pool(g, 30, 120);
  Outcome out;
  while (out.cases < cases) {
    const auto& z = pool[rnd::below(g, pool.size())];
    const auto cov = rnd::ball_covering(g, z, rnd::uniform(g, 0.1, 0.6) * z.diameter(), 1 + rnd::below(g, 3));
    const double l = lebesgue(z, cov);
    if (!(l > 0.0)) continue;
    const double s = rnd::uniform(g, 0.0, l);
    if (!(s > 0.0 && s < l)) continue;
    ++out.cases;
    const auto shrunk = shrink(z, cov, s);
    std::vector<oracle::Set> flat;
    for (const auto& m : shrunk.flatten()) flat.push_back(oracle::to_set(m));
    std::vector<oracle::Set> orig;
    for (const auto& m : cov.flatten()) orig.push_back(oracle::to_set(m));
    std::ostringstream tag;
    tag << "case " << out.cases << " (n=" << z.size() << ", L=" << l << ", s=" << s << ")";
    if (!oracle::covers(z, flat)) out.fail(tag.str() + ": shrunk family does not cover");
    else if (oracle::r_multiplicity(z, flat, s) > oracle::multiplicity(z, orig))
      out.fail(tag.str() + ": s-multiplicity grew");
  }
  return out;
}

// A random admissible instance of the star operation: Ghat is
// delta*s-disjoint with mesh <= 2s.
struct StarInstance {
  hypembed::Family ghat;
  double s = 0.0;
  double delta = 0.0;
};

inline StarInstance star_instance(std::mt19937_64& g, const hypembed::FiniteMetricSpace& z) {
  StarInstance in;
  in.s = rnd::uniform(g, 0.02, 0.25) * z.diameter();
  in.delta = rnd::uniform(g, 0.01, 2.0 / 3.0);
  std::vector<oracle::Set> chosen;
  for (std::size_t tries = 0; tries < 3 * z.size(); ++tries) {
    const auto c = static_cast<hypembed::PointIndex>(rnd::below(g, z.size()));
    const double rho = rnd::uniform(g, 0.0, in.s);
    oracle::Set m;
    for (hypembed::PointIndex p = 0; p < z.size(); ++p)
      if (z(c, p) <= rho) m.insert(p);
    auto trial = chosen;
    trial.push_back(m);
    if (oracle::diam(z, m) <= 2.0 * in.s && oracle::r_multiplicity(z, trial, in.delta * in.s) <= 1) chosen = trial;
  }
  for (const auto& m : chosen) in.ghat.push_back(oracle::to_subset(m));
  return in;
}

// U* in U, each B_{delta s}(Ghat) either misses or lies in U*, and
// B_t(U1) in U2 with t > 4s gives B_{t-4s}(U1*) in U2*.
inline Outcome star_suite(std::size_t cases, std::uint64_t seed) {
  using namespace hypembed;
  std::mt19937_64 g(seed);
  const auto pool = space_pool(g, 30, 90);
  Outcome out;
  for (std::size_t c = 0; c < cases; ++c) {
    const auto& z = pool[rnd::below(g, pool.size())];
    const auto in = star_instance(g, z);
    const Subset u1 = rnd::subset(g, z.size(), rnd::uniform(g, 0.1, 0.9));
    const double t = 4.0 * in.s + rnd::uniform(g, 1e-6, 0.5) * z.diameter();
    const Subset u2 = set_union(neighborhood(z, u1, t), rnd::subset(g, z.size(), 0.2));
    const auto stars = ast_shrink(z, Family{u1, u2}, in.ghat, in.s, in.delta);
    ++out.cases;
    std::ostringstream tag;
    tag << "case " << c << " (n=" << z.size() << ", s=" << in.s << ", delta=" << in.delta << ", |Ghat|=" << in.ghat.size()
        << ")";
    const auto star1 = oracle::to_set(stars[0]);
    const auto star2 = oracle::to_set(stars[1]);
    bool ok = true;
    for (std::size_t k = 0; k < 2 && ok; ++k) {
      const auto uk = oracle::to_set(k == 0 ? u1 : u2);
      const auto& sk = k == 0 ? star1 : star2;
      if (!oracle::subset_of(sk, uk)) {
        out.fail(tag.str() + ": U* is not inside U");
        ok = false;
        break;
      }
      for (const auto& gh : in.ghat) {
        const auto grown = oracle::ball(z, oracle::to_set(gh), in.delta * in.s);
        if (oracle::meets(grown, sk) && !oracle::subset_of(grown, sk)) {
          out.fail(tag.str() + ": B_{delta s}(Ghat) straddles U*");
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    if (!oracle::subset_of(oracle::ball(z, star1, t - 4.0 * in.s), star2)) out.fail(tag.str() + ": nesting fails");
  }
  return out;
}

}  // namespace suites
