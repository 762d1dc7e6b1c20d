#include "hypembed/qi_fit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hypembed/cone.hpp"
#include "hypembed/error.hpp"

namespace hypembed {

namespace {

double upper_excess(const DistancePair& p, double lambda) { return p.target - lambda * p.source; }
double lower_excess(const DistancePair& p, double lambda) { return p.source / lambda - p.target; }

}  // namespace

double QIFitter::lambda_at(std::size_t k) { return 1.0 + static_cast<double>(k) * kLambdaStep; }

std::size_t QIFitter::lambda_steps() {
  return static_cast<std::size_t>(std::llround((kLambdaMax - 1.0) / kLambdaStep)) + 1;
}

void QIFitter::add(const DistancePair& p) {
  if (!(p.source >= 0.0) || !(p.target >= 0.0) || !std::isfinite(p.source) || !std::isfinite(p.target))
    throw Error("distances must be finite and nonnegative");
  ++count_;
  auto [lo, fresh_lo] = min_source_.try_emplace(p.target, p);
  if (!fresh_lo && p.source < lo->second.source) lo->second = p;
  auto [hi, fresh_hi] = max_source_.try_emplace(p.target, p);
  if (!fresh_hi && p.source > hi->second.source) hi->second = p;
}

QIFit QIFitter::fit() const {
  if (count_ == 0) throw Error("fit_qi needs at least one pair");
  QIFit best;
  bool have = false;
  const std::size_t steps = lambda_steps();
  for (std::size_t k = 0; k < steps; ++k) {
    const double lambda = lambda_at(k);
    QIFit cur;
    cur.lambda = lambda;
    cur.pair_count = count_;
    cur.upper_excess = -std::numeric_limits<double>::infinity();
    cur.lower_excess = -std::numeric_limits<double>::infinity();
    for (const auto& [t, p] : min_source_) {
      const double e = upper_excess(p, lambda);
      if (e > cur.upper_excess) {
        cur.upper_excess = e;
        cur.worst_upper = p;
      }
    }
    for (const auto& [t, p] : max_source_) {
      const double e = lower_excess(p, lambda);
      if (e > cur.lower_excess) {
        cur.lower_excess = e;
        cur.worst_lower = p;
      }
    }
    cur.sigma = std::max({0.0, cur.upper_excess, cur.lower_excess});
    if (!have || cur.sigma < best.sigma) {
      best = cur;
      have = true;
    }
  }
  return best;
}

double QIFitter::sigma_at(double lambda) const {
  if (count_ == 0) throw Error("fit needs at least one pair");
  double sigma = 0.0;
  for (const auto& [t, p] : min_source_) sigma = std::max(sigma, upper_excess(p, lambda));
  for (const auto& [t, p] : max_source_) sigma = std::max(sigma, lower_excess(p, lambda));
  return sigma;
}

UpperFit QIFitter::fit_upper_at(double lambda) const {
  if (count_ == 0) throw Error("fit needs at least one pair");
  UpperFit out;
  out.lambda = lambda;
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& [t, p] : min_source_) {
    const double e = upper_excess(p, lambda);
    if (e > worst) {
      worst = e;
      out.worst = p;
    }
  }
  out.sigma = std::max(0.0, worst);
  return out;
}

void QIVerifier::check(const DistancePair& p) {
  ++checked_;
  const bool bad = upper_excess(p, lambda_) > sigma_ || (!upper_only_ && lower_excess(p, lambda_) > sigma_);
  if (bad) {
    ++violations_;
    if (first_.size() < 8) first_.push_back(p);
  }
}

QIFit fit_qi(const std::vector<std::pair<double, double>>& pairs) {
  QIFitter fitter;
  for (std::size_t i = 0; i < pairs.size(); ++i) fitter.add({pairs[i].first, pairs[i].second, i, 0});
  QIFit fit = fitter.fit();
  QIVerifier verifier(fit.lambda, fit.sigma);
  for (std::size_t i = 0; i < pairs.size(); ++i) verifier.check({pairs[i].first, pairs[i].second, i, 0});
  fit.violations = verifier.violations();
  if (fit.violations != 0) {
    std::ostringstream os;
    os << "fit_qi post-check found " << fit.violations << " violating pairs at Lambda = " << fit.lambda
       << ", sigma = " << fit.sigma;
    throw Error(os.str());
  }
  return fit;
}

FiniteMetricSpace visual_metric_circle(std::size_t n) {
  if (n < 2) throw Error("visual_metric_circle needs N >= 2");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  auto space = FiniteMetricSpace::from_function(
      std::move(ids),
      [&](std::size_t i, std::size_t k) {
        const std::size_t gap = std::min(k - i, n - (k - i));
        return 2.0 * std::sin(static_cast<double>(gap) * step / 2.0);
      },
      FiniteMetricSpace::Validation::structural);
  space.set_layout({Layout::Kind::cyclic, 0});
  space.set_generator({"visual_circle", {{"N", static_cast<double>(n)}}, 0});
  return space;
}

VisualComparison compare_visual_metric(std::size_t n, double radius) {
  const FiniteMetricSpace z = visual_metric_circle(n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  VisualComparison out;
  out.min_ratio = std::numeric_limits<double>::infinity();
  out.max_ratio = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      const std::size_t gap = std::min(k - i, n - (k - i));
      const double d = hyperbolic_distance(radius, radius, static_cast<double>(gap) * step);
      const double product = radius - d / 2.0;
      const double ratio = z(static_cast<PointIndex>(i), static_cast<PointIndex>(k)) / std::exp(-product);
      out.min_ratio = std::min(out.min_ratio, ratio);
      out.max_ratio = std::max(out.max_ratio, ratio);
      ++out.pairs;
    }
  return out;
}

}  // namespace hypembed
