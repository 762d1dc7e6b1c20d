#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypembed/metric_space.hpp"

namespace hypembed {

/// One sampled pair: source distance, target distance and the ids of the
/// two points (opaque to the fitter; used for witnesses).
struct DistancePair {
  double source = 0.0;
  double target = 0.0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

/// Constants (Lambda, sigma) with (1/Lambda) d_s - sigma <= d_t <= Lambda d_s + sigma
/// on every pair, plus the pairs that bind each side.
struct QIFit {
  double lambda = 1.0;
  double sigma = 0.0;
  std::size_t pair_count = 0;
  DistancePair worst_upper;  // maximizes d_t - Lambda d_s
  DistancePair worst_lower;  // maximizes d_s / Lambda - d_t
  double upper_excess = 0.0;
  double lower_excess = 0.0;
  /// Pairs violating either inequality in the post-check (always 0 for a
  /// fit returned by QIFitter::fit).
  std::size_t violations = 0;
};

/// One-sided constants d_t <= Lambda d_s + sigma.
struct UpperFit {
  double lambda = 1.0;
  double sigma = 0.0;
  DistancePair worst;
};

/// Streaming fitter. Per distinct target value it keeps only the pair
/// with the smallest source distance (binding for the upper inequality)
/// and the one with the largest (binding for the lower), which is exact
/// because both deficits are monotone in the source distance. Lambda runs
/// over 1, 1.05, ..., 50; sigma(Lambda) is minimized, ties to smaller
/// Lambda.
class QIFitter {
 public:
  static constexpr double kLambdaStep = 0.05;
  static constexpr double kLambdaMax = 50.0;

  void add(const DistancePair& p);
  void add(double source, double target) { add({source, target, count_, 0}); }
  std::size_t size() const noexcept { return count_; }

  /// Two-sided fit over the pairs seen so far; throws when empty.
  QIFit fit() const;
  /// Smallest sigma satisfying both inequalities at a fixed lambda.
  double sigma_at(double lambda) const;
  /// Smallest sigma with d_t <= lambda d_s + sigma at a fixed lambda.
  UpperFit fit_upper_at(double lambda) const;

  static double lambda_at(std::size_t k);
  static std::size_t lambda_steps();

 private:
  std::size_t count_ = 0;
  std::map<double, DistancePair> min_source_;
  std::map<double, DistancePair> max_source_;
};

/// Re-checks a fit against pairs using the same floating expressions as
/// the fitter; returns the number of violating pairs.
class QIVerifier {
 public:
  QIVerifier(double lambda, double sigma, bool upper_only = false)
      : lambda_(lambda), sigma_(sigma), upper_only_(upper_only) {}
  void check(const DistancePair& p);
  std::size_t checked() const noexcept { return checked_; }
  std::size_t violations() const noexcept { return violations_; }
  const std::vector<DistancePair>& first_violations() const noexcept { return first_; }

 private:
  double lambda_;
  double sigma_;
  bool upper_only_;
  std::size_t checked_ = 0;
  std::size_t violations_ = 0;
  std::vector<DistancePair> first_;
};

/// Fit and post-verify a list of (d_source, d_target). Throws on empty
/// input, negative or non-finite distances, or a failed post-check.
QIFit fit_qi(const std::vector<std::pair<double, double>>& pairs);

/// N equally spaced points on the unit circle with the chordal metric
/// 2 sin(angle/2), the visual metric of the hyperbolic plane's boundary
/// seen from the disk center.
FiniteMetricSpace visual_metric_circle(std::size_t n);

/// Compares the chordal metric with exp(-(x|x')_o) for points at hyperbolic
/// radius `radius` on the rays through N boundary points.
struct VisualComparison {
  std::size_t pairs = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};
VisualComparison compare_visual_metric(std::size_t n, double radius);

/// The sampled-pair report of one pipeline run.
struct QIReport {
  std::size_t pair_count = 0;
  std::string product_mode;
  /// Two-sided fit of |f(x)f(x')| against |xx'|.
  QIFit product;
  /// Per tree: |f_a(x) f_a(x')| <= Lambda |xx'| + sigma.
  std::vector<UpperFit> per_tree_upper;
  /// |xx'| <= Lambda |f(x)f(x')| + sigma.
  UpperFit lower_direction;
  /// sigma(Lambda) of the product fit at a few reference values, for
  /// reading how the additive constant trades against Lambda.
  std::vector<std::pair<double, double>> sigma_profile;
  std::size_t radial_checks = 0;
  std::size_t radial_failures = 0;
  std::vector<std::string> notes;
};

}  // namespace hypembed
