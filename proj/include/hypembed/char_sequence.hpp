#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypembed/coverings.hpp"

namespace hypembed {

/// Relative slack when a distance is compared with a scale r^j. Powers of r
/// and generator distances such as 3^-k round independently.
inline constexpr double kScaleSlack = 1e-12;

/// Colored coverings U_1..U_J at scales r, r^2, ..., r^J. Every level uses
/// the same color set 0..color_count-1.
struct CoveringLadder {
  double r = 0.0;
  std::size_t color_count = 0;
  std::vector<ColoredCovering> levels;  // levels[j-1] holds U_j

  std::size_t depth() const noexcept { return levels.size(); }
  /// r^j.
  double scale(std::size_t j) const;
  const ColoredCovering& level(std::size_t j) const { return levels.at(j - 1); }
  const Family& members(std::size_t j, std::size_t color) const { return levels.at(j - 1).colors.at(color); }
};

/// Requested versus achieved construction parameters.
struct Provenance {
  std::string strategy;
  std::size_t requested_colors = 0;
  std::size_t achieved_colors = 0;
  double requested_delta = 0.0;
  double requested_lambda = 0.0;
  double achieved_delta = 0.0;
  double achieved_lambda = 0.0;
  std::size_t padded_members = 0;
  std::vector<std::string> notes;
};

/// Output of a covering strategy: mesh, Lebesgue and net bounds, plus per-color
/// delta r^j-disjointness and the inner-ball property.
struct BaseSequence {
  CoveringLadder ladder;
  double delta = 0.0;
  double lambda = 1.0;
  Provenance provenance;
};

/// gamma_{k,j} from the separation recursion.
struct GammaTraceEntry {
  std::size_t k = 0;
  std::size_t j = 0;
  double gamma = 0.0;
};

/// Total shrink applied to level j: the finite sum to depth J and the
/// closed-form tail bound 2 r^{j+1} / (1 - r).
struct ShrinkBudget {
  std::size_t j = 0;
  double finite_sum = 0.0;
  double closed_form = 0.0;
};

/// A gamma-separated characteristic sequence with declared constants.
struct CharSequence {
  CoveringLadder ladder;
  double delta = 0.0;
  double gamma = 0.0;
  double lambda = 1.0;
  /// Constants of the base sequence this one was separated from (equal to
  /// the declared ones for hand-built sequences).
  double base_delta = 0.0;
  double base_lambda = 1.0;
  Provenance provenance;
  std::vector<GammaTraceEntry> gamma_trace;
  std::vector<ShrinkBudget> shrink_budget;
};

/// Location of a failing (or extremal) check. Unused fields are -1.
struct Witness {
  long level = -1;
  long color = -1;
  long member = -1;
  long other_level = -1;
  long other_member = -1;
  long point = -1;
  std::string detail;
};

struct CheckResult {
  std::string property;
  bool passed = true;
  /// Achieved ratio (value / r^j) at the worst level.
  double achieved = 0.0;
  /// Declared bound the ratio is compared against.
  double bound = 0.0;
  Witness worst;
};

struct AchievedConstants {
  double delta = 0.0;   // min_j L(U_j) / r^j
  double gamma = 0.0;   // largest separation coefficient
  double lambda = 0.0;  // max_j max_a net radius / r^j
  double mesh_ratio = 0.0;  // max_j mesh(U_j) / r^j
  double disjointness = 0.0;  // min_j min_a disjointness radius / r^j
  double inner_ball = 0.0;    // min_j min_U inner radius / r^j
};

struct PropertyReport {
  bool passed = true;
  std::vector<CheckResult> checks;
  AchievedConstants achieved;
  double declared_delta = 0.0;
  double declared_gamma = 0.0;
  double declared_lambda = 0.0;
  std::vector<std::string> notes;

  const CheckResult* find(const std::string& property) const;
};

/// Checks mesh and Lebesgue bounds, per-color nets and gamma-separation
/// against the declared constants. Failures are reported, never thrown.
PropertyReport verify_char_seq(const FiniteMetricSpace& space, const CharSequence& seq);

/// Checks mesh, Lebesgue, nets, per-color delta r^j-disjointness and inner balls.
PropertyReport verify_base(const FiniteMetricSpace& space, const BaseSequence& base);

/// Largest gamma for which gamma-separation holds, with the binding witness.
double separation_coefficient(const FiniteMetricSpace& space, const CoveringLadder& ladder, Witness* worst = nullptr);

}  // namespace hypembed
