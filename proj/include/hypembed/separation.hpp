#pragma once

#include "hypembed/char_sequence.hpp"

namespace hypembed {

/// U -> B_{-4s}(U) *_{delta s} Ghat, memberwise. Requires Ghat to be
/// delta*s-disjoint with mesh(Ghat) <= 2s and delta in (0, 2/3]; throws
/// naming the violated bound otherwise. Outputs are positional and may be
/// empty.
Family ast_shrink(const FiniteMetricSpace& space, const Family& f, const Family& ghat, double s, double delta);

struct SeparationOptions {
  /// Enforce 2r/(1-r) <= delta/4 <= 1/6 and (lambda+1) r < delta/2 before
  /// running. Without it the recursion still runs and the verifier alone
  /// certifies the result.
  bool enforce_standing_assumptions = true;
  /// Throw when the separated sequence fails verification.
  bool require_verification = true;
};

/// Throws describing the first violated standing assumption, if any.
void check_standing_assumptions(double r, double delta, double lambda);

/// Runs the separation recursion on every color and intersects the
/// per-level results. The output declares delta/2, gamma = delta/4 and
/// lambda+1 relative to the base constants.
CharSequence separate(const FiniteMetricSpace& space, const BaseSequence& base, const SeparationOptions& options = {});

/// gamma_{j,j} = delta/2, gamma_{k,j} = gamma_{k-1,j} - 2 r^{k-j} for 1 <= j <= k <= depth.
std::vector<GammaTraceEntry> gamma_recursion(double r, double delta, std::size_t depth);

}  // namespace hypembed
