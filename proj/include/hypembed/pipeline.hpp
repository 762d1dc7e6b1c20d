#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hypembed/base_sequence.hpp"
#include "hypembed/embedding.hpp"
#include "hypembed/qi_fit.hpp"
#include "hypembed/serialization.hpp"

namespace hypembed {

struct PipelineConfig {
  std::string generator = "circle";
  std::map<std::string, double> params{{"N", 512}};
  std::uint64_t seed = 0;
  double r = 0.125;
  std::size_t depth = 4;
  std::size_t colors = 2;
  double delta = 0.1;
  std::optional<double> lambda;
  /// Empty selects the strategy matching the space layout.
  std::string strategy;
  bool enforce_standing_assumptions = true;
  std::string product_mode = "l1";
  /// Empty means no files are written.
  std::string output_dir;
  /// Also write every sampled pair to pairs.csv.
  bool write_pairs = false;

  /// Throws naming the first invalid field.
  void validate() const;
};

/// Fields present in `j` override `base`; unknown keys are rejected.
PipelineConfig config_from_json(const Json& j, PipelineConfig base = {});
Json config_to_json(const PipelineConfig& c);

struct TreeSummary {
  std::size_t color = 0;
  std::size_t vertices = 0;
  TreeAudit audit;
  double delta_hyperbolicity = 0.0;
};

struct PipelineResult {
  /// False iff some lemma-level check failed.
  bool passed = true;
  std::vector<std::string> failures;
  std::vector<std::string> log;

  std::shared_ptr<const FiniteMetricSpace> space;
  std::optional<CharSequence> seq;
  std::optional<PropertyReport> verification;
  std::shared_ptr<const ConeGrid> grid;
  std::optional<ProductEmbedding> embedding;
  std::vector<TreeSummary> trees;
  QIReport qi;
};

/// generate -> build_base -> separate -> verify_char_seq -> build_grid ->
/// build_tree -> embed_grid -> radial_check -> fit_qi. Stage exceptions
/// are rethrown as StageError with the stage name; check failures clear
/// `passed` instead. With an output directory the bundle is written there
/// (log.txt even when a stage throws).
PipelineResult run_pipeline(const PipelineConfig& config);

/// Stage entry points. Each re-validates what it consumes.
FiniteMetricSpace stage_generate(const PipelineConfig& config);
CharSequence stage_sequence(const FiniteMetricSpace& space, const PipelineConfig& config, PropertyReport* report);
std::vector<TreeSummary> stage_trees(const FiniteMetricSpace& space, const CharSequence& seq, std::vector<RootedTree>* out);
/// Exhaustive radial check over all grid points and i <= level. Returns the
/// failure count; messages go to `failures` (at most `keep`).
std::size_t stage_radial(const ConeGrid& grid, const ProductEmbedding& embedding, std::size_t* checks,
                         std::vector<std::string>* failures, std::size_t keep = 8);
/// All grid pairs: product fit, per-tree upper fits and the post-check.
/// With `pairs_csv` every pair is streamed there as well.
QIReport stage_fit(const ConeGrid& grid, const ProductEmbedding& embedding, std::ostream* pairs_csv = nullptr);

/// Name of the environment variable giving the default output root.
inline constexpr const char* kOutputRootEnv = "HYPEMBED_OUTPUT_ROOT";

}  // namespace hypembed
