#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>
#include "hypembed/char_sequence.hpp"
#include "hypembed/embedding.hpp"
#include "hypembed/profile.hpp"
#include "hypembed/qi_fit.hpp"

namespace hypembed {

using Json = nlohmann::ordered_json;

/// Format tags written into every document.
inline constexpr int kFormatVersion = 1;
inline constexpr const char* kEmbeddingCsvHeader = "# hypembed embedding csv v1";
inline constexpr const char* kPairsCsvHeader = "# hypembed pairs csv v1";

/// Space: ids plus either the generator descriptor or the full matrix.
Json space_to_json(const FiniteMetricSpace& space, bool force_matrix = false);
FiniteMetricSpace space_from_json(const Json& j);

Json ladder_to_json(const CoveringLadder& ladder);
CoveringLadder ladder_from_json(const Json& j);

Json charseq_to_json(const CharSequence& seq, const PropertyReport* report = nullptr);
CharSequence charseq_from_json(const Json& j);

Json report_to_json(const PropertyReport& report);
Json tree_to_json(const RootedTree& tree);
Json qireport_to_json(const QIReport& report);
Json profile_to_json(const CapacityProfile& profile);

/// Columns: index, level, point id, t, then one vertex id per color.
void write_embedding_csv(std::ostream& os, const ConeGrid& grid, const ProductEmbedding& embedding);
/// Parses the per-color vertex table back; checks header and shape.
std::vector<std::vector<VertexId>> read_embedding_csv(std::istream& is);

/// Columns: a, b, d_source, d_target.
void write_pairs_csv_header(std::ostream& os);
void write_pairs_csv_row(std::ostream& os, const DistancePair& p);

/// Writes `j` with two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace hypembed
