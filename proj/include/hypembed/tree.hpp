#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypembed/char_sequence.hpp"

namespace hypembed {

using VertexId = std::uint32_t;

/// Simplicial tree with unit edges. Vertex 0 is the root (level 0, the
/// whole space); every other vertex is one covering member of one color.
class RootedTree {
 public:
  struct Vertex {
    std::size_t level = 0;
    /// Index of the member within U_level^color; unset for the root.
    std::optional<std::size_t> member;
    std::optional<VertexId> parent;
    std::vector<VertexId> children;
    /// Number of edges to the root.
    std::size_t depth = 0;
  };

  explicit RootedTree(std::size_t color);

  /// Appends a vertex under `parent`; the parent must already exist and
  /// sit on a lower level.
  VertexId add_vertex(std::size_t level, std::size_t member, VertexId parent);

  std::size_t color() const noexcept { return color_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Vertex& vertex(VertexId v) const;
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  /// Vertex of member `member` of level `level`; the root for level 0.
  VertexId vertex_of(std::size_t level, std::size_t member) const;

  /// Length of the unique path; throws for foreign vertices.
  std::size_t distance(VertexId a, VertexId b) const;
  VertexId lowest_common_ancestor(VertexId a, VertexId b) const;

  /// Edges to the nearest ancestor whose level is at most `level`.
  std::size_t distance_to_levels_at_most(VertexId v, std::size_t level) const;

 private:
  std::size_t color_;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<VertexId>> by_level_;  // by_level_[j][member]
};

/// Builds T_a: level-j member U hangs under the same-color member U' of
/// the largest level j' < j with U contained in U' (the root if none).
/// Throws with a witness when two members of that level both qualify.
RootedTree build_tree(const FiniteMetricSpace& space, const CharSequence& seq, std::size_t color);

/// Structural audit of a tree against its sequence.
struct TreeAudit {
  bool connected = true;
  bool acyclic = true;
  bool unique_parent = true;
  bool levels_increase = true;
  bool containment = true;
  bool maximal_parent = true;
  std::vector<std::string> problems;

  bool ok() const noexcept {
    return connected && acyclic && unique_parent && levels_increase && containment && maximal_parent;
  }
};

TreeAudit audit_tree(const CharSequence& seq, const RootedTree& tree);

/// All-pairs path lengths by breadth-first search from every vertex.
std::vector<std::uint32_t> tree_distance_table(const RootedTree& tree);

}  // namespace hypembed
