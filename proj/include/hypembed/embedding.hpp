#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypembed/cone.hpp"
#include "hypembed/tree.hpp"

namespace hypembed {

/// f_a(x) for one color: the vertex of the level-j member of color a
/// nearest to pi_j(x), ties to the smallest member index; the root for the
/// cone vertex.
VertexId embed_point(const ConeGrid& grid, const CharSequence& seq, const RootedTree& tree, std::size_t index);

/// The map x -> (f_a(x))_a over a whole grid, with the trees it lands in.
/// Distances in the product are the sum over colors of tree distances.
class ProductEmbedding {
 public:
  ProductEmbedding(std::vector<RootedTree> trees, std::vector<VertexId> table, std::size_t points);

  std::size_t color_count() const noexcept { return trees_.size(); }
  std::size_t point_count() const noexcept { return points_; }
  const std::vector<RootedTree>& trees() const noexcept { return trees_; }
  const RootedTree& tree(std::size_t color) const { return trees_.at(color); }

  /// f_a(x) for grid index x.
  VertexId image(std::size_t index, std::size_t color) const;
  std::size_t tree_distance(std::size_t a, std::size_t b, std::size_t color) const;
  std::size_t product_distance(std::size_t a, std::size_t b) const;

  static constexpr const char* kProductMode = "l1";

 private:
  std::vector<RootedTree> trees_;
  std::vector<VertexId> table_;  // table_[index * colors + color]
  std::size_t points_;
};

/// Builds every tree and maps every grid point. Throws when the grid and
/// the sequence disagree on r, depth or the underlying point count.
ProductEmbedding embed_grid(const FiniteMetricSpace& space, const ConeGrid& grid, const CharSequence& seq);

struct RadialWitness {
  std::size_t color = 0;
  /// Tree distance from f_a(x) to the vertices of level <= i.
  std::size_t m = 0;
};

/// Best color for the radial bound at grid point `index` (level j) and
/// i <= j. Throws with the full witness when M + 1 < (j - i + 1) / |A|.
RadialWitness radial_check(const ConeGrid& grid, const ProductEmbedding& embedding, std::size_t index, std::size_t i);

/// Triangle with sides p, q, t and t >= p: p + q <= 3t. Vacuously true
/// when t < p. `slack` absorbs rounding in floating side lengths.
bool short_side_bound_holds(double p, double q, double t, double slack = 1e-12);

}  // namespace hypembed
