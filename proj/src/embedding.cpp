#include "hypembed/embedding.hpp"

#include <cmath>
#include <sstream>

#include "hypembed/error.hpp"
#include "hypembed/neighborhood.hpp"

namespace hypembed {

VertexId embed_point(const ConeGrid& grid, const CharSequence& seq, const RootedTree& tree, std::size_t index) {
  if (index >= grid.size()) throw Error("point is not on the grid");
  const std::size_t j = grid.level(index);
  if (j == 0) return 0;
  if (j > seq.ladder.depth()) throw Error("grid level exceeds the sequence depth");
  const PointIndex z = grid.projection(index);
  const Family& fam = seq.ladder.members(j, tree.color());
  if (fam.empty()) throw Error("color " + std::to_string(tree.color()) + " has no members at level " + std::to_string(j));
  std::size_t best = 0;
  double best_d = dist_to_set(grid.space(), z, fam[0]);
  for (std::size_t i = 1; i < fam.size() && best_d > 0.0; ++i) {
    const double d = dist_to_set(grid.space(), z, fam[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return tree.vertex_of(j, best);
}

ProductEmbedding::ProductEmbedding(std::vector<RootedTree> trees, std::vector<VertexId> table, std::size_t points)
    : trees_(std::move(trees)), table_(std::move(table)), points_(points) {
  if (trees_.empty()) throw Error("embedding needs at least one tree");
  if (table_.size() != points_ * trees_.size()) throw Error("embedding table has the wrong size");
  for (std::size_t x = 0; x < points_; ++x)
    for (std::size_t a = 0; a < trees_.size(); ++a)
      if (table_[x * trees_.size() + a] >= trees_[a].size()) throw Error("embedding table refers to a missing vertex");
}

VertexId ProductEmbedding::image(std::size_t index, std::size_t color) const {
  if (index >= points_ || color >= trees_.size()) throw Error("embedding lookup out of range");
  return table_[index * trees_.size() + color];
}

std::size_t ProductEmbedding::tree_distance(std::size_t a, std::size_t b, std::size_t color) const {
  return trees_.at(color).distance(image(a, color), image(b, color));
}

std::size_t ProductEmbedding::product_distance(std::size_t a, std::size_t b) const {
  std::size_t sum = 0;
  for (std::size_t c = 0; c < trees_.size(); ++c) sum += tree_distance(a, b, c);
  return sum;
}

ProductEmbedding embed_grid(const FiniteMetricSpace& space, const ConeGrid& grid, const CharSequence& seq) {
  if (&grid.space() != &space && grid.space().size() != space.size())
    throw Error("grid and sequence live over different spaces");
  if (std::abs(grid.r() - seq.ladder.r) > 1e-15 * std::max(1.0, seq.ladder.r))
    throw Error("grid r does not match the sequence r");
  if (grid.depth() > seq.ladder.depth()) throw Error("grid is deeper than the sequence");
  const std::size_t colors = seq.ladder.color_count;
  std::vector<RootedTree> trees;
  trees.reserve(colors);
  for (std::size_t a = 0; a < colors; ++a) trees.push_back(build_tree(space, seq, a));
  std::vector<VertexId> table(grid.size() * colors);
  for (std::size_t x = 0; x < grid.size(); ++x)
    for (std::size_t a = 0; a < colors; ++a) table[x * colors + a] = embed_point(grid, seq, trees[a], x);
  return ProductEmbedding(std::move(trees), std::move(table), grid.size());
}

RadialWitness radial_check(const ConeGrid& grid, const ProductEmbedding& embedding, std::size_t index, std::size_t i) {
  const std::size_t j = grid.level(index);
  if (i > j) throw Error("radial check needs i <= j");
  RadialWitness best;
  std::vector<std::size_t> per_color;
  for (std::size_t a = 0; a < embedding.color_count(); ++a) {
    const std::size_t m = embedding.tree(a).distance_to_levels_at_most(embedding.image(index, a), i);
    per_color.push_back(m);
    if (a == 0 || m > best.m) best = {a, m};
  }
  // Integer form of M + 1 >= (j - i + 1) / |A|.
  if ((best.m + 1) * embedding.color_count() < j - i + 1) {
    std::ostringstream os;
    os << "radial bound fails at grid point " << index << " (level " << j << ", base point "
       << grid.projection(index) << "), i = " << i << ": per-color M =";
    for (std::size_t m : per_color) os << ' ' << m;
    os << ", need M + 1 >= " << static_cast<double>(j - i + 1) / static_cast<double>(embedding.color_count());
    throw Error(os.str());
  }
  return best;
}

bool short_side_bound_holds(double p, double q, double t, double slack) {
  if (t < p) return true;
  return p + q <= 3.0 * t + slack * std::max({p, q, t, 1.0});
}

}  // namespace hypembed
