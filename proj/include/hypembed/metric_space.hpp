#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypembed {

using PointIndex = std::uint32_t;

/// How the point indices of a generated space are arranged. Covering
/// strategies that exploit structure (arcs, blocks, cylinders) read this.
struct Layout {
  enum class Kind { unstructured, cyclic, linear, hierarchical };
  Kind kind = Kind::unstructured;
  /// Branching factor of the index hierarchy; used only by `hierarchical`.
  std::size_t branching = 0;
};

/// Recipe that regenerates a space exactly (see harness generators).
struct GeneratorDescriptor {
  std::string name;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;

  bool operator==(const GeneratorDescriptor&) const = default;
};

/// Sorted, duplicate-free set of point indices of one space.
class Subset {
 public:
  Subset() = default;
  Subset(std::initializer_list<PointIndex> points);
  explicit Subset(std::vector<PointIndex> points);

  /// Wraps an already sorted, unique vector without re-sorting.
  static Subset from_sorted(std::vector<PointIndex> points);

  bool empty() const noexcept { return points_.empty(); }
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(PointIndex p) const;
  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  std::span<const PointIndex> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }
  PointIndex operator[](std::size_t i) const { return points_[i]; }

  friend Subset set_union(const Subset& a, const Subset& b);
  friend Subset set_intersection(const Subset& a, const Subset& b);

  bool operator==(const Subset&) const = default;

 private:
  std::vector<PointIndex> points_;
};

Subset set_union(const Subset& a, const Subset& b);
Subset set_intersection(const Subset& a, const Subset& b);

/// A finite metric space with an explicit symmetric distance table.
///
/// Construction validates the metric axioms. The triangle inequality is
/// checked with a relative tolerance; generator-built spaces whose metric
/// is exact by construction may skip that O(n^3) scan.
class FiniteMetricSpace {
 public:
  enum class Validation { full, structural };

  static constexpr double kTriangleTolerance = 1e-12;

  FiniteMetricSpace(std::vector<std::string> ids, std::vector<double> table,
                    Validation validation = Validation::full,
                    double relative_tolerance = kTriangleTolerance);

  /// Builds the table from a distance callback over indices.
  template <class DistanceFn>
  static FiniteMetricSpace from_function(std::vector<std::string> ids, DistanceFn&& fn,
                                         Validation validation = Validation::full) {
    const std::size_t n = ids.size();
    std::vector<double> table(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = fn(i, j);
        table[i * n + j] = d;
        table[j * n + i] = d;
      }
    }
    return FiniteMetricSpace(std::move(ids), std::move(table), validation);
  }

  std::size_t size() const noexcept { return ids_.size(); }
  double operator()(PointIndex i, PointIndex j) const noexcept { return table_[i * size() + j]; }
  std::span<const double> row(PointIndex i) const noexcept {
    return {table_.data() + static_cast<std::size_t>(i) * size(), size()};
  }

  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(PointIndex i) const { return ids_.at(i); }
  /// Index of an identifier; throws for unknown ids.
  PointIndex index_of(const std::string& id) const;

  double diameter() const noexcept { return diameter_; }
  /// max_j d(i, j).
  double eccentricity(PointIndex i) const;
  Subset all_points() const;

  const Layout& layout() const noexcept { return layout_; }
  void set_layout(Layout layout) { layout_ = layout; }
  const std::optional<GeneratorDescriptor>& generator() const noexcept { return generator_; }
  void set_generator(GeneratorDescriptor g) { generator_ = std::move(g); }

  /// Largest relative excess d(i,k) - d(i,j) - d(j,k) over all triples,
  /// normalized by the diameter; 0 for a genuine metric.
  double worst_triangle_violation() const;

  const std::vector<double>& table() const noexcept { return table_; }

 private:
  std::vector<std::string> ids_;
  std::vector<double> table_;
  double diameter_ = 0.0;
  Layout layout_;
  std::optional<GeneratorDescriptor> generator_;
  std::map<std::string, PointIndex> index_;
};

}  // namespace hypembed
