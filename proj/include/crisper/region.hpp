// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "crisper/box.hpp"

namespace crisper {

/// Finite union of pairwise-disjoint non-empty boxes, kept in a canonical
/// sorted order. All set operations are exact; differences of open sets keep
/// their closed boundary singletons.
class Region {
 public:
  explicit Region(int dim);  // empty region

  static Region from_box(const Box& box);
  /// Decomposes possibly-overlapping boxes into a disjoint cover.
  static Region from_boxes(int dim, const std::vector<Box>& boxes);
  /// Builds a region from boxes that are already pairwise disjoint; verifies
  /// disjointness and throws std::invalid_argument otherwise.
  static Region from_disjoint(int dim, std::vector<Box> boxes);

  int dim() const { return dim_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  bool is_empty() const { return boxes_.empty(); }

  /// Exact point membership; throws on NaN coordinates or wrong dimension.
  bool contains(std::span<const Real> x) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  Region(int dim, std::vector<Box> boxes) : dim_(dim), boxes_(std::move(boxes)) {}
  friend Region detail_from_cells(int dim, std::vector<Box> cells);

  int dim_ = 0;
  std::vector<Box> boxes_;
};

Region region_union(const Region& a, const Region& b);
Region region_intersect(const Region& a, const Region& b);
Region region_difference(const Region& a, const Region& b);

/// Disjoint cover of the union of the input boxes.
Region disjoint_decomposition(int dim, const std::vector<Box>& boxes);

/// Exact set difference (union of a) \ (union of b) of raw box collections.
Region boxes_difference(int dim, const std::vector<Box>& a, const std::vector<Box>& b);

/// Splits the space covered by the inputs into disjoint boxes labeled with
/// the exact subset of input boxes covering them (sorted ascending indices).
/// Merging never crosses label boundaries, so every output box lies entirely
/// inside or outside each input box. Uncovered space is omitted.
std::vector<std::pair<Box, std::vector<int>>> overlap_partition(
    int dim, const std::vector<Box>& boxes);

/// Greedily merges adjacent disjoint boxes along each axis; exact, preserves
/// the point set. Exposed for reuse by the miners.
std::vector<Box> merge_disjoint_boxes(int dim, std::vector<Box> boxes);

}  // namespace crisper
