// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "crisper/interval.hpp"

namespace crisper {

/// Axis-aligned box: a product of intervals, one per feature.
class Box {
 public:
  explicit Box(std::vector<Interval> dims);
  static Box all(int dim);

  int dim() const { return static_cast<int>(dims_.size()); }
  const Interval& operator[](int d) const { return dims_[d]; }
  const std::vector<Interval>& dims() const { return dims_; }

  bool is_empty() const;
  bool contains(std::span<const Real> x) const;
  /// Superset test; empty boxes are subsets of everything.
  bool contains(const Box& o) const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<Interval> dims_;
};

Box intersect(const Box& a, const Box& b);
bool box_less(const Box& a, const Box& b);

}  // namespace crisper
