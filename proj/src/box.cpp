// SPDX-License-Identifier: Apache-2.0
#include "crisper/box.hpp"

#include <stdexcept>
#include <utility>

namespace crisper {

Box::Box(std::vector<Interval> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("box must have at least one dimension");
}

Box Box::all(int dim) {
  if (dim < 1) throw std::invalid_argument("box must have at least one dimension");
  return Box(std::vector<Interval>(static_cast<size_t>(dim), Interval::all()));
}

bool Box::is_empty() const {
  for (const Interval& iv : dims_) {
    if (iv.is_empty()) return true;
  }
  return false;
}

bool Box::contains(std::span<const Real> x) const {
  if (static_cast<int>(x.size()) != dim()) {
    throw std::invalid_argument("point dimension does not match box dimension");
  }
  for (int d = 0; d < dim(); ++d) {
    if (!dims_[static_cast<size_t>(d)].contains(x[static_cast<size_t>(d)])) return false;
  }
  return true;
}

bool Box::contains(const Box& o) const {
  if (o.is_empty()) return true;
  if (o.dim() != dim()) {
    throw std::invalid_argument("box dimension mismatch");
  }
  for (int d = 0; d < dim(); ++d) {
    if (!dims_[static_cast<size_t>(d)].contains(o[d])) return false;
  }
  return true;
}

Box intersect(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("box dimension mismatch");
  std::vector<Interval> dims;
  dims.reserve(static_cast<size_t>(a.dim()));
  for (int d = 0; d < a.dim(); ++d) {
    dims.push_back(intersect(a[d], b[d]));
  }
  return Box(std::move(dims));
}

bool box_less(const Box& a, const Box& b) {
  for (int d = 0; d < a.dim() && d < b.dim(); ++d) {
    if (a[d] == b[d]) continue;
    return interval_less(a[d], b[d]);
  }
  return a.dim() < b.dim();
}

}  // namespace crisper
