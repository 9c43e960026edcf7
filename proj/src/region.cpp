// SPDX-License-Identifier: Apache-2.0
#include "crisper/region.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace crisper {

Region detail_from_cells(int dim, std::vector<Box> cells);

namespace {

// Elementary cells induced by finite cut values: open gaps between
// consecutive cuts plus a closed singleton at every cut. Singletons are
// first-class cells so measure-zero boundary sets survive set operations.
std::vector<Interval> elementary_cells(std::vector<Real> cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Interval> cells;
  cells.reserve(2 * cuts.size() + 1);
  Real prev = -kInf;
  for (Real v : cuts) {
    cells.push_back(Interval::open(prev, v));
    cells.push_back(Interval::singleton(v));
    prev = v;
  }
  cells.push_back(Interval::open(prev, kInf));
  return cells;
}

std::vector<std::vector<Interval>> build_grid(int dim, const std::vector<Box>& boxes) {
  std::vector<std::vector<Interval>> grid(static_cast<size_t>(dim));
  for (int d = 0; d < dim; ++d) {
    std::vector<Real> cuts;
    for (const Box& b : boxes) {
      const Interval& iv = b[d];
      if (std::isfinite(iv.lo())) cuts.push_back(iv.lo());
      if (std::isfinite(iv.hi())) cuts.push_back(iv.hi());
    }
    grid[static_cast<size_t>(d)] = elementary_cells(std::move(cuts));
  }
  return grid;
}

// Walks every grid cell covered by at least one box; `fn` receives the cell
// and the sorted indices of the boxes containing it. Input boxes must be
// non-empty and of dimension `dim`.
void for_each_covered_cell(
    int dim, const std::vector<Box>& boxes,
    const std::function<void(const std::vector<Interval>&, const std::vector<int>&)>& fn) {
  if (boxes.empty()) return;
  const auto grid = build_grid(dim, boxes);
  std::vector<Interval> cell(static_cast<size_t>(dim), Interval::all());
  std::vector<std::vector<int>> alive(static_cast<size_t>(dim) + 1);
  alive[0].resize(boxes.size());
  for (size_t i = 0; i < boxes.size(); ++i) alive[0][i] = static_cast<int>(i);

  std::function<void(int)> rec = [&](int d) {
    if (d == dim) {
      fn(cell, alive[static_cast<size_t>(dim)]);
      return;
    }
    for (const Interval& c : grid[static_cast<size_t>(d)]) {
      if (c.is_empty()) continue;
      auto& next = alive[static_cast<size_t>(d) + 1];
      next.clear();
      for (int i : alive[static_cast<size_t>(d)]) {
        if (boxes[static_cast<size_t>(i)][d].contains(c)) next.push_back(i);
      }
      if (next.empty()) continue;
      cell[static_cast<size_t>(d)] = c;
      rec(d + 1);
    }
  };
  rec(0);
}

bool mergeable(const Interval& u, const Interval& v) {
  // disjoint adjacency: exactly one of the touching flags is closed
  return u.hi() == v.lo() && std::isfinite(u.hi()) && (u.hi_closed() != v.lo_closed());
}

std::vector<Box> drop_empty(const std::vector<Box>& boxes, int dim) {
  std::vector<Box> out;
  out.reserve(boxes.size());
  for (const Box& b : boxes) {
    if (b.dim() != dim) throw std::invalid_argument("box dimension mismatch");
    if (!b.is_empty()) out.push_back(b);
  }
  return out;
}

Region combine(int dim, const std::vector<Box>& raw_a, const std::vector<Box>& raw_b,
               bool keep_a_only, bool keep_b_only, bool keep_both) {
  const std::vector<Box> a = drop_empty(raw_a, dim);
  const std::vector<Box> b = drop_empty(raw_b, dim);
  std::vector<Box> all = a;
  all.insert(all.end(), b.begin(), b.end());
  const int na = static_cast<int>(a.size());
  std::vector<Box> kept;
  for_each_covered_cell(dim, all,
                        [&](const std::vector<Interval>& cell, const std::vector<int>& alive) {
                          bool in_a = false, in_b = false;
                          for (int i : alive) {
                            (i < na ? in_a : in_b) = true;
                          }
                          const bool keep = (in_a && in_b)   ? keep_both
                                            : in_a           ? keep_a_only
                                                             : keep_b_only;
                          if (keep) kept.push_back(Box(cell));
                        });
  return detail_from_cells(dim, std::move(kept));
}

}  // namespace

Region detail_from_cells(int dim, std::vector<Box> cells) {
  auto merged = merge_disjoint_boxes(dim, std::move(cells));
  return Region(dim, std::move(merged));
}

std::vector<Box> merge_disjoint_boxes(int dim, std::vector<Box> boxes) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int d = 0; d < dim; ++d) {
      std::sort(boxes.begin(), boxes.end(), [&](const Box& x, const Box& y) {
        for (int k = 0; k < dim; ++k) {
          if (k == d) continue;
          if (!(x[k] == y[k])) return interval_less(x[k], y[k]);
        }
        if (!(x[d] == y[d])) return interval_less(x[d], y[d]);
        return false;
      });
      for (size_t i = 0; i + 1 < boxes.size();) {
        bool same_others = true;
        for (int k = 0; k < dim && same_others; ++k) {
          if (k != d && !(boxes[i][k] == boxes[i + 1][k])) same_others = false;
        }
        if (same_others && mergeable(boxes[i][d], boxes[i + 1][d])) {
          std::vector<Interval> dims = boxes[i].dims();
          dims[static_cast<size_t>(d)] =
              Interval::make(boxes[i][d].lo(), boxes[i][d].lo_closed(),
                             boxes[i + 1][d].hi(), boxes[i + 1][d].hi_closed());
          boxes[i] = Box(std::move(dims));
          boxes.erase(boxes.begin() + static_cast<long>(i) + 1);
          changed = true;
        } else {
          ++i;
        }
      }
    }
  }
  std::sort(boxes.begin(), boxes.end(), box_less);
  return boxes;
}

Region::Region(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("region must have at least one dimension");
}

Region Region::from_box(const Box& box) {
  if (box.is_empty()) return Region(box.dim());
  return Region(box.dim(), {box});
}

Region Region::from_boxes(int dim, const std::vector<Box>& boxes) {
  return disjoint_decomposition(dim, boxes);
}

Region Region::from_disjoint(int dim, std::vector<Box> boxes) {
  std::vector<Box> clean = drop_empty(boxes, dim);
  for (size_t i = 0; i < clean.size(); ++i) {
    for (size_t j = i + 1; j < clean.size(); ++j) {
      if (!intersect(clean[i], clean[j]).is_empty()) {
        throw std::invalid_argument("region boxes are not pairwise disjoint");
      }
    }
  }
  std::sort(clean.begin(), clean.end(), box_less);
  return Region(dim, std::move(clean));
}

bool Region::contains(std::span<const Real> x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("point dimension does not match region dimension");
  }
  for (Real v : x) {
    if (std::isnan(v)) throw std::invalid_argument("point coordinate is NaN");
  }
  for (const Box& b : boxes_) {
    if (b.contains(x)) return true;
  }
  return false;
}

Region region_union(const Region& a, const Region& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("region dimension mismatch");
  return combine(a.dim(), a.boxes(), b.boxes(), true, true, true);
}

Region region_intersect(const Region& a, const Region& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("region dimension mismatch");
  return combine(a.dim(), a.boxes(), b.boxes(), false, false, true);
}

Region region_difference(const Region& a, const Region& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("region dimension mismatch");
  return combine(a.dim(), a.boxes(), b.boxes(), true, false, false);
}

Region disjoint_decomposition(int dim, const std::vector<Box>& boxes) {
  return combine(dim, boxes, {}, true, false, true);
}

Region boxes_difference(int dim, const std::vector<Box>& a, const std::vector<Box>& b) {
  return combine(dim, a, b, true, false, false);
}

std::vector<std::pair<Box, std::vector<int>>> overlap_partition(
    int dim, const std::vector<Box>& boxes) {
  // keep original indices for the labels, skipping empty inputs
  std::vector<Box> clean;
  std::vector<int> index_of;
  for (size_t i = 0; i < boxes.size(); ++i) {
    if (boxes[i].dim() != dim) throw std::invalid_argument("box dimension mismatch");
    if (!boxes[i].is_empty()) {
      clean.push_back(boxes[i]);
      index_of.push_back(static_cast<int>(i));
    }
  }
  std::map<std::vector<int>, std::vector<Box>> groups;
  for_each_covered_cell(dim, clean,
                        [&](const std::vector<Interval>& cell, const std::vector<int>& alive) {
                          std::vector<int> label;
                          label.reserve(alive.size());
                          for (int i : alive) label.push_back(index_of[static_cast<size_t>(i)]);
                          groups[std::move(label)].push_back(Box(cell));
                        });
  std::vector<std::pair<Box, std::vector<int>>> out;
  for (auto& [label, cells] : groups) {
    for (Box& b : merge_disjoint_boxes(dim, std::move(cells))) {
      out.emplace_back(std::move(b), label);
    }
  }
  return out;
}

}  // namespace crisper
