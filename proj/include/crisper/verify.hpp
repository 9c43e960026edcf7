// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "crisper/crisp.hpp"

namespace crisper {

struct Mismatch {
  std::vector<Real> point;
  int fuzzy = kAbstain;
  int crisp = kAbstain;
};

struct VerificationReport {
  long long samples_tested = 0;
  std::vector<Mismatch> mismatches;
  std::string sampling;

  double agreement_rate() const {
    if (samples_tested == 0) return 1.0;
    return 1.0 - static_cast<double>(mismatches.size()) / static_cast<double>(samples_tested);
  }
};

/// Finite sampling box: per dimension, the hull of the finite trapezoid
/// abscissae padded by one inter-endpoint step; all memberships are constant
/// beyond it, so one exterior sample per side suffices.
Box sampling_box(const FuzzyRuleBase& base);

/// Compares the fuzzy classifier (in the crisp base's mode) against the
/// crisp classifier on a regular grid of `resolution` points per dimension,
/// unioned with every finite endpoint and the midpoints between consecutive
/// endpoints, so every elementary cell receives an interior sample.
VerificationReport verify_grid(const FuzzyRuleBase& base, const CrispRuleBase& crb,
                               int resolution);

/// Same comparison on n uniform samples inside the sampling box;
/// deterministic under the seed.
VerificationReport verify_random(const FuzzyRuleBase& base, const CrispRuleBase& crb,
                                 long long n, std::uint64_t seed);

/// Ground-truth enumerator: tests every non-empty rule subset directly, no
/// Apriori pruning. Refuses bases with more than 20 rules.
std::vector<CompatibleSubset> brute_force_compatible_subsets(const FuzzyRuleBase& base);

/// Row-major grid of class labels over a 2-D bounding box (kAbstain = -1).
/// labels[iy * resolution + ix] holds the label at (x_values[ix], y_values[iy]).
struct BoundaryGrid {
  Real x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  int resolution = 0;
  std::vector<int> labels;

  friend bool operator==(const BoundaryGrid&, const BoundaryGrid&) = default;
};

/// Evaluates a classifier over a 2-D grid; throws unless bounds.dim() == 2
/// and resolution >= 2.
BoundaryGrid export_decision_boundary(const std::function<int(std::span<const Real>)>& classify,
                                      const Box& bounds, int resolution);

/// CSV rendering: header "x_min,x_max,y_min,y_max,resolution", then one row
/// of labels per y value.
std::string boundary_csv(const BoundaryGrid& grid);

}  // namespace crisper
