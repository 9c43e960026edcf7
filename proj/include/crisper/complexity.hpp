// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "crisper/crisp.hpp"

namespace crisper {

struct ComplexityReport {
  int fuzzy_rule_count = 0;
  std::int64_t crisp_rule_count = 0;      // compatible-region geometry
  std::int64_t hyperrect_rule_count = 0;  // disjoint-box geometry
  std::int64_t sufficient_upper_bound = 0;
  std::int64_t additive_upper_bound = 0;
  double degree_of_complexity = 0.0;  // crisp_rule_count / sufficient bound
};

/// n * 2^(n-1), exact; throws std::overflow_error when it exceeds int64.
std::int64_t upper_bound_sufficient(int n);

/// (2^n - 1) * c, exact; throws std::overflow_error when it exceeds int64.
std::int64_t upper_bound_additive(int n, int c);

double degree_of_complexity(std::int64_t crisp_count, int n);

/// Half-up rounding to two decimals, used for display only.
double round_half_up_2(double x);

/// Mines both geometries and assembles the report.
ComplexityReport analyze(const FuzzyRuleBase& base, InferenceMode mode);

}  // namespace crisper
