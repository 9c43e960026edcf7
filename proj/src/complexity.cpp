// SPDX-License-Identifier: Apache-2.0
#include "crisper/complexity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace crisper {

namespace {

std::int64_t checked(unsigned __int128 v, const char* what) {
  if (v > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error(what);
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t upper_bound_sufficient(int n) {
  if (n < 1) throw std::invalid_argument("rule count must be positive");
  if (n > 63) throw std::overflow_error("sufficient upper bound overflows");
  const unsigned __int128 v = static_cast<unsigned __int128>(n) << (n - 1);
  return checked(v, "sufficient upper bound overflows");
}

std::int64_t upper_bound_additive(int n, int c) {
  if (n < 1 || c < 1) throw std::invalid_argument("rule and class counts must be positive");
  if (n > 63) throw std::overflow_error("additive upper bound overflows");
  const unsigned __int128 v =
      ((static_cast<unsigned __int128>(1) << n) - 1) * static_cast<unsigned __int128>(c);
  return checked(v, "additive upper bound overflows");
}

double degree_of_complexity(std::int64_t crisp_count, int n) {
  if (crisp_count < 0) throw std::invalid_argument("crisp rule count must be non-negative");
  return static_cast<double>(crisp_count) / static_cast<double>(upper_bound_sufficient(n));
}

double round_half_up_2(double x) {
  return std::floor(x * 100.0 + 0.5) / 100.0;
}

ComplexityReport analyze(const FuzzyRuleBase& base, InferenceMode mode) {
  ComplexityReport rep;
  rep.fuzzy_rule_count = base.rule_count();
  const CrispRuleBase regions = mode == InferenceMode::kSufficient ? mine_sufficient(base)
                                                                   : mine_additive(base);
  rep.crisp_rule_count = static_cast<std::int64_t>(regions.rules.size());
  rep.hyperrect_rule_count =
      static_cast<std::int64_t>(mine_hyperrectangles(base, mode).rules.size());
  rep.sufficient_upper_bound = upper_bound_sufficient(base.rule_count());
  rep.additive_upper_bound = upper_bound_additive(base.rule_count(), base.class_count());
  rep.degree_of_complexity = degree_of_complexity(rep.crisp_rule_count, base.rule_count());
  return rep;
}

}  // namespace crisper
