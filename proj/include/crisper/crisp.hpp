// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <variant>

#include "crisper/fuzzy.hpp"

namespace crisper {

enum class InferenceMode { kSufficient, kAdditive };
enum class Geometry { kCompatibleRegions, kHyperrectangles };

/// mu_subject(x) >= mu_rival(x) for every rival. Rivals exclude the subject
/// and every rule whose score vector equals the subject's.
struct MembershipComparison {
  int subject = 0;
  std::vector<int> rivals;

  friend bool operator==(const MembershipComparison&, const MembershipComparison&) = default;
};

/// The subject class's score-weighted truth-degree sum is >= every other
/// class's sum.
struct ScoreSumComparison {
  int subject_class = 0;

  friend bool operator==(const ScoreSumComparison&, const ScoreSumComparison&) = default;
};

/// monostate = no side condition (region membership alone decides).
using CrispCondition = std::variant<std::monostate, MembershipComparison, ScoreSumComparison>;

struct CrispRule {
  int region_index = 0;  // into CrispRuleBase::regions
  CrispCondition condition;
  int consequent = 0;
  std::vector<int> subset;   // fuzzy rules active in the region (provenance)
  int source_rule = -1;      // subject fuzzy rule; -1 for additive emissions

  friend bool operator==(const CrispRule&, const CrispRule&) = default;
};

/// Rules are grouped consecutively by region; regions of distinct groups are
/// pairwise disjoint, so at most one group applies to any point.
struct CrispRuleBase {
  InferenceMode mode = InferenceMode::kSufficient;
  Geometry geometry = Geometry::kCompatibleRegions;
  FuzzyRuleBase source;
  std::vector<Region> regions;
  std::vector<CrispRule> rules;

  friend bool operator==(const CrispRuleBase&, const CrispRuleBase&) = default;
};

struct CompatibleSubset {
  std::vector<int> rule_indices;  // sorted ascending
  Box joint_activation;
  Region compatible_region;

  friend bool operator==(const CompatibleSubset&, const CompatibleSubset&) = default;
};

/// Apriori join-prune step: joins sorted (k-1)-sets sharing their first k-2
/// items and prunes candidates with a missing (k-1)-subset.
std::vector<std::vector<int>> combine_regions(const std::vector<std::vector<int>>& prev);

/// Points where exactly the rules in `subset` have positive support.
Region compatible_region(const std::vector<int>& subset, const FuzzyRuleBase& base);

/// All subsets with a non-empty compatible region, found level-wise with the
/// Apriori frontier gated on non-empty joint activation. Ordered by subset
/// size, then lexicographically.
std::vector<CompatibleSubset> mine_compatible_subsets(const FuzzyRuleBase& base);

CrispRuleBase mine_sufficient(const FuzzyRuleBase& base);
CrispRuleBase mine_additive(const FuzzyRuleBase& base);

/// Same rule emission, but over a decomposition of the rule supports into
/// disjoint boxes; each box lies inside or outside every support.
CrispRuleBase mine_hyperrectangles(const FuzzyRuleBase& base, InferenceMode mode);

/// Evaluates the crisp classifier; ties on non-strict comparisons resolve to
/// the emitted rule with the lowest subject rule index, then lowest class.
int classify_crisp(const CrispRuleBase& crb, std::span<const Real> x);

/// Union of all rule supports (equals the union of all compatible regions).
Region coverage(const FuzzyRuleBase& base);

}  // namespace crisper
