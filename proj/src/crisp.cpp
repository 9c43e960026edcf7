// SPDX-License-Identifier: Apache-2.0
#include "crisper/crisp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace crisper {

namespace {

std::vector<Box> all_supports(const FuzzyRuleBase& base) {
  std::vector<Box> supports;
  supports.reserve(static_cast<size_t>(base.rule_count()));
  for (int r = 0; r < base.rule_count(); ++r) supports.push_back(base.rule_support(r));
  return supports;
}

Region compatible_region_from(const std::vector<Box>& supports, const std::vector<int>& subset,
                              int dim) {
  Box jact = supports[static_cast<size_t>(subset[0])];
  for (size_t i = 1; i < subset.size(); ++i) {
    jact = intersect(jact, supports[static_cast<size_t>(subset[i])]);
  }
  std::vector<Box> others;
  for (size_t r = 0; r < supports.size(); ++r) {
    if (!std::binary_search(subset.begin(), subset.end(), static_cast<int>(r))) {
      others.push_back(supports[r]);
    }
  }
  return boxes_difference(dim, {jact}, others);
}

void emit_for_region(const FuzzyRuleBase& base, InferenceMode mode, int region_index,
                     const std::vector<int>& active, std::vector<CrispRule>& out) {
  if (mode == InferenceMode::kSufficient) {
    for (int r : active) {
      std::vector<int> rivals;
      for (int o : active) {
        if (o != r &&
            base.rules()[static_cast<size_t>(o)].scores != base.rules()[static_cast<size_t>(r)].scores) {
          rivals.push_back(o);
        }
      }
      CrispCondition cond;
      if (!rivals.empty()) cond = MembershipComparison{r, std::move(rivals)};
      const int cons = base.consequent(r);
      // one rule per distinct (comparison, consequent) pattern within a region
      bool dup = false;
      for (auto it = out.rbegin(); it != out.rend() && it->region_index == region_index; ++it) {
        if (it->condition == cond && it->consequent == cons) {
          dup = true;
          break;
        }
      }
      if (!dup) out.push_back({region_index, std::move(cond), cons, active, r});
    }
  } else {
    std::vector<int> attainable;
    for (int c = 0; c < base.class_count(); ++c) {
      for (int r : active) {
        if (base.rules()[static_cast<size_t>(r)].scores[static_cast<size_t>(c)] == 1) {
          attainable.push_back(c);
          break;
        }
      }
    }
    for (int c : attainable) {
      CrispCondition cond;
      if (attainable.size() > 1) cond = ScoreSumComparison{c};
      out.push_back({region_index, std::move(cond), c, active, -1});
    }
  }
}

CrispRuleBase mine_regions(const FuzzyRuleBase& base, InferenceMode mode) {
  CrispRuleBase crb{mode, Geometry::kCompatibleRegions, base, {}, {}};
  for (CompatibleSubset& cs : mine_compatible_subsets(base)) {
    const int ri = static_cast<int>(crb.regions.size());
    crb.regions.push_back(std::move(cs.compatible_region));
    emit_for_region(base, mode, ri, cs.rule_indices, crb.rules);
  }
  return crb;
}

}  // namespace

std::vector<std::vector<int>> combine_regions(const std::vector<std::vector<int>>& prev) {
  if (prev.empty()) return {};
  const size_t k1 = prev[0].size();  // k - 1
  std::set<std::vector<int>> prev_set(prev.begin(), prev.end());
  std::vector<std::vector<int>> sorted(prev_set.begin(), prev_set.end());
  std::set<std::vector<int>> out;
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      if (!std::equal(sorted[i].begin(), sorted[i].end() - 1, sorted[j].begin(),
                      sorted[j].end() - 1)) {
        continue;
      }
      std::vector<int> cand = sorted[i];
      cand.push_back(sorted[j].back());
      // prune: every (k-1)-subset must be in the previous level
      bool keep = true;
      for (size_t drop = 0; drop < cand.size() && keep; ++drop) {
        std::vector<int> sub;
        sub.reserve(k1);
        for (size_t t = 0; t < cand.size(); ++t) {
          if (t != drop) sub.push_back(cand[t]);
        }
        keep = prev_set.count(sub) > 0;
      }
      if (keep) out.insert(std::move(cand));
    }
  }
  return {out.begin(), out.end()};
}

Region compatible_region(const std::vector<int>& subset, const FuzzyRuleBase& base) {
  if (subset.empty()) throw std::invalid_argument("compatible region of an empty rule set");
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  return compatible_region_from(all_supports(base), sorted, base.dim());
}

std::vector<CompatibleSubset> mine_compatible_subsets(const FuzzyRuleBase& base) {
  const std::vector<Box> supports = all_supports(base);
  const int n = base.rule_count();
  std::vector<CompatibleSubset> result;

  std::vector<std::vector<int>> level;
  std::vector<Box> level_jact;
  for (int r = 0; r < n; ++r) {
    level.push_back({r});
    level_jact.push_back(supports[static_cast<size_t>(r)]);
  }
  while (!level.empty()) {
    for (size_t i = 0; i < level.size(); ++i) {
      Region region = compatible_region_from(supports, level[i], base.dim());
      if (!region.is_empty()) {
        result.push_back({level[i], level_jact[i], std::move(region)});
      }
    }
    std::vector<std::vector<int>> next;
    std::vector<Box> next_jact;
    for (std::vector<int>& cand : combine_regions(level)) {
      Box jact = supports[static_cast<size_t>(cand[0])];
      for (size_t i = 1; i < cand.size(); ++i) {
        jact = intersect(jact, supports[static_cast<size_t>(cand[i])]);
      }
      if (jact.is_empty()) continue;
      next.push_back(std::move(cand));
      next_jact.push_back(std::move(jact));
    }
    level = std::move(next);
    level_jact = std::move(next_jact);
  }
  return result;
}

CrispRuleBase mine_sufficient(const FuzzyRuleBase& base) {
  return mine_regions(base, InferenceMode::kSufficient);
}

CrispRuleBase mine_additive(const FuzzyRuleBase& base) {
  return mine_regions(base, InferenceMode::kAdditive);
}

CrispRuleBase mine_hyperrectangles(const FuzzyRuleBase& base, InferenceMode mode) {
  CrispRuleBase crb{mode, Geometry::kHyperrectangles, base, {}, {}};
  for (const auto& [box, active] : overlap_partition(base.dim(), all_supports(base))) {
    const int ri = static_cast<int>(crb.regions.size());
    crb.regions.push_back(Region::from_box(box));
    emit_for_region(base, mode, ri, active, crb.rules);
  }
  return crb;
}

namespace {

bool condition_holds(const CrispRuleBase& crb, const CrispCondition& cond,
                     std::span<const Real> x) {
  if (std::holds_alternative<std::monostate>(cond)) return true;
  if (const auto* cmp = std::get_if<MembershipComparison>(&cond)) {
    const Real mu = crb.source.truth_degree(cmp->subject, x);
    for (int rival : cmp->rivals) {
      if (crb.source.truth_degree(rival, x) > mu) return false;
    }
    return true;
  }
  const auto& ss = std::get<ScoreSumComparison>(cond);
  std::vector<Real> sums(static_cast<size_t>(crb.source.class_count()), 0.0);
  for (int r = 0; r < crb.source.rule_count(); ++r) {
    const Real mu = crb.source.truth_degree(r, x);
    if (mu == 0.0) continue;
    const auto& s = crb.source.rules()[static_cast<size_t>(r)].scores;
    for (size_t c = 0; c < sums.size(); ++c) {
      if (s[c] == 1) sums[c] += mu;
    }
  }
  const Real subject = sums[static_cast<size_t>(ss.subject_class)];
  for (size_t c = 0; c < sums.size(); ++c) {
    if (static_cast<int>(c) != ss.subject_class && sums[c] > subject) return false;
  }
  return true;
}

}  // namespace

int classify_crisp(const CrispRuleBase& crb, std::span<const Real> x) {
  size_t i = 0;
  while (i < crb.rules.size()) {
    const int ri = crb.rules[i].region_index;
    size_t j = i;
    while (j < crb.rules.size() && crb.rules[j].region_index == ri) ++j;
    if (crb.regions[static_cast<size_t>(ri)].contains(x)) {
      for (size_t k = i; k < j; ++k) {
        if (condition_holds(crb, crb.rules[k].condition, x)) return crb.rules[k].consequent;
      }
      return kAbstain;  // mined bases always satisfy some condition in-region
    }
    i = j;
  }
  return kAbstain;
}

Region coverage(const FuzzyRuleBase& base) {
  return disjoint_decomposition(base.dim(), all_supports(base));
}

}  // namespace crisper
