// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "crisper/region.hpp"

namespace crisper {

/// Returned by every classifier for points no rule covers.
inline constexpr int kAbstain = -1;

/// Trapezoid <a,b,c,d>: membership rises on (a,b], is 1 on [b,c] and falls
/// on (c,d). An infinite a or d turns the corresponding edge into a shoulder
/// that keeps the constant value 1; the linear formula is never evaluated
/// with an infinite denominator.
struct TrapezoidalFuzzySet {
  std::string name;
  Real a = 0;
  Real b = 0;
  Real c = 0;
  Real d = 0;

  Real membership(Real x) const;
  Interval support() const { return Interval::open(a, d); }
  void validate() const;

  friend bool operator==(const TrapezoidalFuzzySet&, const TrapezoidalFuzzySet&) = default;
};

struct LinguisticVariable {
  std::string name;
  Interval domain = Interval::all();
  std::vector<TrapezoidalFuzzySet> labels;

  /// Index of the label with this name, or -1.
  int find(const std::string& label) const;
  void validate() const;

  friend bool operator==(const LinguisticVariable&, const LinguisticVariable&) = default;
};

struct FuzzyRule {
  std::map<int, std::string> antecedent;  // feature index -> label name
  std::vector<int> scores;                // one 0/1 entry per class, at least one 1

  friend bool operator==(const FuzzyRule&, const FuzzyRule&) = default;
};

/// Immutable after construction; the constructor validates the whole base
/// and resolves antecedent labels, so evaluation never fails structurally.
class FuzzyRuleBase {
 public:
  FuzzyRuleBase(std::vector<LinguisticVariable> variables, std::vector<FuzzyRule> rules,
                int class_count, int max_antecedent);

  int dim() const { return static_cast<int>(variables_.size()); }
  int rule_count() const { return static_cast<int>(rules_.size()); }
  int class_count() const { return class_count_; }
  int max_antecedent() const { return max_antecedent_; }
  const std::vector<LinguisticVariable>& variables() const { return variables_; }
  const std::vector<FuzzyRule>& rules() const { return rules_; }

  /// Product T-norm over the antecedent memberships.
  Real truth_degree(int rule, std::span<const Real> x) const;

  /// Cartesian product of the antecedent supports, full line elsewhere.
  Box rule_support(int rule) const;

  /// Class with the highest score, lowest index on ties.
  int consequent(int rule) const;

  friend bool operator==(const FuzzyRuleBase& l, const FuzzyRuleBase& r) {
    return l.variables_ == r.variables_ && l.rules_ == r.rules_ &&
           l.class_count_ == r.class_count_ && l.max_antecedent_ == r.max_antecedent_;
  }

 private:
  std::vector<LinguisticVariable> variables_;
  std::vector<FuzzyRule> rules_;
  int class_count_;
  int max_antecedent_;
  std::vector<std::vector<std::pair<int, int>>> resolved_;  // (feature, label index)
};

/// Winner-takes-all inference: the rule with the highest truth degree decides
/// (lowest rule index on ties, lowest class index on score ties).
int classify_sufficient(const FuzzyRuleBase& base, std::span<const Real> x);

/// Additive inference: per-class sums of score-weighted truth degrees
/// (lowest class index on ties).
int classify_additive(const FuzzyRuleBase& base, std::span<const Real> x);

}  // namespace crisper
