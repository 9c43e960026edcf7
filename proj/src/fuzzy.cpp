// SPDX-License-Identifier: Apache-2.0
#include "crisper/fuzzy.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace crisper {

Real TrapezoidalFuzzySet::membership(Real x) const {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("membership evaluated at a non-finite point");
  }
  if (x <= a) return 0.0;  // never taken when a = -inf
  if (x >= d) return 0.0;
  if (x <= b) return std::isinf(a) ? 1.0 : (x - a) / (b - a);
  if (x <= c) return 1.0;
  return std::isinf(d) ? 1.0 : (d - x) / (d - c);
}

void TrapezoidalFuzzySet::validate() const {
  if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(d)) {
    throw std::invalid_argument("fuzzy set '" + name + "': NaN parameter");
  }
  if (!(a <= b && b <= c && c <= d)) {
    throw std::invalid_argument("fuzzy set '" + name + "': parameters must satisfy a <= b <= c <= d");
  }
  if (!(a < d)) {
    throw std::invalid_argument("fuzzy set '" + name + "': degenerate support (a < d required)");
  }
  if (a == b && a != -kInf) {
    throw std::invalid_argument("fuzzy set '" + name + "': rising edge needs a < b when finite");
  }
  if (c == d && d != kInf) {
    throw std::invalid_argument("fuzzy set '" + name + "': falling edge needs c < d when finite");
  }
}

int LinguisticVariable::find(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].name == label) return static_cast<int>(i);
  }
  return -1;
}

void LinguisticVariable::validate() const {
  if (labels.empty()) {
    throw std::invalid_argument("variable '" + name + "': no labels");
  }
  if (domain.is_empty()) {
    throw std::invalid_argument("variable '" + name + "': empty domain");
  }
  for (size_t i = 0; i < labels.size(); ++i) {
    labels[i].validate();
    for (size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i].name == labels[j].name) {
        throw std::invalid_argument("variable '" + name + "': duplicate label '" + labels[i].name + "'");
      }
    }
    if (intersect(labels[i].support(), domain).is_empty()) {
      throw std::invalid_argument("variable '" + name + "': label '" + labels[i].name +
                                  "' has support outside the domain");
    }
  }
}

FuzzyRuleBase::FuzzyRuleBase(std::vector<LinguisticVariable> variables,
                             std::vector<FuzzyRule> rules, int class_count, int max_antecedent)
    : variables_(std::move(variables)),
      rules_(std::move(rules)),
      class_count_(class_count),
      max_antecedent_(max_antecedent) {
  if (variables_.empty()) throw std::invalid_argument("rule base has no variables");
  if (rules_.empty()) throw std::invalid_argument("rule base has no rules");
  if (class_count_ < 1) throw std::invalid_argument("class count must be positive");
  if (max_antecedent_ < 1) throw std::invalid_argument("max antecedent size must be positive");
  for (const LinguisticVariable& v : variables_) v.validate();

  resolved_.reserve(rules_.size());
  for (size_t ri = 0; ri < rules_.size(); ++ri) {
    const FuzzyRule& r = rules_[ri];
    const std::string where = "rule " + std::to_string(ri);
    if (r.antecedent.empty()) throw std::invalid_argument(where + ": empty antecedent");
    if (static_cast<int>(r.antecedent.size()) > max_antecedent_) {
      throw std::invalid_argument(where + ": antecedent exceeds the maximum size");
    }
    if (static_cast<int>(r.scores.size()) != class_count_) {
      throw std::invalid_argument(where + ": score vector length differs from class count");
    }
    bool any = false;
    for (int s : r.scores) {
      if (s != 0 && s != 1) throw std::invalid_argument(where + ": scores must be 0 or 1");
      any = any || s == 1;
    }
    if (!any) throw std::invalid_argument(where + ": score vector has no 1");

    std::vector<std::pair<int, int>> terms;
    for (const auto& [feature, label] : r.antecedent) {
      if (feature < 0 || feature >= dim()) {
        throw std::invalid_argument(where + ": feature index out of range");
      }
      const int li = variables_[static_cast<size_t>(feature)].find(label);
      if (li < 0) {
        throw std::invalid_argument(where + ": unknown label '" + label + "' for variable '" +
                                    variables_[static_cast<size_t>(feature)].name + "'");
      }
      terms.emplace_back(feature, li);
    }
    resolved_.push_back(std::move(terms));
  }
}

Real FuzzyRuleBase::truth_degree(int rule, std::span<const Real> x) const {
  if (static_cast<int>(x.size()) != dim()) {
    throw std::invalid_argument("point dimension does not match rule base");
  }
  Real mu = 1.0;
  for (const auto& [feature, label] : resolved_[static_cast<size_t>(rule)]) {
    mu *= variables_[static_cast<size_t>(feature)]
              .labels[static_cast<size_t>(label)]
              .membership(x[static_cast<size_t>(feature)]);
    if (mu == 0.0) break;
  }
  return mu;
}

Box FuzzyRuleBase::rule_support(int rule) const {
  std::vector<Interval> dims(static_cast<size_t>(dim()), Interval::all());
  for (const auto& [feature, label] : resolved_[static_cast<size_t>(rule)]) {
    dims[static_cast<size_t>(feature)] =
        variables_[static_cast<size_t>(feature)].labels[static_cast<size_t>(label)].support();
  }
  return Box(std::move(dims));
}

int FuzzyRuleBase::consequent(int rule) const {
  const auto& s = rules_[static_cast<size_t>(rule)].scores;
  for (size_t c = 0; c < s.size(); ++c) {
    if (s[c] == 1) return static_cast<int>(c);
  }
  return kAbstain;  // unreachable on a validated base
}

int classify_sufficient(const FuzzyRuleBase& base, std::span<const Real> x) {
  int best = -1;
  Real best_mu = 0.0;
  for (int r = 0; r < base.rule_count(); ++r) {
    const Real mu = base.truth_degree(r, x);
    if (mu > best_mu) {
      best_mu = mu;
      best = r;
    }
  }
  if (best < 0) return kAbstain;
  return base.consequent(best);
}

int classify_additive(const FuzzyRuleBase& base, std::span<const Real> x) {
  std::vector<Real> sums(static_cast<size_t>(base.class_count()), 0.0);
  for (int r = 0; r < base.rule_count(); ++r) {
    const Real mu = base.truth_degree(r, x);
    if (mu == 0.0) continue;
    const auto& s = base.rules()[static_cast<size_t>(r)].scores;
    for (size_t c = 0; c < sums.size(); ++c) {
      if (s[c] == 1) sums[c] += mu;
    }
  }
  int best = kAbstain;
  Real best_sum = 0.0;
  for (size_t c = 0; c < sums.size(); ++c) {
    if (sums[c] > best_sum) {
      best_sum = sums[c];
      best = static_cast<int>(c);
    }
  }
  return best;
}

}  // namespace crisper
