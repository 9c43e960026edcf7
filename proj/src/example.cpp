// SPDX-License-Identifier: Apache-2.0
#include "crisper/example.hpp"

namespace crisper {

RuleBaseDocument example_document() {
  std::vector<LinguisticVariable> variables;

  LinguisticVariable x1;
  x1.name = "x1";
  x1.domain = Interval::all();
  x1.labels = {
      {"Low", -kInf, -kInf, 1.12, 4.96},
      {"Medium", 1.12, 3.04, 7.09, 9.23},
      {"High", 4.96, 9.23, kInf, kInf},
  };
  variables.push_back(std::move(x1));

  LinguisticVariable x2;
  x2.name = "x2";
  x2.domain = Interval::all();
  x2.labels = {
      {"Low", -kInf, -5.15, -0.52, 1.19},
      {"Medium", -0.52, 0.34, 2.54, 3.88},
      {"High", 1.19, 3.88, kInf, kInf},
  };
  variables.push_back(std::move(x2));

  std::vector<FuzzyRule> rules = {
      {{{0, "Low"}}, {1, 0, 0}},
      {{{1, "High"}}, {0, 1, 0}},
      {{{0, "High"}}, {0, 0, 1}},
  };

  return RuleBaseDocument{
      FuzzyRuleBase(std::move(variables), std::move(rules), /*class_count=*/3,
                    /*max_antecedent=*/1),
      InferenceMode::kSufficient};
}

}  // namespace crisper
