// SPDX-License-Identifier: Apache-2.0
#include <string>

#include "crisper/example.hpp"
#include "crisper/io.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace crisper;
using namespace crisper::testgen;

TEST_CASE("fuzzy document round trip") {
  const RuleBaseDocument doc = example_document();
  const std::string text = serialize_rule_base(doc);
  const RuleBaseDocument back = parse_rule_base(text);
  CHECK(back == doc);
  CHECK(serialize_rule_base(back) == text);  // stable bytes
}

TEST_CASE("crisp document round trip for both geometries and modes") {
  const FuzzyRuleBase base = example_document().base;
  for (const CrispRuleBase& crb :
       {mine_sufficient(base), mine_additive(base),
        mine_hyperrectangles(base, InferenceMode::kSufficient)}) {
    const std::string text = serialize_crisp_base(crb);
    const CrispRuleBase back = parse_crisp_base(text);
    CHECK(back == crb);
    CHECK(serialize_crisp_base(back) == text);
  }
}

TEST_CASE("round trip on random bases") {
  Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    const RuleBaseDocument doc{random_base(rng),
                               chance(rng, 0.5) ? InferenceMode::kSufficient
                                                : InferenceMode::kAdditive};
    CHECK(parse_rule_base(serialize_rule_base(doc)) == doc);
    const CrispRuleBase crb = doc.mode == InferenceMode::kSufficient
                                  ? mine_sufficient(doc.base)
                                  : mine_additive(doc.base);
    CHECK(parse_crisp_base(serialize_crisp_base(crb)) == crb);
  }
}

TEST_CASE("infinities are encoded as quoted strings") {
  const std::string text = serialize_rule_base(example_document());
  CHECK(text.find("\"-inf\"") != std::string::npos);
  CHECK(text.find("\"inf\"") != std::string::npos);
  // and they parse back to real infinities
  const RuleBaseDocument back = parse_rule_base(text);
  CHECK(back.base.variables()[0].labels[0].a == -kInf);
  CHECK(back.base.variables()[0].labels[2].d == kInf);
}

TEST_CASE("malformed trapezoid is rejected naming the label") {
  std::string text = serialize_rule_base(example_document());
  // swap Low^1's c and d so that a <= b <= c <= d fails
  const size_t pos = text.find("1.12");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 4, "6.00");
  CHECK_THROWS_WITH_AS(parse_rule_base(text), doctest::Contains("Low"), ParseError);
}

TEST_CASE("structural errors carry the offending path") {
  CHECK_THROWS_WITH_AS(parse_rule_base("{"), doctest::Contains("invalid JSON"), ParseError);
  CHECK_THROWS_WITH_AS(parse_rule_base("{}"), doctest::Contains("mode"), ParseError);
  CHECK_THROWS_WITH_AS(parse_rule_base(R"({"mode":"sufficient"})"),
                       doctest::Contains("class_count"), ParseError);
  // empty rule list fails base validation at parse time
  std::string text = serialize_rule_base(example_document());
  const size_t pos = text.rfind("\"rules\"");
  REQUIRE(pos != std::string::npos);
  text = text.substr(0, pos) + "\"rules\": []\n}\n";
  CHECK_THROWS_WITH_AS(parse_rule_base(text), doctest::Contains("no rules"), ParseError);
}

TEST_CASE("mode and geometry names") {
  CHECK(mode_from_name("sufficient") == InferenceMode::kSufficient);
  CHECK(mode_from_name("additive") == InferenceMode::kAdditive);
  CHECK_THROWS_AS(mode_from_name("other"), ParseError);
  CHECK(geometry_name(geometry_from_name("regions")) == "regions");
  CHECK(geometry_name(geometry_from_name("boxes")) == "boxes");
  CHECK_THROWS_AS(geometry_from_name("spheres"), ParseError);
}

TEST_CASE("crisp parser validates cross references") {
  const std::string text = serialize_crisp_base(mine_sufficient(example_document().base));
  // point a rule at a nonexistent region
  std::string broken = text;
  const size_t pos = broken.find("\"region\": 0");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, 11, "\"region\": 99");
  CHECK_THROWS_WITH_AS(parse_crisp_base(broken), doctest::Contains("region"), ParseError);
}
