// SPDX-License-Identifier: Apache-2.0
#include "crisper/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace crisper {

namespace {

using Json = nlohmann::ordered_json;

Json encode_real(Real v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

Real decode_real(const Json& j, const std::string& ctx) {
  if (j.is_number()) {
    const Real v = j.get<Real>();
    if (std::isnan(v)) throw ParseError(ctx + ": NaN is not a valid value");
    return v;
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
    throw ParseError(ctx + ": expected a number or \"inf\"/\"-inf\", got \"" + s + "\"");
  }
  throw ParseError(ctx + ": expected a number or \"inf\"/\"-inf\"");
}

const Json& field(const Json& j, const char* key, const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(ctx + ": missing field '" + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key, const std::string& ctx) {
  const Json& v = field(j, key, ctx);
  if (!v.is_number_integer()) throw ParseError(ctx + "." + key + ": expected an integer");
  return v.get<int>();
}

bool bool_field(const Json& j, const char* key, const std::string& ctx) {
  const Json& v = field(j, key, ctx);
  if (!v.is_boolean()) throw ParseError(ctx + "." + key + ": expected a boolean");
  return v.get<bool>();
}

std::string string_field(const Json& j, const char* key, const std::string& ctx) {
  const Json& v = field(j, key, ctx);
  if (!v.is_string()) throw ParseError(ctx + "." + key + ": expected a string");
  return v.get<std::string>();
}

Json interval_to_json(const Interval& iv) {
  return Json{{"lo", encode_real(iv.lo())},
              {"lo_closed", iv.lo_closed()},
              {"hi", encode_real(iv.hi())},
              {"hi_closed", iv.hi_closed()}};
}

Interval interval_from_json(const Json& j, const std::string& ctx) {
  return Interval::make(decode_real(field(j, "lo", ctx), ctx + ".lo"),
                        bool_field(j, "lo_closed", ctx),
                        decode_real(field(j, "hi", ctx), ctx + ".hi"),
                        bool_field(j, "hi_closed", ctx));
}

Json box_to_json(const Box& box) {
  Json dims = Json::array();
  for (const Interval& iv : box.dims()) dims.push_back(interval_to_json(iv));
  return dims;
}

Box box_from_json(const Json& j, int dim, const std::string& ctx) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw ParseError(ctx + ": expected an array of " + std::to_string(dim) + " intervals");
  }
  std::vector<Interval> dims;
  for (size_t d = 0; d < j.size(); ++d) {
    dims.push_back(interval_from_json(j[d], ctx + "[" + std::to_string(d) + "]"));
  }
  return Box(std::move(dims));
}

Json fuzzy_to_json(const RuleBaseDocument& doc) {
  const FuzzyRuleBase& base = doc.base;
  Json j;
  j["mode"] = mode_name(doc.mode);
  j["class_count"] = base.class_count();
  j["max_antecedent"] = base.max_antecedent();
  j["variables"] = Json::array();
  for (const LinguisticVariable& var : base.variables()) {
    Json labels = Json::array();
    for (const TrapezoidalFuzzySet& fs : var.labels) {
      labels.push_back(Json{{"name", fs.name},
                            {"a", encode_real(fs.a)},
                            {"b", encode_real(fs.b)},
                            {"c", encode_real(fs.c)},
                            {"d", encode_real(fs.d)}});
    }
    j["variables"].push_back(
        Json{{"name", var.name}, {"domain", interval_to_json(var.domain)}, {"labels", labels}});
  }
  j["rules"] = Json::array();
  for (const FuzzyRule& rule : base.rules()) {
    Json ante = Json::array();
    for (const auto& [feature, label] : rule.antecedent) {
      ante.push_back(Json{{"feature", feature}, {"label", label}});
    }
    j["rules"].push_back(Json{{"antecedent", ante}, {"scores", rule.scores}});
  }
  return j;
}

RuleBaseDocument fuzzy_from_json(const Json& j, const std::string& ctx) {
  const InferenceMode mode = mode_from_name(string_field(j, "mode", ctx));
  const int class_count = int_field(j, "class_count", ctx);
  const int max_antecedent = int_field(j, "max_antecedent", ctx);

  const Json& jvars = field(j, "variables", ctx);
  if (!jvars.is_array()) throw ParseError(ctx + ".variables: expected an array");
  std::vector<LinguisticVariable> variables;
  for (size_t i = 0; i < jvars.size(); ++i) {
    const std::string vctx = ctx + ".variables[" + std::to_string(i) + "]";
    const Json& jv = jvars[i];
    LinguisticVariable var;
    var.name = string_field(jv, "name", vctx);
    var.domain = interval_from_json(field(jv, "domain", vctx), vctx + ".domain");
    const Json& jlabels = field(jv, "labels", vctx);
    if (!jlabels.is_array()) throw ParseError(vctx + ".labels: expected an array");
    for (size_t l = 0; l < jlabels.size(); ++l) {
      const std::string lctx = vctx + ".labels[" + std::to_string(l) + "]";
      const Json& jl = jlabels[l];
      var.labels.push_back(TrapezoidalFuzzySet{string_field(jl, "name", lctx),
                                               decode_real(field(jl, "a", lctx), lctx + ".a"),
                                               decode_real(field(jl, "b", lctx), lctx + ".b"),
                                               decode_real(field(jl, "c", lctx), lctx + ".c"),
                                               decode_real(field(jl, "d", lctx), lctx + ".d")});
    }
    variables.push_back(std::move(var));
  }

  const Json& jrules = field(j, "rules", ctx);
  if (!jrules.is_array()) throw ParseError(ctx + ".rules: expected an array");
  std::vector<FuzzyRule> rules;
  for (size_t i = 0; i < jrules.size(); ++i) {
    const std::string rctx = ctx + ".rules[" + std::to_string(i) + "]";
    const Json& jr = jrules[i];
    FuzzyRule rule;
    const Json& jante = field(jr, "antecedent", rctx);
    if (!jante.is_array()) throw ParseError(rctx + ".antecedent: expected an array");
    for (size_t t = 0; t < jante.size(); ++t) {
      const std::string tctx = rctx + ".antecedent[" + std::to_string(t) + "]";
      const int feature = int_field(jante[t], "feature", tctx);
      const std::string label = string_field(jante[t], "label", tctx);
      if (rule.antecedent.count(feature)) {
        throw ParseError(tctx + ": duplicate feature " + std::to_string(feature));
      }
      rule.antecedent[feature] = label;
    }
    const Json& jscores = field(jr, "scores", rctx);
    if (!jscores.is_array()) throw ParseError(rctx + ".scores: expected an array");
    for (const Json& s : jscores) {
      if (!s.is_number_integer()) throw ParseError(rctx + ".scores: expected integers");
      rule.scores.push_back(s.get<int>());
    }
    rules.push_back(std::move(rule));
  }

  try {
    return RuleBaseDocument{
        FuzzyRuleBase(std::move(variables), std::move(rules), class_count, max_antecedent), mode};
  } catch (const std::invalid_argument& e) {
    throw ParseError(ctx + ": " + e.what());
  }
}

Json condition_to_json(const CrispCondition& cond) {
  if (std::holds_alternative<std::monostate>(cond)) return nullptr;
  if (const auto* cmp = std::get_if<MembershipComparison>(&cond)) {
    return Json{{"type", "membership_compare"}, {"subject", cmp->subject}, {"rivals", cmp->rivals}};
  }
  return Json{{"type", "score_sum"}, {"class", std::get<ScoreSumComparison>(cond).subject_class}};
}

CrispCondition condition_from_json(const Json& j, int rule_count, int class_count,
                                   const std::string& ctx) {
  if (j.is_null()) return std::monostate{};
  const std::string type = string_field(j, "type", ctx);
  if (type == "membership_compare") {
    MembershipComparison cmp;
    cmp.subject = int_field(j, "subject", ctx);
    if (cmp.subject < 0 || cmp.subject >= rule_count) {
      throw ParseError(ctx + ".subject: rule index out of range");
    }
    const Json& jr = field(j, "rivals", ctx);
    if (!jr.is_array()) throw ParseError(ctx + ".rivals: expected an array");
    for (const Json& r : jr) {
      if (!r.is_number_integer()) throw ParseError(ctx + ".rivals: expected integers");
      const int idx = r.get<int>();
      if (idx < 0 || idx >= rule_count) throw ParseError(ctx + ".rivals: rule index out of range");
      cmp.rivals.push_back(idx);
    }
    return cmp;
  }
  if (type == "score_sum") {
    const int c = int_field(j, "class", ctx);
    if (c < 0 || c >= class_count) throw ParseError(ctx + ".class: class index out of range");
    return ScoreSumComparison{c};
  }
  throw ParseError(ctx + ".type: unknown condition type '" + type + "'");
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string mode_name(InferenceMode mode) {
  return mode == InferenceMode::kSufficient ? "sufficient" : "additive";
}

InferenceMode mode_from_name(const std::string& name) {
  if (name == "sufficient") return InferenceMode::kSufficient;
  if (name == "additive") return InferenceMode::kAdditive;
  throw ParseError("unknown inference mode '" + name + "'");
}

std::string geometry_name(Geometry geometry) {
  return geometry == Geometry::kCompatibleRegions ? "regions" : "boxes";
}

Geometry geometry_from_name(const std::string& name) {
  if (name == "regions") return Geometry::kCompatibleRegions;
  if (name == "boxes") return Geometry::kHyperrectangles;
  throw ParseError("unknown geometry '" + name + "'");
}

RuleBaseDocument parse_rule_base(const std::string& text) {
  return fuzzy_from_json(parse_text(text), "$");
}

std::string serialize_rule_base(const RuleBaseDocument& doc) {
  return fuzzy_to_json(doc).dump(2) + "\n";
}

std::string serialize_crisp_base(const CrispRuleBase& crb) {
  Json j;
  j["mode"] = mode_name(crb.mode);
  j["geometry"] = geometry_name(crb.geometry);
  j["source"] = fuzzy_to_json(RuleBaseDocument{crb.source, crb.mode});
  j["regions"] = Json::array();
  for (const Region& region : crb.regions) {
    Json boxes = Json::array();
    for (const Box& box : region.boxes()) boxes.push_back(box_to_json(box));
    j["regions"].push_back(boxes);
  }
  j["rules"] = Json::array();
  for (const CrispRule& rule : crb.rules) {
    j["rules"].push_back(Json{{"region", rule.region_index},
                              {"condition", condition_to_json(rule.condition)},
                              {"consequent", rule.consequent},
                              {"subset", rule.subset},
                              {"source_rule", rule.source_rule}});
  }
  return j.dump(2) + "\n";
}

CrispRuleBase parse_crisp_base(const std::string& text) {
  const Json j = parse_text(text);
  const std::string ctx = "$";
  RuleBaseDocument doc = fuzzy_from_json(field(j, "source", ctx), ctx + ".source");
  CrispRuleBase crb{mode_from_name(string_field(j, "mode", ctx)),
                    geometry_from_name(string_field(j, "geometry", ctx)),
                    std::move(doc.base),
                    {},
                    {}};
  const int dim = crb.source.dim();

  const Json& jregions = field(j, "regions", ctx);
  if (!jregions.is_array()) throw ParseError(ctx + ".regions: expected an array");
  for (size_t i = 0; i < jregions.size(); ++i) {
    const std::string rctx = ctx + ".regions[" + std::to_string(i) + "]";
    if (!jregions[i].is_array()) throw ParseError(rctx + ": expected an array of boxes");
    std::vector<Box> boxes;
    for (size_t b = 0; b < jregions[i].size(); ++b) {
      boxes.push_back(box_from_json(jregions[i][b], dim, rctx + "[" + std::to_string(b) + "]"));
    }
    try {
      crb.regions.push_back(Region::from_disjoint(dim, std::move(boxes)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(rctx + ": " + e.what());
    }
  }

  const Json& jrules = field(j, "rules", ctx);
  if (!jrules.is_array()) throw ParseError(ctx + ".rules: expected an array");
  for (size_t i = 0; i < jrules.size(); ++i) {
    const std::string rctx = ctx + ".rules[" + std::to_string(i) + "]";
    const Json& jr = jrules[i];
    CrispRule rule;
    rule.region_index = int_field(jr, "region", rctx);
    if (rule.region_index < 0 || rule.region_index >= static_cast<int>(crb.regions.size())) {
      throw ParseError(rctx + ".region: region index out of range");
    }
    rule.condition = condition_from_json(field(jr, "condition", rctx), crb.source.rule_count(),
                                         crb.source.class_count(), rctx + ".condition");
    rule.consequent = int_field(jr, "consequent", rctx);
    if (rule.consequent < 0 || rule.consequent >= crb.source.class_count()) {
      throw ParseError(rctx + ".consequent: class index out of range");
    }
    const Json& jsubset = field(jr, "subset", rctx);
    if (!jsubset.is_array()) throw ParseError(rctx + ".subset: expected an array");
    for (const Json& s : jsubset) {
      if (!s.is_number_integer()) throw ParseError(rctx + ".subset: expected integers");
      rule.subset.push_back(s.get<int>());
    }
    rule.source_rule = int_field(jr, "source_rule", rctx);
    crb.rules.push_back(std::move(rule));
  }
  return crb;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace crisper
