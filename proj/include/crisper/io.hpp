// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

#include "crisper/crisp.hpp"

namespace crisper {

/// Raised for malformed documents; the message carries the offending path.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A fuzzy rule base plus its intended inference mode, as stored on disk.
struct RuleBaseDocument {
  FuzzyRuleBase base;
  InferenceMode mode = InferenceMode::kSufficient;

  friend bool operator==(const RuleBaseDocument&, const RuleBaseDocument&) = default;
};

// JSON documents; infinities are encoded as the strings "-inf" / "inf".
// serialize(parse(text)) is stable and parse(serialize(doc)) == doc.
RuleBaseDocument parse_rule_base(const std::string& text);
std::string serialize_rule_base(const RuleBaseDocument& doc);

// Crisp files embed the source fuzzy base by value, so a crisp file is
// self-contained for classification.
CrispRuleBase parse_crisp_base(const std::string& text);
std::string serialize_crisp_base(const CrispRuleBase& crb);

std::string mode_name(InferenceMode mode);
InferenceMode mode_from_name(const std::string& name);
std::string geometry_name(Geometry geometry);
Geometry geometry_from_name(const std::string& name);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace crisper
