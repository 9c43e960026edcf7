// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "crisper/io.hpp"

namespace crisper {

/// Small two-feature, three-class demonstration base with shoulder sets on
/// both ends of each variable; used by the CLI `example` subcommand and as a
/// shared test fixture.
RuleBaseDocument example_document();

}  // namespace crisper
