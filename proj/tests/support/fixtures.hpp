#pragma once

#include <set>
#include <string>

#include "crnreduce/crnparse.hpp"

namespace crnreduce::testing {

/// Contents of tests/fixtures/<name>.
std::string fixture_text(const std::string& name);
ReactionNetwork load_fixture(const std::string& name);

/// Expanded rate expression; names in `totals` are total-amount symbols.
RationalFunction rf(const std::string& expression, const std::set<std::string>& totals = {"T1", "T2"});

}  // namespace crnreduce::testing
