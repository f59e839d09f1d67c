#pragma once

#include "scenario/run.hpp"

namespace cypair {

// Names of the bundled check suites, in canonical order.
std::vector<std::string> builtin_suites();

// The scenario text of a bundled suite (also shipped under data/scenarios/).
const std::string& bundled_scenario_text(const std::string& name);

Scenario load_bundled(const std::string& name);

SuiteReport run_suite(const std::string& name, uint64_t seed);

}  // namespace cypair
