#pragma once

#include "scenario/model.hpp"

namespace cypair {

struct scenario_error : math_error {
    size_t line;
    scenario_error(const std::string& what, size_t l)
        : math_error(what + " (line " + std::to_string(l) + ")"), line(l) {}
};

// Line-oriented format: [kind NAME] section headers followed by key = value
// lines; '#' starts a comment; declarations must precede use.
Scenario scenario_parse(const std::string& text, const std::string& name = "");
Scenario scenario_parse_file(const std::string& path);

// Collect diagnostics (homogeneity failures, anticanonical mismatches,
// grading inconsistencies, invalid charts, unresolved references) without
// running any checks. Returns the diagnostics; empty means clean.
std::vector<std::string> scenario_lint(const std::string& text);

}  // namespace cypair
