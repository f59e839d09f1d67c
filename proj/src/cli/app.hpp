#pragma once

#include "scenario/bundled.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cypair::cli {

// Exit codes: 0 all checks pass, 1 some check failed, 2 input error.

struct RunOptions {
    std::string file;                  // empty: run bundled suites
    std::vector<std::string> suites;   // filter for bundled suites
    std::vector<std::string> checks;   // filter by check id
    uint64_t seed = 0;
    bool json = false;
};
int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err);

// Matrix rows separated by '/'; optional space-separated variable names.
int cmd_chambers(const std::string& matrix, const std::string& var_names, bool json,
                 std::ostream& out, std::ostream& err);

int cmd_lint(const std::string& path, std::ostream& out, std::ostream& err);

int cmd_suites(std::ostream& out);

struct LatticeOptions {
    std::string basis;    // "h e"
    std::string gram;     // rows separated by '/'
    std::string classes;  // optional ';'-separated class expressions
    bool bundle_table = false;
};
int cmd_lattice(const LatticeOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace cypair::cli
