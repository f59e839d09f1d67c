#include "cli/app.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"cypair: exact verification toolkit for Calabi-Yau pairs and their "
                 "volume preserving birational maps"};
    app.require_subcommand(1);

    cypair::cli::RunOptions run_opt;
    auto* run = app.add_subcommand("run", "run checks from a scenario file or bundled suites");
    run->add_option("file", run_opt.file, "scenario file (omit to run bundled suites)");
    run->add_option("--suite", run_opt.suites, "bundled suite name (repeatable)");
    run->add_option("--check", run_opt.checks, "check id filter (repeatable)");
    run->add_option("--seed", run_opt.seed, "seed for randomized specializations")
        ->default_val(0);
    run->add_flag("--json", run_opt.json, "machine-readable report");

    std::string matrix, var_names;
    bool chambers_json = false;
    auto* chambers = app.add_subcommand("chambers", "chamber decomposition of a weight matrix");
    chambers->add_option("matrix", matrix, "weight rows separated by '/'")->required();
    chambers->add_option("--vars", var_names, "space-separated variable names");
    chambers->add_flag("--json", chambers_json, "machine-readable output");

    cypair::cli::LatticeOptions lat_opt;
    auto* lattice = app.add_subcommand("lattice", "Gram-lattice queries");
    lattice->add_option("--basis", lat_opt.basis, "space-separated basis names");
    lattice->add_option("--gram", lat_opt.gram, "Gram rows separated by '/'");
    lattice->add_option("--classes", lat_opt.classes, "';'-separated class expressions");
    lattice->add_flag("--bundle-table", lat_opt.bundle_table,
                      "print the weak-Fano bundle table with restriction determinants");

    std::string lint_path;
    auto* lint = app.add_subcommand("lint", "validate a scenario file without running checks");
    lint->add_option("file", lint_path, "scenario file")->required();

    auto* suites = app.add_subcommand("suites", "list bundled suites");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return cypair::cli::cmd_run(run_opt, std::cout, std::cerr);
    if (chambers->parsed())
        return cypair::cli::cmd_chambers(matrix, var_names, chambers_json, std::cout, std::cerr);
    if (lattice->parsed()) return cypair::cli::cmd_lattice(lat_opt, std::cout, std::cerr);
    if (lint->parsed()) return cypair::cli::cmd_lint(lint_path, std::cout, std::cerr);
    if (suites->parsed()) return cypair::cli::cmd_suites(std::cout);
    return 2;
}
