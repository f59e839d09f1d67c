#include "cli/app.hpp"

#include "algebra/parse.hpp"
#include "scenario/parse.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace cypair::cli {

namespace {

using nlohmann::json;

json report_to_json(const SuiteReport& rep) {
    json out;
    out["suite"] = rep.name;
    out["seed"] = rep.seed;
    json checks = json::array();
    for (const auto& r : rep.results) {
        checks.push_back({{"id", r.id},
                          {"op", r.op},
                          {"status", to_string(r.status)},
                          {"witness", r.witness},
                          {"provenance", r.provenance},
                          {"micros", r.micros}});
    }
    out["checks"] = checks;
    out["summary"] = {{"total", rep.results.size()},
                      {"pass", rep.count(CheckStatus::Pass)},
                      {"fail", rep.count(CheckStatus::Fail)},
                      {"indeterminate", rep.count(CheckStatus::Indeterminate)}};
    return out;
}

void report_to_text(const SuiteReport& rep, std::ostream& out) {
    out << "== " << rep.name << " (seed " << rep.seed << ") ==\n";
    for (const auto& r : rep.results) {
        out << "  [" << to_string(r.status) << "] " << r.id << " (" << r.op << ", "
            << r.provenance << ", " << r.micros << "us)";
        if (!r.witness.empty()) out << ": " << r.witness;
        out << "\n";
    }
    out << "  " << rep.count(CheckStatus::Pass) << "/" << rep.results.size() << " passed, "
        << rep.count(CheckStatus::Fail) << " failed, "
        << rep.count(CheckStatus::Indeterminate) << " indeterminate\n";
}

std::vector<std::vector<long>> parse_matrix(const std::string& spec) {
    std::vector<std::vector<long>> rows;
    std::string row;
    std::istringstream in(spec);
    while (std::getline(in, row, '/')) {
        std::istringstream rin(row);
        std::vector<long> r;
        long x;
        while (rin >> x) r.push_back(x);
        if (!r.empty()) rows.push_back(std::move(r));
    }
    return rows;
}

std::string ray_str(const std::vector<long>& ray) {
    std::string out = "(";
    for (size_t i = 0; i < ray.size(); ++i) out += (i ? "," : "") + std::to_string(ray[i]);
    return out + ")";
}

}  // namespace

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<SuiteReport> reports;
    try {
        if (!opt.file.empty()) {
            Scenario s = scenario_parse_file(opt.file);
            reports.push_back(run_scenario(s, opt.seed, opt.checks));
        } else {
            auto names = opt.suites.empty() ? builtin_suites() : opt.suites;
            for (const auto& name : names) {
                Scenario s = load_bundled(name);
                reports.push_back(run_scenario(s, opt.seed, opt.checks));
            }
        }
    } catch (const math_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }

    bool all_pass = true;
    size_t total = 0;
    for (const auto& rep : reports) {
        total += rep.results.size();
        if (!rep.all_passed()) all_pass = false;
    }
    if (opt.json) {
        json doc = json::array();
        for (const auto& rep : reports) doc.push_back(report_to_json(rep));
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& rep : reports) report_to_text(rep, out);
        out << (all_pass ? "all checks passed" : "FAILURES present") << " (" << total
            << " checks)\n";
    }
    if (total == 0) {
        err << "input error: no checks selected\n";
        return 2;
    }
    return all_pass ? 0 : 1;
}

int cmd_chambers(const std::string& matrix, const std::string& var_names, bool json_mode,
                 std::ostream& out, std::ostream& err) {
    try {
        auto rows = parse_matrix(matrix);
        if (rows.empty()) throw math_error("empty weight matrix");
        size_t n = rows[0].size();
        std::vector<std::string> vars;
        if (!var_names.empty()) {
            std::istringstream in(var_names);
            std::string w;
            while (in >> w) vars.push_back(w);
            if (vars.size() != n) throw math_error("variable names do not match column count");
        } else {
            for (size_t i = 0; i < n; ++i) vars.push_back("v" + std::to_string(i));
        }
        RingPtr ring = make_ring(vars, rows);
        auto chams = chamber_decomposition(ring);

        json doc;
        std::ostringstream text;
        text << "chambers (counterclockwise):\n";
        json jch = json::array();
        for (size_t i = 0; i < chams.size(); ++i) {
            text << "  " << (i + 1) << ": <";
            json rays = json::array();
            for (size_t j = 0; j < chams[i].rays.size(); ++j) {
                text << (j ? ", " : "") << ray_str(chams[i].rays[j]);
                rays.push_back(chams[i].rays[j]);
            }
            text << ">";
            ToricAmbient amb(ring, chams[i], "chamber" + std::to_string(i + 1));
            std::string ii = irrelevant_ideal_string(ring, irrelevant_ideal(amb));
            text << "  irrelevant ideal " << ii << "\n";
            jch.push_back({{"rays", rays}, {"irrelevant_ideal", ii}});
        }
        text << "walls:\n";
        json jw = json::array();
        auto describe = [&](const WallCrossing& wc, const std::string& where) {
            std::string kind;
            std::string detail;
            switch (wc.kind) {
                case WallKind::Fibration: kind = "fibration"; break;
                case WallKind::DivisorialContraction: kind = "divisorial contraction"; break;
                case WallKind::SmallModification: kind = "small modification"; break;
            }
            for (size_t i = 0; i < wc.far_vars.size(); ++i)
                detail += (i ? "," : "") + ring->vars()[wc.far_vars[i]];
            text << "  " << where << ": " << kind;
            if (!detail.empty()) text << " on {" << detail << "}";
            text << "\n";
            jw.push_back({{"where", where}, {"kind", kind}, {"variables", detail}});
        };
        // boundary wall of the first chamber (when the support is not a full
        // fan), interior walls between consecutive chambers, boundary of the
        // last chamber
        bool full_circle = ring->rank() == 2 && !chams.empty() &&
                           chams.back().rays[1] == chams.front().rays[0];
        if (!full_circle) {
            try {
                describe(classify_wall(ring, chams.front(), std::nullopt),
                         "boundary at " + ray_str(chams.front().rays[0]));
            } catch (const math_error&) {
            }
        }
        for (size_t i = 0; i + 1 < chams.size(); ++i) {
            describe(classify_wall(ring, chams[i], chams[i + 1]),
                     "between chambers " + std::to_string(i + 1) + " and " +
                         std::to_string(i + 2) + " at " +
                         ray_str(ring->rank() == 1 ? std::vector<long>{0}
                                                   : chams[i].rays[1]));
        }
        if (!full_circle && chams.size() > 1 && ring->rank() == 2) {
            try {
                describe(classify_wall(ring, chams.back(), std::nullopt),
                         "boundary at " + ray_str(chams.back().rays[1]));
            } catch (const math_error&) {
            }
        }
        if (full_circle) {
            describe(classify_wall(ring, chams.back(), chams.front()),
                     "between chambers " + std::to_string(chams.size()) + " and 1 at " +
                         ray_str(chams.back().rays[1]));
        }

        if (json_mode) {
            doc["chambers"] = jch;
            doc["walls"] = jw;
            out << doc.dump(2) << "\n";
        } else {
            out << text.str();
        }
        return 0;
    } catch (const math_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_lint(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "input error: cannot open " << path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto diags = scenario_lint(buf.str());
    if (diags.empty()) {
        out << "clean\n";
        return 0;
    }
    for (const auto& d : diags) out << d << "\n";
    return 1;
}

int cmd_suites(std::ostream& out) {
    for (const auto& name : builtin_suites()) out << name << "\n";
    return 0;
}

int cmd_lattice(const LatticeOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        if (opt.bundle_table) {
            out << "rank-2 bundles E on P^2 with c1 in {0,-1}, P(E) Fano or weak Fano:\n";
            for (const auto& bc : weak_fano_bundle_table()) {
                MatQ g = restriction_gram(bc.c1, bc.c2);
                out << "  case " << bc.id << ": " << bc.description << " (c1=" << bc.c1
                    << ", c2=" << bc.c2 << ")  restriction det " << det(g).str()
                    << (rank(g) < 2 ? " (rank-deficient)" : "") << "\n";
            }
            return 0;
        }
        std::vector<std::string> basis;
        {
            std::istringstream in(opt.basis);
            std::string w;
            while (in >> w) basis.push_back(w);
        }
        if (basis.empty()) throw math_error("lattice needs --basis");
        MatQ gram;
        for (const auto& row : parse_matrix(opt.gram)) {
            VecQ r;
            for (long x : row) r.push_back(Rational(x));
            gram.push_back(std::move(r));
        }
        auto lat = std::make_shared<const GramLattice>(basis, gram);
        out << "gram determinant: " << det(gram).str() << "\n";
        if (!opt.classes.empty()) {
            std::vector<DivClass> classes;
            std::string item;
            std::istringstream in(opt.classes);
            while (std::getline(in, item, ';')) classes.push_back(parse_class(lat, item));
            out << "pairwise intersections:\n";
            for (const auto& u : classes) {
                out << " ";
                for (const auto& v : classes) out << " " << inner(u, v).str();
                out << "\n";
            }
            out << "sublattice determinant: " << sublattice_det(classes).str() << "\n";
        }
        return 0;
    } catch (const math_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cypair::cli
