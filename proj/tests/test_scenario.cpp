#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scenario/bundled.hpp"
#include "scenario/parse.hpp"

#include <fstream>
#include <sstream>

using namespace cypair;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool models_equal(const Scenario& a, const Scenario& b) {
    if (a.ring_order != b.ring_order || a.pair_order != b.pair_order ||
        a.map_order != b.map_order || a.lattice_order != b.lattice_order ||
        a.region_order != b.region_order)
        return false;
    for (const auto& rn : a.ring_order)
        if (!same_ring(a.rings.at(rn), b.rings.at(rn))) return false;
    for (const auto& pn : a.pair_order) {
        const CYPair& pa = a.pairs.at(pn);
        const CYPair& pb = b.pairs.at(pn);
        if (!(pa.divisor == pb.divisor)) return false;
        if (pa.constraints.size() != pb.constraints.size()) return false;
        for (size_t i = 0; i < pa.constraints.size(); ++i)
            if (!(pa.constraints[i] == pb.constraints[i])) return false;
    }
    for (const auto& mn : a.map_order) {
        const auto& ma = a.maps.at(mn).graded_components();
        const auto& mb = b.maps.at(mn).graded_components();
        if (ma.size() != mb.size()) return false;
        for (size_t i = 0; i < ma.size(); ++i)
            if (!(ma[i] == mb[i])) return false;
    }
    if (a.checks.size() != b.checks.size()) return false;
    for (size_t i = 0; i < a.checks.size(); ++i) {
        if (a.checks[i].id != b.checks[i].id || a.checks[i].op != b.checks[i].op ||
            a.checks[i].provenance != b.checks[i].provenance ||
            a.checks[i].args != b.checks[i].args)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("every bundled suite parses and passes at seed 0") {
    for (const auto& name : builtin_suites()) {
        CAPTURE(name);
        auto rep = run_suite(name, 0);
        CHECK(rep.results.size() > 0);
        for (const auto& r : rep.results) {
            CAPTURE(r.id);
            CAPTURE(r.witness);
            CHECK(r.status == CheckStatus::Pass);
        }
    }
}

TEST_CASE("bundled text matches the shipped data files") {
    for (const auto& name : builtin_suites()) {
        CAPTURE(name);
        std::string file = read_file(std::string(CYPAIR_DATA_DIR) + "/scenarios/" + name +
                                     ".scn");
        CHECK(file == bundled_scenario_text(name));
    }
}

TEST_CASE("scenario parse -> serialize -> parse round trip") {
    for (const auto& name : builtin_suites()) {
        CAPTURE(name);
        Scenario s1 = load_bundled(name);
        std::string text = serialize(s1);
        Scenario s2 = scenario_parse(text, name);
        CHECK(models_equal(s1, s2));
    }
}

TEST_CASE("parse errors carry line information") {
    std::string bad = "[ring R]\nvars = x y\nweights = 1 1\n[pair P]\nambient = nope\ndivisor = x\n";
    CHECK_THROWS_WITH_AS(scenario_parse(bad), doctest::Contains("line 4"), scenario_error);

    std::string undeclared = "[ring R]\nvars = x y\nweights = 1 1\n\n[ambient A]\nring = R\n\n"
                             "[pair P]\nambient = A\ndivisor = x*z\n";
    CHECK_THROWS_WITH_AS(scenario_parse(undeclared), doctest::Contains("unknown identifier"),
                         scenario_error);
}

TEST_CASE("lint reports declaration-level defects without running") {
    // anticanonical mismatch: divisor degree misses the column sum
    std::string bad_pair =
        "[ring R]\nvars = x y z w\nweights = 1 1 1 1\n\n[ambient A]\nring = R\n\n"
        "[pair P]\nambient = A\ndivisor = x^2\n";
    auto d1 = scenario_lint(bad_pair);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].find("anticanonical") != std::string::npos);

    // grading inconsistency in a map
    std::string bad_map =
        "[ring R]\nvars = x y z w\nweights = 1 1 1 1\n\n[ambient A]\nring = R\n\n"
        "[map M]\nsource = A\ntarget = A\ncomponents = x ; y ; z ; x*w\n";
    auto d2 = scenario_lint(bad_map);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].find("grading inconsistency") != std::string::npos);

    // invalid chart in a check
    std::string bad_chart =
        "[ring R]\nvars = x y z w\nweights = 1 1 1 2\n\n[ambient A]\nring = R\n\n"
        "[map M]\nsource = A\ntarget = A\ncomponents = x ; y ; z ; w\n\n"
        "[check c1]\nop = map_equal\nleft = M\nright = M\nchart = w\nexpect = true\n"
        "provenance = trivial\n";
    auto d3 = scenario_lint(bad_chart);
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].find("unimodular") != std::string::npos);

    // clean file
    auto d4 = scenario_lint(bundled_scenario_text("thmC_regions"));
    CHECK(d4.empty());
}

TEST_CASE("suites are independent and reports deterministic per seed") {
    auto r1 = run_suite("identities", 3);
    auto r2 = run_suite("identities", 3);
    REQUIRE(r1.results.size() == r2.results.size());
    for (size_t i = 0; i < r1.results.size(); ++i) {
        CHECK(r1.results[i].id == r2.results[i].id);
        CHECK(r1.results[i].status == r2.results[i].status);
        CHECK(r1.results[i].witness == r2.results[i].witness);
    }
    // filtered runs honor the filter
    auto filtered = run_scenario(load_bundled("thmC_rr"), 0, {"rr03_deg10"});
    REQUIRE(filtered.results.size() == 1);
    CHECK(filtered.results[0].id == "rr03_deg10");
}

TEST_CASE("seeded atom values are deterministic and ring independent") {
    auto r1 = make_ring({"x0", "x1", "x2", "x3"}, {{1, 1, 1, 1}},
                        {{"B", {"x0", "x1", "x2"}, {3}, 0}});
    auto r2 = make_ring({"x0", "x1", "x2", "x3", "x"}, {{1, 1, 1, 0, -1}, {0, 0, 0, 1, 1}},
                        {{"B", {"x0", "x1", "x2"}, {3, 0}, 0}});
    auto v1 = seeded_atom_values(r1, 5);
    auto v2 = seeded_atom_values(r2, 5);
    // same monomials and coefficients on x0,x1,x2 in both rings
    REQUIRE(v1.count("B"));
    REQUIRE(v2.count("B"));
    CHECK(v1.at("B").term_count() == v2.at("B").term_count());
    auto it1 = v1.at("B").terms().begin();
    auto it2 = v2.at("B").terms().begin();
    for (; it1 != v1.at("B").terms().end(); ++it1, ++it2) {
        CHECK(it1->second == it2->second);
        for (size_t k = 0; k < 3; ++k) CHECK(it1->first.e[k] == it2->first.e[k]);
    }
}
