#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "birmap/singular.hpp"
#include "test_util.hpp"
#include "toric/toric.hpp"

using namespace cypair;
using testutil::Rng;

namespace {

RingPtr f_blowup_ring_6var() {
    // z0 z1 z2 z3 u v with weights (1,1,1,2,0,-2 / 0,0,0,0,1,1)
    return make_ring({"z0", "z1", "z2", "z3", "u", "v"},
                     {{1, 1, 1, 2, 0, -2}, {0, 0, 0, 0, 1, 1}});
}

RingPtr f_psi_ring_6var() {
    return make_ring({"x0", "x1", "x2", "y", "u", "v"},
                     {{1, 1, 1, 2, 0, -1}, {0, 0, 0, 0, 1, 1}});
}

RingPtr f_badlink_ring_7var() {
    return make_ring({"x0", "x1", "x2", "y", "u0", "u1", "u2"},
                     {{1, 1, 1, 2, 0, -1, -2}, {0, 0, 0, 0, 1, 1, 1}});
}

RingPtr p112_ring() {
    return make_ring({"x0", "x1", "x2", "y"}, {{1, 1, 1, 2}},
                     {{"B", {"x0", "x1", "x2"}, {3}, 0}, {"C", {"x0", "x1", "x2"}, {4}, 0}});
}

RingPtr a2_chain_ring(long a, long b) {
    return make_ring({"x0", "x1", "x2", "x3", "x4"},
                     {{-a, 1, 1, 0, -2}, {-b, -2, 0, 1, 1}});
}

}  // namespace

TEST_CASE("chamber decomposition of the three F-constructions") {
    auto chams6 = chamber_decomposition(f_blowup_ring_6var());
    REQUIRE(chams6.size() == 2);
    CHECK(chams6[0].rays == std::vector<std::vector<long>>{{1, 0}, {0, 1}});
    CHECK(chams6[1].rays == std::vector<std::vector<long>>{{0, 1}, {-2, 1}});

    auto chams_psi = chamber_decomposition(f_psi_ring_6var());
    REQUIRE(chams_psi.size() == 2);
    CHECK(chams_psi[1].rays == std::vector<std::vector<long>>{{0, 1}, {-1, 1}});

    auto chams7 = chamber_decomposition(f_badlink_ring_7var());
    REQUIRE(chams7.size() == 3);
    CHECK(chams7[0].rays == std::vector<std::vector<long>>{{1, 0}, {0, 1}});
    CHECK(chams7[1].rays == std::vector<std::vector<long>>{{0, 1}, {-1, 1}});
    CHECK(chams7[2].rays == std::vector<std::vector<long>>{{-1, 1}, {-2, 1}});

    auto p112 = chamber_decomposition(p112_ring());
    REQUIRE(p112.size() == 1);
    CHECK(p112[0].rays == std::vector<std::vector<long>>{{1}});
}

TEST_CASE("full-circle fan of the A2-chain neighbourhood") {
    auto ring = a2_chain_ring(1, 1);
    auto chams = chamber_decomposition(ring);
    CHECK(chams.size() == 5);
    // the quadrant is one of them
    bool found = false;
    for (const auto& c : chams)
        if (c.rays == std::vector<std::vector<long>>{{1, 0}, {0, 1}}) found = true;
    CHECK(found);
}

TEST_CASE("chambers tile the support") {
    for (const RingPtr& ring :
         {f_blowup_ring_6var(), f_psi_ring_6var(), f_badlink_ring_7var(), a2_chain_ring(1, 1)}) {
        auto chams = chamber_decomposition(ring);
        Rng rng(3);
        auto cross = [](const std::vector<long>& a, const std::vector<long>& b) {
            return a[0] * b[1] - a[1] * b[0];
        };
        int inside_count = 0;
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<long> v = {rng.range(-9, 9), rng.range(-9, 9)};
            if (v[0] == 0 && v[1] == 0) continue;
            int interior = 0, on_wall = 0, outside_means_support = 0;
            for (const auto& c : chams) {
                long s1 = cross(c.rays[0], v), s2 = cross(v, c.rays[1]);
                if (s1 > 0 && s2 > 0) ++interior;
                else if (s1 == 0 || s2 == 0) {
                    if (s1 >= 0 && s2 >= 0) ++on_wall;
                }
            }
            (void)outside_means_support;
            // at most one chamber interior; interior and wall exclusive
            CHECK(interior <= 1);
            if (interior == 1) {
                CHECK(on_wall == 0);
                ++inside_count;
            }
        }
        CHECK(inside_count > 0);
    }
}

TEST_CASE("irrelevant ideals of the bundled constructions") {
    auto amb6 = ToricAmbient::standard(f_blowup_ring_6var(), "F6");
    auto ii6 = irrelevant_ideal(amb6);
    CHECK(irrelevant_ideal_string(amb6.ring(), ii6) == "(z0,z1,z2,z3)(u,v)");

    auto amb_psi = ToricAmbient::standard(f_psi_ring_6var(), "Fpsi");
    CHECK(irrelevant_ideal_string(amb_psi.ring(), irrelevant_ideal(amb_psi)) ==
          "(x0,x1,x2,y)(u,v)");

    auto amb7 = ToricAmbient::standard(f_badlink_ring_7var(), "F7");
    CHECK(irrelevant_ideal_string(amb7.ring(), irrelevant_ideal(amb7)) ==
          "(x0,x1,x2,y)(u0,u1,u2)");

    auto p3 = make_ring({"x0", "x1", "x2", "x3"}, {{1, 1, 1, 1}});
    auto ambp3 = ToricAmbient::standard(p3, "P3");
    CHECK(irrelevant_ideal_string(p3, irrelevant_ideal(ambp3)) == "(x0,x1,x2,x3)");

    // wall stability of the A2-chain antiflip: irrelevant ideal (x0, x1*x4)
    auto ring = a2_chain_ring(1, 1);
    auto ii = irrelevant_ideal_at(ring, {-1, -1});
    CHECK(irrelevant_ideal_string(ring, ii) == "(x0, x1*x4)");
}

TEST_CASE("wall classifications") {
    auto ring6 = f_blowup_ring_6var();
    auto chams6 = chamber_decomposition(ring6);
    auto wc = classify_wall(ring6, chams6[0], chams6[1]);
    CHECK(wc.kind == WallKind::DivisorialContraction);
    REQUIRE(wc.far_vars.size() == 1);
    CHECK(ring6->vars()[wc.far_vars[0]] == "v");

    // boundary wall of the nef chamber: the P^1-bundle fibration
    auto bc = classify_wall(ring6, chams6[0], std::nullopt);
    CHECK(bc.kind == WallKind::Fibration);

    auto ring7 = f_badlink_ring_7var();
    auto chams7 = chamber_decomposition(ring7);
    auto flip = classify_wall(ring7, chams7[0], chams7[1]);
    CHECK(flip.kind == WallKind::SmallModification);
    REQUIRE(flip.far_vars.size() == 2);
    CHECK(ring7->vars()[flip.far_vars[0]] == "u1");
    CHECK(ring7->vars()[flip.far_vars[1]] == "u2");
    auto div = classify_wall(ring7, chams7[1], chams7[2]);
    CHECK(div.kind == WallKind::DivisorialContraction);
    CHECK(ring7->vars()[div.far_vars[0]] == "u2");

    // orientation consistency: crossing back across the divisorial wall, the
    // far side holds exactly the variables that were near-side before (the
    // extracted locus), and the wall ray is the same
    auto back = classify_wall(ring6, chams6[1], chams6[0]);
    CHECK(back.ray == wc.ray);
    CHECK(back.far_vars.size() == 4);
    for (size_t v : back.far_vars) CHECK(ring6->vars()[v][0] == 'z');

    // rank 1: P^3 boundary wall is a fibration to a point
    auto p3 = make_ring({"x0", "x1", "x2", "x3"}, {{1, 1, 1, 1}});
    auto chp3 = chamber_decomposition(p3);
    auto fib = classify_wall(p3, chp3[0], std::nullopt);
    CHECK(fib.kind == WallKind::Fibration);

    // rank 1 antiflip model of the trivial-neighbourhood lemma, k = 3
    auto nb = make_ring({"x0", "x1", "y0", "y1"}, {{1, 1, -2, -3}});
    auto chnb = chamber_decomposition(nb);
    REQUIRE(chnb.size() == 2);
    auto anti = classify_wall(nb, chnb[0], chnb[1]);
    CHECK(anti.kind == WallKind::SmallModification);
    CHECK(anti.far_vars.size() == 2);
}

TEST_CASE("charts: unimodularity, dehomogenization, orientation") {
    auto p112 = p112_ring();
    auto amb = ToricAmbient::standard(p112, "P(1,1,1,2)");
    Chart c0(amb, {0});
    CHECK_THROWS_WITH_AS(Chart(amb, {3}), doctest::Contains("determinant"), math_error);

    // dehomogenize D_5^a with concrete B, C: the result is exactly
    // y^2 + B(1,x1,x2) y + x1 C(1,x1,x2)
    Rng rng(5);
    std::map<size_t, Poly> vals;
    vals.emplace(*p112->find_symbol("B"), testutil::random_form(rng, p112, {0, 1, 2}, 3));
    vals.emplace(*p112->find_symbol("C"), testutil::random_form(rng, p112, {0, 1, 2}, 4));
    Poly d5a = poly_parse("x0*y^2 + B*y + x1*C", p112).specialize_atoms(vals);
    Poly dh = c0.dehomogenize(d5a);
    CHECK(dh.ring()->num_vars() == 3);
    CHECK(dh.degree_in(*dh.ring()->find_var("y")) == 2);
    {
        const RingPtr& cr = dh.ring();
        // move B, C to the chart ring by substituting x0 = 1 exponent-wise
        std::map<size_t, RatFunc> at_one;
        at_one.emplace(*p112->find_var("x0"), RatFunc::constant(cr, 1));
        at_one.emplace(*p112->find_var("x1"), RatFunc(Poly::symbol(cr, *cr->find_var("x1"))));
        at_one.emplace(*p112->find_var("x2"), RatFunc(Poly::symbol(cr, *cr->find_var("x2"))));
        at_one.emplace(*p112->find_var("y"), RatFunc(Poly::symbol(cr, *cr->find_var("y"))));
        Poly b1 = substitute(vals.at(*p112->find_symbol("B")), at_one).num();
        Poly c1 = substitute(vals.at(*p112->find_symbol("C")), at_one).num();
        Poly y = Poly::symbol(cr, *cr->find_var("y"));
        Poly x1v = Poly::symbol(cr, *cr->find_var("x1"));
        CHECK(dh == y * y + b1 * y + x1v * c1);
    }

    // F_1^3 chart {x0, x3} has an identity weight submatrix
    auto f1 = testutil::f1_ring();
    auto ambf1 = ToricAmbient::standard(f1, "F1");
    Chart cf(ambf1, {0, 3});
    CHECK(cf.coords().size() == 3);

    // multiplicativity of dehomogenization
    for (int i = 0; i < 50; ++i) {
        Poly p = testutil::random_poly(rng, f1, 3, 2);
        Poly q = testutil::random_poly(rng, f1, 3, 2);
        // strip atoms with arguments in the unit set: use variables only
        std::map<size_t, Poly> kill;
        kill.emplace(*f1->find_symbol("B"), Poly::constant(f1, 1));
        kill.emplace(*f1->find_symbol("C"), Poly::constant(f1, 1));
        p = p.specialize_atoms(kill);
        q = q.specialize_atoms(kill);
        CHECK(cf.dehomogenize(p * q) == cf.dehomogenize(p) * cf.dehomogenize(q));
    }
}

TEST_CASE("quotient charts and their Reid-Tai classes") {
    // vertex chart of P(1,1,1,2): 1/2(1,1,1), terminal
    auto p112 = p112_ring();
    auto q = quotient_chart(p112, {3});
    CHECK(q.order == 2);
    REQUIRE(q.cyclic);
    CHECK(q.weights == std::vector<long>{1, 1, 1});
    CHECK(reid_tai(q) == ReidTai::Terminal);

    // A2-chain antiflip chart {x1, x4}: 1/3(0,1,2) up to ordering, strictly canonical
    auto ring = a2_chain_ring(1, 1);
    auto q3 = quotient_chart(ring, {1, 4});
    CHECK(q3.order == 3);
    REQUIRE(q3.cyclic);
    std::vector<long> w = q3.weights;
    std::sort(w.begin(), w.end());
    CHECK(w == std::vector<long>{0, 1, 2});
    CHECK(reid_tai(q3) == ReidTai::CanonicalNotTerminal);

    // rank-1 antiflip far chart {y1} for k = 3: residual 1/3(1,1,-2)
    auto nb = make_ring({"x0", "x1", "y0", "y1"}, {{1, 1, -2, -3}});
    auto qk = quotient_chart(nb, {3});
    CHECK(qk.order == 3);
    REQUIRE(qk.cyclic);
    CHECK(reid_tai(qk) == ReidTai::CanonicalNotTerminal);
}
