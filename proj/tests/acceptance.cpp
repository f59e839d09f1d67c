// Acceptance suite: every criterion is exact (tolerance zero); prints one
// pass/fail line per criterion and exits nonzero if any fails.

#include "algebra/matq.hpp"
#include "birmap/pell.hpp"
#include "birmap/singular.hpp"
#include "birmap/volume.hpp"
#include "fixtures.hpp"
#include "lattice/lattice.hpp"
#include "lattice/region.hpp"
#include "scenario/bundled.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace cypair;
using fixtures::Table1;
using testutil::Rng;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::ostream&)> body;
};

Table1& T() {
    static Table1 t = fixtures::make_table1();
    return t;
}

// sparse specialization used where dense forms would slow the randomized
// sweeps without adding coverage
std::map<std::string, Poly> sparse_atom_values(const RingPtr& ring, uint64_t seed) {
    std::map<std::string, Poly> out;
    for (const auto& atom : ring->atoms()) {
        uint64_t h = seed * 7777777ull + 13;
        for (char ch : atom.name) h = h * 131 + static_cast<unsigned char>(ch);
        Rng rng(h);
        std::vector<size_t> args;
        for (int a : atom.args) args.push_back(static_cast<size_t>(a));
        out.emplace(atom.name,
                    testutil::random_sparse_form(rng, ring, args, atom.form_degree, 2));
    }
    return out;
}

CYPair sparse_pair(const CYPair& p, uint64_t seed) {
    auto vals = sparse_atom_values(p.ambient.ring(), seed);
    std::vector<Poly> cons;
    for (const auto& c : p.constraints) cons.push_back(fixtures::specialize(c, vals));
    return CYPair(p.ambient, std::move(cons), fixtures::specialize(p.divisor, vals), p.label);
}

RationalMapSpec sparse_map(const RationalMapSpec& m, uint64_t seed) {
    return m.specialized(sparse_atom_values(m.source().ring(), seed));
}

bool criterion1(std::ostream& log) {
    auto& t = T();
    // symbolic first, then three seeds of concrete B, C, L, Q
    for (int round = 0; round < 4; ++round) {
        bool symbolic = round == 0;
        uint64_t seed = static_cast<uint64_t>(round);
        auto spec_pair = [&](const char* n) {
            return symbolic ? t.pair(n) : fixtures::specialize(t.pair(n), seed);
        };
        auto spec_map = [&](const char* n) {
            return symbolic ? t.map(n) : fixtures::specialize(t.map(n), seed);
        };
        auto spec_exc = [&](const char* n) {
            std::vector<Poly> out;
            for (const auto& e : t.exceptional.at(n))
                out.push_back(symbolic ? e
                                       : fixtures::specialize(
                                             e, fixtures::atom_values(e.ring(), seed)));
            return out;
        };

        auto st_sigma = strict_transform(spec_pair("obj1").divisor, spec_map("sigma"), {});
        bool x2 = false;
        for (const auto& r : st_sigma.removed)
            if (r.factor == Poly::symbol(t.f1, 4) && r.multiplicity == 2) x2 = true;
        if (!proportional_scalar(st_sigma.transform, spec_pair("obj2").divisor) || !x2) {
            log << "sigma saturation failed (round " << round << ")";
            return false;
        }

        auto st_eps = strict_transform(spec_pair("obj3b").divisor, spec_map("eps_b"), {});
        if (!proportional_scalar(st_eps.transform, spec_pair("obj1").divisor) ||
            st_eps.removed.size() != 1 || !(st_eps.removed[0].factor == Poly::symbol(t.p3, 0)) ||
            st_eps.removed[0].multiplicity != 1) {
            log << "eps_b saturation failed (round " << round << ")";
            return false;
        }

        // phi_b and psi_a reproduce the Table-1 object-4 / object-5a divisors
        auto st_phi = strict_transform(spec_pair("obj4").divisor, spec_map("phi_b"),
                                       spec_exc("phi_b"));
        if (!proportional_scalar(st_phi.transform, spec_pair("obj3b").divisor)) {
            log << "phi_b pullback failed (round " << round << ")";
            return false;
        }
        if (!restricts_birationally(spec_map("phi_b"), spec_map("phi_b_inv"), spec_pair("obj3b"),
                                    spec_pair("obj4"), "y1", spec_exc("phi_b"),
                                    spec_exc("phi_b_inv"))) {
            log << "phi_b push-forward does not reproduce the object-4 divisor (round " << round
                << ")";
            return false;
        }
        auto st_psi = strict_transform(spec_pair("obj5a").divisor, spec_map("psi_a"),
                                       spec_exc("psi_a"));
        if (!proportional_scalar(st_psi.transform, spec_pair("obj3a").divisor)) {
            log << "psi_a pullback failed (round " << round << ")";
            return false;
        }
        if (!restricts_birationally(spec_map("psi_a"), spec_map("psi_a_inv"), spec_pair("obj3a"),
                                    spec_pair("obj5a"), "y", spec_exc("psi_a"),
                                    spec_exc("psi_a_inv"))) {
            log << "psi_a push-forward does not reproduce the object-5a divisor (round " << round
                << ")";
            return false;
        }
    }
    log << "sigma (x:2), eps_b (x0:1), phi_b, psi_a exact on 3 seeds and symbolically";
    return true;
}

bool criterion2(std::ostream& log) {
    auto& t = T();
    auto comp_b = map_compose(map_compose(t.map("nu_b"), t.map("sigma")), t.map("eps_b"));
    auto comp_a = map_compose(map_compose(t.map("nu_a"), t.map("sigma")), t.map("eps_a"));
    Chart c0(t.amb("P1112"), {0}), c1(t.amb("P1112"), {1});
    if (!map_equal(t.map("chi_b"), comp_b, c0) || !map_equal(t.map("chi_b"), comp_b, c1) ||
        !map_equal(t.map("chi_a"), comp_a, c0)) {
        log << "chi = eps . sigma . nu failed";
        return false;
    }

    // the involution of (induce_tau) squares to the identity, symbolically
    auto ring = make_ring({"x0", "x1", "x2", "x3"}, {{1, 1, 1, 1}},
                          {{"A", {"x0", "x1", "x2"}, {2}, 0},
                           {"B", {"x0", "x1", "x2"}, {3}, 0},
                           {"C", {"x0", "x1", "x2"}, {4}, 0}});
    auto amb = ToricAmbient::standard(ring, "P3");
    auto tau = pell_selfmap(amb, poly_parse("A", ring), poly_parse("B", ring),
                            poly_parse("C", ring), Poly::zero(ring), Poly::constant(ring, 1), 2);
    if (!map_compose(tau, tau).is_identity()) {
        log << "tau . tau != id";
        return false;
    }

    // the 5a -> 5b substitution identity, exact with symbolic B, C, Q
    Poly lhs = t.pair("obj5a").constraints[0];
    std::map<size_t, RatFunc> bind;
    for (size_t i = 0; i < 4; ++i) bind.emplace(i, RatFunc(Poly::symbol(t.p11112, i)));
    bind.emplace(4, ratfunc_parse("-y - x3*(x0+x1)", t.p11112));
    RatFunc moved = substitute(t.pair("obj5b").constraints[0], bind);
    if (!(moved == RatFunc(lhs))) {
        log << "object-5 substitution identity failed";
        return false;
    }
    log << "chi factorizations, tau involution, 5a->5b identity all exact";
    return true;
}

bool criterion3(std::ostream& log) {
    auto& t = T();
    struct Case {
        const char* map;
        const char* src;
        const char* tgt;
        std::set<size_t> sc1, tc1, sc2, tc2;
    };
    std::vector<Case> cases = {
        {"sigma", "obj2", "obj1", {0, 4}, {0}, {1, 3}, {1}},
        {"nu_a", "obj2a", "obj2", {0, 3}, {0, 3}, {2, 3}, {2, 3}},
        {"nu_b", "obj2b", "obj2", {1, 3}, {1, 3}, {2, 3}, {2, 3}},
        {"eps_a", "obj1", "obj3a", {0}, {0}, {2}, {2}},
        {"eps_b", "obj1", "obj3b", {1}, {1}, {2}, {2}},
        {"chi_a", "obj2a", "obj3a", {0, 3}, {0}, {1, 3}, {1}},
        {"chi_b", "obj2b", "obj3b", {0, 3}, {0}, {1, 3}, {1}},
    };
    for (uint64_t seed : {0ull, 1ull, 2ull}) {
        for (const auto& c : cases) {
            auto src = fixtures::specialize(t.pair(c.src), seed);
            auto tgt = fixtures::specialize(t.pair(c.tgt), seed);
            auto m = fixtures::specialize(t.map(c.map), seed);
            auto r1 = volume_preserving(m, src, tgt, Chart(src.ambient, c.sc1),
                                        Chart(tgt.ambient, c.tc1));
            auto r2 = volume_preserving(m, src, tgt, Chart(src.ambient, c.sc2),
                                        Chart(tgt.ambient, c.tc2));
            if (r1.status != VPStatus::Preserved || r2.status != VPStatus::Preserved ||
                !(*r1.lambda == *r2.lambda)) {
                log << c.map << " not constant-lambda on both chart pairs (seed " << seed << ")";
                return false;
            }
        }
    }
    for (const char* name : {"psi_a", "psi_b", "phi_a", "phi_b"}) {
        std::string inv = std::string(name) + "_inv";
        std::string src = (std::string(name) == "psi_a" || std::string(name) == "phi_a")
                              ? "obj3a"
                              : "obj3b";
        std::string tgt = (name[0] == 'p' && name[1] == 's')
                              ? (std::string(name) == "psi_a" ? "obj5a" : "obj5b")
                              : "obj4";
        std::string elim = (name[1] == 's') ? "y" : "y1";
        if (!restricts_birationally(t.map(name), t.map(inv.c_str()), t.pair(src.c_str()),
                                    t.pair(tgt.c_str()), elim, t.exceptional.at(name),
                                    t.exceptional.at(inv))) {
            log << name << " restricts_birationally failed";
            return false;
        }
    }
    log << "7 toric links constant-lambda on 2 chart pairs x 3 seeds; phi/psi certified mod X4";
    return true;
}

bool criterion4(std::ostream& log) {
    int hits = 0;
    for (const auto& bc : weak_fano_bundle_table()) {
        MatQ g = restriction_gram(bc.c1, bc.c2);
        Rational d = det(g);
        bool deficient = rank(g) < 2;
        if (d == Rational(-8)) {
            ++hits;
            if (bc.id != 1) {
                log << "case " << bc.id << " also has det -8";
                return false;
            }
        }
        if (deficient != (bc.id == 8)) {
            log << "rank deficiency misplaced at case " << bc.id;
            return false;
        }
    }
    if (hits != 1) {
        log << "expected exactly one det -8 case, found " << hits;
        return false;
    }
    log << "det = -8 exactly for case (1); case (8) rank-deficient; 16 entries scanned";
    return true;
}

bool criterion5(std::ostream& log) {
    Region diamond;
    diamond.vars = {"b0", "b1"};
    diamond.add("-5*b0 + b1 + 6", false);
    diamond.add("5*b0 - b1 + 6", false);
    diamond.add("b0 - 5*b1 + 6", false);
    diamond.add("-b0 + 5*b1 + 6", false);
    std::vector<std::vector<long>> expect_diamond = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 0},
                                                     {0, 1},   {1, -1}, {1, 0},  {1, 1}};
    if (integer_points(diamond) != expect_diamond) {
        log << "diamond enumeration failed";
        return false;
    }
    Region ab;
    ab.vars = {"a", "b"};
    ab.add("5 + 2*a - 6*b", false);
    ab.add("15/2 + 3*b - 3*a", false);
    ab.add("a", false);
    ab.add("b", false);
    std::vector<std::vector<long>> expect_ab = {{0, 0}, {1, 0}, {1, 1}, {2, 0},
                                                {2, 1}, {3, 1}, {4, 2}};
    if (integer_points(ab) != expect_ab) {
        log << "(a,b) enumeration failed";
        return false;
    }
    Region bad;
    bad.vars = {"b0", "b1"};
    bad.add("5*b0 - b1 - 7", true);
    bad.add("b0 - 5*b1 + 7", false);
    bad.add("-b0 + 5*b1 + 7", false);
    if (!integer_points(bad).empty()) {
        log << "contradictory system has integer points";
        return false;
    }
    log << "9-point diamond, 7-point (a,b) region, infeasible {5b0-b1=7, |b0-5b1|<=7}";
    return true;
}

bool criterion6(std::ostream& log) {
    MatQ g = {{Rational(-3, 2), Rational(3)}, {Rational(3), Rational(-2)}};
    auto lat = std::make_shared<const GramLattice>(std::vector<std::string>{"e1", "e1bar"}, g);
    auto pol = parse_class(lat, "e1 + e1bar");
    struct Row {
        const char* curve;
        long twist, dp, dk;
        std::pair<long, long> h0;
    };
    std::vector<Row> rows = {{"e1bar + 2*e1", 2, 8, 4, {6, 6}},
                             {"3*e1bar + 2*e1", 3, 18, 12, {12, 12}},
                             {"2*e1 + 2*e1bar", 2, 10, 10, {5, 6}},
                             {"4*e1 + 4*e1bar", 4, 40, 40, {20, 21}},
                             {"3*e1bar + 4*e1", 4, 36, 30, {21, 21}}};
    for (const auto& r : rows) {
        auto rr = rr_on_k3_curve(parse_class(lat, r.curve), pol, r.twist);
        if (rr.deg_p != Rational(r.dp) || rr.deg_k != Rational(r.dk) || rr.h0_bounds != r.h0) {
            log << "row " << r.curve << " mismatch";
            return false;
        }
    }
    log << "(8,4,6), (18,12,12), (10,10,{5,6}), (40,40,{20,21}), (36,30,21) reproduced";
    return true;
}

bool criterion7(std::ostream& log) {
    auto rep = run_suite("thmC_toric_games", 0);
    if (!rep.all_passed()) {
        for (const auto& r : rep.results)
            if (r.status != CheckStatus::Pass) log << r.id << ": " << r.witness << "; ";
        return false;
    }
    // the two named walls, asserted directly
    auto f7 = make_ring({"x0", "x1", "x2", "y", "u0", "u1", "u2"},
                        {{1, 1, 1, 2, 0, -1, -2}, {0, 0, 0, 0, 1, 1, 1}});
    auto ch7 = chamber_decomposition(f7);
    auto flip = classify_wall(f7, ch7[0], ch7[1]);
    auto f6 = make_ring({"z0", "z1", "z2", "z3", "u", "v"},
                        {{1, 1, 1, 2, 0, -2}, {0, 0, 0, 0, 1, 1}});
    auto ch6 = chamber_decomposition(f6);
    auto dv = classify_wall(f6, ch6[0], ch6[1]);
    bool ok = flip.kind == WallKind::SmallModification && flip.far_vars.size() == 2 &&
              f7->vars()[flip.far_vars[0]] == "u1" && f7->vars()[flip.far_vars[1]] == "u2" &&
              dv.kind == WallKind::DivisorialContraction &&
              f6->vars()[dv.far_vars[0]] == "v";
    if (!ok) {
        log << "named wall classifications failed";
        return false;
    }
    log << "all five bundled matrices match: chambers, irrelevant ideals, flip {u1=u2}, "
           "divisorial v";
    return true;
}

bool criterion8(std::ostream& log) {
    auto& t = T();
    // tangent cones: A1 hypothesis has rank 3, A2 hypothesis rank 2
    for (uint64_t seed : {0ull, 1ull, 2ull}) {
        auto p1 = fixtures::specialize(t.pair("obj1"), seed);
        Chart chart(p1.ambient, {3});
        auto tc = tangent_cone(p1.divisor, chart, {0, 0, 0});
        if (tc.multiplicity != 2 || !tc.quadratic_rank || *tc.quadratic_rank != 2) {
            log << "A2 tangent cone failed at seed " << seed;
            return false;
        }
        auto cls = classify_Ak(p1.divisor, chart, {0, 0, 0}, 6);
        if (cls.kind != AkClass::Ak || cls.k != 2) {
            log << "classify_Ak(A2 quartic) failed at seed " << seed;
            return false;
        }
    }
    auto ringA = make_ring({"x0", "x1", "x2", "x3"}, {{1, 1, 1, 1}});
    Poly dA1 = poly_parse(
        "x3^2*(x0^2 + x1^2 + x2^2) + x3*(x0^3 + x1^3 + x2^3) + x0^4 + x1^4 + x2^4", ringA);
    Chart chA(ToricAmbient::standard(ringA, "P3"), {3});
    auto tcA = tangent_cone(dA1, chA, {0, 0, 0});
    if (!tcA.quadratic_rank || *tcA.quadratic_rank != 3) {
        log << "A1 tangent cone rank failed";
        return false;
    }

    if (reid_tai(2, {1, 1, 1}) != ReidTai::Terminal ||
        reid_tai(3, {0, 1, 2}) != ReidTai::CanonicalNotTerminal) {
        log << "reid_tai named cases failed";
        return false;
    }
    for (long k : {3L, 5L, 7L}) {
        if (reid_tai(k, {1, 1, -2}) != ReidTai::CanonicalNotTerminal) {
            log << "1/" << k << "(1,1,-2) misclassified";
            return false;
        }
    }
    // brute-force oracle agreement for all r <= 30
    for (long r = 1; r <= 30; ++r) {
        auto mod = [&](long x) { return ((x % r) + r) % r; };
        for (long w0 = 0; w0 < r; ++w0)
            for (long w1 = 0; w1 <= w0; ++w1)
                for (long w2 = 0; w2 <= w1; ++w2) {
                    ReidTai oracle;
                    bool above = true, at_least = true;
                    for (long j = 1; j < r; ++j) {
                        long num = mod(j * w0) + mod(j * w1) + mod(j * w2);
                        if (num < r) at_least = false;
                        if (num <= r) above = false;
                    }
                    oracle = r == 1 ? ReidTai::Terminal
                                    : (above ? ReidTai::Terminal
                                             : (at_least ? ReidTai::CanonicalNotTerminal
                                                         : ReidTai::WorseThanCanonical));
                    if (reid_tai(r, {w0, w1, w2}) != oracle) {
                        log << "oracle mismatch at 1/" << r << "(" << w0 << "," << w1 << ","
                            << w2 << ")";
                        return false;
                    }
                }
    }
    log << "tangent-cone ranks, A2 classification x3 seeds, Reid-Tai vs oracle for r <= 30";
    return true;
}

bool criterion9(std::ostream& log) {
    // exact Pell identity with symbolic forms
    auto ring = make_ring({"x0", "x1", "x2", "u", "v"}, {{1, 1, 1, 1, 1}},
                          {{"A", {"x0", "x1", "x2"}, {2}, 0},
                           {"B", {"x0", "x1", "x2"}, {3}, 0},
                           {"C", {"x0", "x1", "x2"}, {4}, 0}});
    Poly A = poly_parse("A", ring), B = poly_parse("B", ring), C = poly_parse("C", ring);
    Poly u = poly_parse("u", ring), v = poly_parse("v", ring);
    if (!(A.scaled(4) * (A * u * u + B * u * v + C * v * v) ==
          (A * u.scaled(2) + B * v).pow(2) - (B * B - A * C.scaled(4)) * v * v)) {
        log << "4AQ = w^2 - delta v^2 failed";
        return false;
    }

    // component classification of the two parametrized families
    auto gq = make_ring({"x", "y"}, {{1, 1}});
    auto rf = [&](const std::string& s) { return ratfunc_parse(s, gq); };
    RatFunc qa = rf("x^2+1"), qb = rf("x*y"), qc = rf("y^2+x+2");
    Rng rng(99);
    for (int i = 0; i < 25; ++i) {
        RatFunc g = RatFunc::constant(gq, rng.coeff()), d = RatFunc::constant(gq, rng.coeff());
        RatFunc a1 = -(qb / qa) * g + d, b1 = -(qc / qa) * g;
        if (!(a1 * d - b1 * g).is_zero() &&
            gq_membership(qa, qb, qc, a1, b1, g, d) != GQComponent::Component1) {
            log << "family-1 classification failed";
            return false;
        }
        RatFunc a2 = -d, b2 = (qc / qa) * g - (qb / qa) * d;
        if (!(a2 * d - b2 * g).is_zero() &&
            gq_membership(qa, qb, qc, a2, b2, g, d) != GQComponent::Component2) {
            log << "family-2 classification failed";
            return false;
        }
    }

    // >= 5 sampled members per variant: volume preserving; variant 1 fixes D
    // pointwise, the (induce_tau) involution does not
    auto p3 = make_ring({"x0", "x1", "x2", "x3"}, {{1, 1, 1, 1}});
    auto amb = ToricAmbient::standard(p3, "P3");
    Rng prng(2027);
    int done = 0;
    while (done < 5) {
        Poly sA = testutil::random_sparse_form(prng, p3, {0, 1, 2}, 2, 2);
        Poly sB = testutil::random_sparse_form(prng, p3, {0, 1, 2}, 3, 2);
        Poly sC = testutil::random_sparse_form(prng, p3, {0, 1, 2}, 4, 2);
        Poly sF = testutil::random_sparse_form(prng, p3, {0, 1, 2}, 1, 2);
        Poly sG = testutil::random_sparse_form(prng, p3, {0, 1, 2}, 2, 2);
        if (!poly_gcd(poly_gcd(sA, sB), sC).is_constant()) continue;
        Poly D = poly_parse("x3^2", p3) * sA + poly_parse("x3", p3) * sB + sC;
        CYPair pair(amb, {}, D, "A1-quartic");
        Chart c0(amb, {0});
        auto m1 = pell_selfmap(amb, sA, sB, sC, sF, sG, 1);
        if (!poly_gcd(sA * (sF * Poly::symbol(p3, 3) + sG), m1.cleared_components()[3])
                 .is_constant())
            continue;
        auto m2 = pell_selfmap(amb, sA, sB, sC, sF, sG, 2);
        auto tau = pell_selfmap(amb, sA, sB, sC, Poly::zero(p3), Poly::constant(p3, 1), 2);
        auto r1 = volume_preserving(m1, pair, pair, c0, c0);
        auto r2 = volume_preserving(m2, pair, pair, c0, c0);
        auto rt = volume_preserving(tau, pair, pair, c0, c0);
        if (r1.status != VPStatus::Preserved || r2.status != VPStatus::Preserved ||
            rt.status != VPStatus::Preserved) {
            log << "sampled member not volume preserving";
            return false;
        }
        if (!fixes_divisor_pointwise(m1, D) || fixes_divisor_pointwise(tau, D)) {
            log << "pointwise-fixing behavior wrong";
            return false;
        }
        ++done;
    }
    log << "4AQ identity, G_Q component families, 5 sampled members per variant";
    return true;
}

bool criterion10(std::ostream& log) {
    auto& t = T();
    for (uint64_t seed : {11ull, 22ull, 33ull}) {
        Rng rng(seed);
        // parser round trip
        for (int i = 0; i < 100; ++i) {
            const RingPtr& ring = (i % 2) ? t.f1 : t.p3;
            Poly p = testutil::random_poly(rng, ring, 5, 3);
            if (!(poly_parse(to_string(p), ring) == p)) {
                log << "round trip failed";
                return false;
            }
        }
        // multidegree multiplicativity
        int done = 0;
        while (done < 100) {
            Poly a = testutil::random_form(rng, t.f1, {0, 1, 2}, rng.range(1, 2)) *
                     Poly::symbol(t.f1, 3, static_cast<int>(rng.range(0, 2)));
            Poly b = testutil::random_form(rng, t.f1, {0, 1, 2}, rng.range(1, 2)) *
                     Poly::symbol(t.f1, 4, static_cast<int>(rng.range(0, 2)));
            if (a.is_zero() || b.is_zero()) continue;
            auto da = a.multidegree_checked(), db = b.multidegree_checked();
            auto dd = (a * b).multidegree_checked();
            if (dd != std::vector<long>{da[0] + db[0], da[1] + db[1]}) {
                log << "multidegree multiplicativity failed";
                return false;
            }
            ++done;
        }
        // chart independence of lambda across the bundled links
        struct VPCase {
            const char* map;
            const char* src;
            const char* tgt;
            std::set<size_t> sc1, tc1, sc2, tc2;
        };
        std::vector<VPCase> vps = {
            {"sigma", "obj2", "obj1", {0, 4}, {0}, {2, 3}, {2}},
            {"eps_b", "obj1", "obj3b", {1}, {1}, {2}, {2}},
            {"eps_a", "obj1", "obj3a", {0}, {0}, {2}, {2}},
            {"nu_a", "obj2a", "obj2", {0, 3}, {0, 3}, {1, 3}, {2, 3}},
            {"chi_b", "obj2b", "obj3b", {0, 3}, {0}, {2, 3}, {2}},
        };
        for (int i = 0; i < 100; ++i) {
            const auto& c = vps[static_cast<size_t>(rng.range(0, 4))];
            uint64_t s2 = seed * 1000 + static_cast<uint64_t>(i);
            auto src = sparse_pair(t.pair(c.src), s2);
            auto tgt = sparse_pair(t.pair(c.tgt), s2);
            auto m = sparse_map(t.map(c.map), s2);
            auto r1 = volume_preserving(m, src, tgt, Chart(src.ambient, c.sc1),
                                        Chart(tgt.ambient, c.tc1));
            auto r2 = volume_preserving(m, src, tgt, Chart(src.ambient, c.sc2),
                                        Chart(tgt.ambient, c.tc2));
            if (r1.status != VPStatus::Preserved || r2.status != VPStatus::Preserved ||
                !(*r1.lambda == *r2.lambda)) {
                log << "lambda chart dependence for " << c.map;
                return false;
            }
        }
        // integer points vs box oracle
        done = 0;
        while (done < 100) {
            Region r;
            r.vars = {"x", "y"};
            long bx = rng.range(2, 6), by = rng.range(2, 6);
            r.add("x + " + std::to_string(bx), false);
            r.add(std::to_string(bx) + " - x", false);
            r.add("y + " + std::to_string(by), false);
            r.add(std::to_string(by) + " - y", false);
            for (int k = 0; k < 2; ++k)
                r.add(std::to_string(rng.range(-3, 3)) + "*x + " +
                          std::to_string(rng.range(-3, 3)) + "*y + " +
                          std::to_string(rng.range(-4, 4)),
                      false);
            std::vector<std::vector<long>> oracle;
            for (long x = -8; x <= 8; ++x)
                for (long y = -8; y <= 8; ++y)
                    if (r.contains({Rational(x), Rational(y)})) oracle.push_back({x, y});
            if (integer_points(r) != oracle) {
                log << "integer_points oracle mismatch";
                return false;
            }
            ++done;
        }
        // unimodular invariance of sublattice_det
        MatQ gram = {{Rational(4), Rational(0), Rational(0)},
                     {Rational(0), Rational(-2), Rational(1)},
                     {Rational(0), Rational(1), Rational(-2)}};
        auto lat = std::make_shared<const GramLattice>(
            std::vector<std::string>{"h", "e0", "e1"}, gram);
        std::vector<DivClass> basis = {parse_class(lat, "h"), parse_class(lat, "e0"),
                                       parse_class(lat, "e1")};
        Rational d0 = sublattice_det(basis);
        for (int i = 0; i < 100; ++i) {
            auto nb = basis;
            for (int step = 0; step < 5; ++step) {
                size_t a = rng.range(0, 2), b = rng.range(0, 2);
                if (a == b) continue;
                long f = rng.range(-2, 2);
                for (int k = 0; k < 3; ++k) nb[a].coords[k] += Rational(f) * nb[b].coords[k];
            }
            if (sublattice_det(nb) != d0) {
                log << "sublattice_det not invariant";
                return false;
            }
        }
        // classify_Ak on randomized normal forms
        auto aff = make_ring({"w", "x", "y", "z"}, {{1, 1, 1, 1}});
        Chart chart(ToricAmbient::standard(aff, "A3"), {0});
        done = 0;
        while (done < 100) {
            long k = rng.range(1, 5);
            MatQ m(3, VecQ(3));
            for (auto& row : m)
                for (auto& x : row) x = Rational(rng.range(-3, 3));
            if (det(m).is_zero()) continue;
            auto lin = [&](size_t i) {
                Poly p(aff);
                for (size_t j = 0; j < 3; ++j) p += Poly::symbol(aff, j + 1).scaled(m[i][j]);
                return p;
            };
            Poly f = lin(0) * lin(0) + lin(1) * lin(1) + lin(2).pow(k + 1);
            auto res = classify_Ak(f, chart, {0, 0, 0}, 6);
            if (res.kind == AkClass::Ak) {
                if (res.k != k) {
                    log << "classify_Ak normal form mismatch";
                    return false;
                }
                ++done;
            } else {
                auto tc = tangent_cone(f, chart, {0, 0, 0});
                if (tc.quadratic_rank && *tc.quadratic_rank >= 2) {
                    log << "classify_Ak refused a rank-2 normal form";
                    return false;
                }
            }
        }
    }
    log << "6 property families x >=100 instances x 3 seeds";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "strict transforms saturate to the Table-1 divisors", criterion1},
        {2, "composition identities (chi factorization, involution, 5a->5b)", criterion2},
        {3, "volume preservation of all bundled links", criterion3},
        {4, "Theorem B lattice classification over the bundle table", criterion4},
        {5, "Theorem C integer-point enumerations", criterion5},
        {6, "Riemann-Roch table on Cl(D_5^a)", criterion6},
        {7, "toric 2-ray games for the five bundled weight matrices", criterion7},
        {8, "singularity probes (tangent cones, A_k, Reid-Tai vs oracle)", criterion8},
        {9, "Pell identity, G_Q components, self-map family", criterion9},
        {10, "randomized property suites (>=100 instances per seed)", criterion10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        bool ok = false;
        try {
            ok = c.body(log);
        } catch (const std::exception& e) {
            log << "exception: " << e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title
                  << " -- " << log.str() << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
