#pragma once

#include "birmap/birmap.hpp"
#include "test_util.hpp"

#include <map>
#include <string>

namespace cypair::fixtures {

// The Table-1 cast: ambients, pairs and Sarkisov links between them.
struct Table1 {
    RingPtr p3, f1, f2, p1112, p11122, p11112;
    std::map<std::string, ToricAmbient> ambients;
    std::map<std::string, CYPair> pairs;
    std::map<std::string, RationalMapSpec> maps;
    std::map<std::string, std::vector<Poly>> exceptional;  // per map, source-ring polys

    const ToricAmbient& amb(const std::string& n) const { return ambients.at(n); }
    const CYPair& pair(const std::string& n) const { return pairs.at(n); }
    const RationalMapSpec& map(const std::string& n) const { return maps.at(n); }
};

inline std::vector<AtomSpec> atoms_bcd(const std::vector<long>& col_scale) {
    // B_3, C_4 with multidegree = deg * (column of x0)
    auto scaled = [&](long d) {
        std::vector<long> m;
        for (long c : col_scale) m.push_back(d * c);
        return m;
    };
    return {{"B", {"x0", "x1", "x2"}, scaled(3), 0}, {"C", {"x0", "x1", "x2"}, scaled(4), 0}};
}

inline Table1 make_table1() {
    Table1 t;
    std::vector<AtomSpec> bc1 = atoms_bcd({1});
    std::vector<AtomSpec> bc2 = atoms_bcd({1, 0});

    t.p3 = make_ring({"x0", "x1", "x2", "x3"}, {{1, 1, 1, 1}}, bc1);
    t.f1 = make_ring({"x0", "x1", "x2", "x3", "x"}, {{1, 1, 1, 0, -1}, {0, 0, 0, 1, 1}}, bc2);
    t.f2 = make_ring({"x0", "x1", "x2", "x3", "x"}, {{1, 1, 1, 0, -2}, {0, 0, 0, 1, 1}}, bc2);

    auto bcLQ = bc1;
    bcLQ.push_back({"L", {"x0", "x1", "x2"}, {1}, 0});
    bcLQ.push_back({"Q", {"x0", "x1", "x2"}, {2}, 0});
    t.p1112 = make_ring({"x0", "x1", "x2", "y"}, {{1, 1, 1, 2}}, bcLQ);

    auto bcL = bc1;
    bcL.push_back({"L", {"x0", "x1", "x2"}, {1}, 0});
    t.p11122 = make_ring({"x0", "x1", "x2", "y0", "y1"}, {{1, 1, 1, 2, 2}}, bcL);

    auto bcQ = bc1;
    bcQ.push_back({"Q", {"x0", "x1", "x2"}, {2}, 0});
    t.p11112 = make_ring({"x0", "x1", "x2", "x3", "y"}, {{1, 1, 1, 1, 2}}, bcQ);

    t.ambients.emplace("P3", ToricAmbient::standard(t.p3, "P3"));
    t.ambients.emplace("F1", ToricAmbient::standard(t.f1, "F1"));
    t.ambients.emplace("F2", ToricAmbient::standard(t.f2, "F2"));
    t.ambients.emplace("P1112", ToricAmbient::standard(t.p1112, "P(1,1,1,2)"));
    t.ambients.emplace("P11122", ToricAmbient::standard(t.p11122, "P(1,1,1,2,2)"));
    t.ambients.emplace("P11112", ToricAmbient::standard(t.p11112, "P(1,1,1,1,2)"));

    auto P = [&](const RingPtr& r, const std::string& s) { return poly_parse(s, r); };

    // pairs (Table 1 rows)
    t.pairs.emplace("obj1", CYPair(t.amb("P3"), {}, P(t.p3, "x0*x1*x3^2 + B*x3 + C"), "obj1"));
    t.pairs.emplace("obj2",
                    CYPair(t.amb("F1"), {}, P(t.f1, "x0*x1*x3^2 + B*x3*x + C*x^2"), "obj2"));
    t.pairs.emplace("obj2a",
                    CYPair(t.amb("F2"), {}, P(t.f2, "x0*x3^2 + B*x3*x + x1*C*x^2"), "obj2a"));
    t.pairs.emplace("obj2b",
                    CYPair(t.amb("F2"), {}, P(t.f2, "x1*x3^2 + B*x3*x + x0*C*x^2"), "obj2b"));
    t.pairs.emplace("obj3a", CYPair(t.amb("P1112"), {}, P(t.p1112, "x0*y^2 + B*y + x1*C"), "obj3a"));
    t.pairs.emplace("obj3b", CYPair(t.amb("P1112"), {}, P(t.p1112, "x1*y^2 + B*y + x0*C"), "obj3b"));
    t.pairs.emplace("obj4", CYPair(t.amb("P11122"),
                                   {P(t.p11122, "y0*y1 + C - L*(x0*y1 - x1*y0 - B)")},
                                   P(t.p11122, "x0*y1 - x1*y0 - B"), "obj4"));
    t.pairs.emplace("obj5a",
                    CYPair(t.amb("P11112"),
                           {P(t.p11112, "y*(y+Q) - C + x3*((x0+x1)*y + x1*Q + B)")},
                           P(t.p11112, "y + x1*x3"), "obj5a"));
    t.pairs.emplace("obj5b",
                    CYPair(t.amb("P11112"),
                           {P(t.p11112, "y*(y-Q) - C + x3*((x0+x1)*y - x0*Q + B)")},
                           P(t.p11112, "y + x0*x3"), "obj5b"));

    auto mk_map = [&](const std::string& name, const std::string& src, const std::string& tgt,
                      const std::vector<std::string>& comps,
                      const std::vector<std::string>& exc = {}) {
        std::vector<RatFunc> c;
        for (const auto& s : comps) c.push_back(ratfunc_parse(s, t.amb(src).ring()));
        t.maps.emplace(name, RationalMapSpec(t.amb(src), t.amb(tgt), std::move(c)));
        std::vector<Poly> e;
        for (const auto& s : exc) e.push_back(poly_parse(s, t.amb(src).ring()));
        t.exceptional.emplace(name, std::move(e));
    };

    mk_map("sigma", "F1", "P3", {"x0", "x1", "x2", "x3/x"});
    mk_map("nu_a", "F2", "F1", {"x0", "x1", "x2", "x3", "x*x1"});
    mk_map("nu_b", "F2", "F1", {"x0", "x1", "x2", "x3", "x*x0"});
    mk_map("eps_a", "P3", "P1112", {"x0", "x1", "x2", "x3*x1"});
    mk_map("eps_b", "P3", "P1112", {"x0", "x1", "x2", "x3*x0"});
    mk_map("chi_a", "F2", "P1112", {"x0", "x1", "x2", "x3/x"});
    mk_map("chi_b", "F2", "P1112", {"x0", "x1", "x2", "x3/x"});

    // phi_b : obj3b -> obj4, blowing up {y - x0 L = F = 0}
    mk_map("phi_b", "P1112", "P11122",
           {"x0", "x1", "x2", "y",
            "-x1*L - (x0*x1*L^2 + B*L + C)/(y - x0*L)"},
           {"y - x0*L"});
    mk_map("phi_b_inv", "P11122", "P1112", {"x0", "x1", "x2", "y0"}, {"y0 - x0*L"});

    // phi_a : obj3a -> obj4 (the x0 <-> x1 symmetric construction, composed
    // with (y0, y1) -> (-y1, -y0) to land on the Table-1 object 4)
    mk_map("phi_a", "P1112", "P11122",
           {"x0", "x1", "x2",
            "x0*L + (x0*x1*L^2 + B*L + C)/(y - x1*L)", "-y"},
           {"y - x1*L"});
    mk_map("phi_a_inv", "P11122", "P1112", {"x0", "x1", "x2", "-y1"}, {"y1 + x1*L"});

    // psi_a : obj3a -> obj5a, blowing up {F3 = G4 = 0}
    mk_map("psi_a", "P1112", "P11112",
           {"x0", "x1", "x2",
            "-(y*(y+Q) - C)/(x0*y + B + x1*(y+Q))", "y"},
           {"x0*y + B + x1*(y+Q)"});
    mk_map("psi_a_inv", "P11112", "P1112", {"x0", "x1", "x2", "y"},
           {"x0*y + B + x1*(y+Q)"});

    // psi_b : obj3b -> obj5b (swap roles of x0, x1 and Q -> -Q)
    mk_map("psi_b", "P1112", "P11112",
           {"x0", "x1", "x2",
            "-(y*(y-Q) - C)/(x1*y + B + x0*(y-Q))", "y"},
           {"x1*y + B + x0*(y-Q)"});
    mk_map("psi_b_inv", "P11112", "P1112", {"x0", "x1", "x2", "y"},
           {"x1*y + B + x0*(y-Q)"});

    // the isomorphism between families 5a and 5b
    mk_map("iso5", "P11112", "P11112", {"x0", "x1", "x2", "x3", "-y - x3*(x0+x1)"});

    // identity self-maps used by trivial checks
    mk_map("id_p3", "P3", "P3", {"x0", "x1", "x2", "x3"});

    return t;
}

// Deterministic concrete forms for the generic atoms, shared across rings:
// the same coefficient pattern is materialized in each ring's x0, x1, x2.
inline std::map<std::string, Poly> atom_values(const RingPtr& ring, uint64_t seed) {
    std::map<std::string, Poly> out;
    for (const auto& atom : ring->atoms()) {
        // one generator per atom name so every ring sees identical forms
        uint64_t h = seed * 1000003ull;
        for (char ch : atom.name) h = h * 31 + static_cast<unsigned char>(ch);
        testutil::Rng rng(h);
        std::vector<size_t> args;
        for (int a : atom.args) args.push_back(static_cast<size_t>(a));
        out.emplace(atom.name, testutil::random_form(rng, ring, args, atom.form_degree));
    }
    return out;
}

inline Poly specialize(const Poly& p, const std::map<std::string, Poly>& vals) {
    std::map<size_t, Poly> by_index;
    for (const auto& [name, v] : vals) {
        auto idx = p.ring()->find_symbol(name);
        if (idx && p.ring()->is_atom_index(*idx)) by_index.emplace(*idx, v);
    }
    return p.specialize_atoms(by_index);
}

inline CYPair specialize(const CYPair& pair, uint64_t seed) {
    auto vals = atom_values(pair.ambient.ring(), seed);
    std::vector<Poly> cons;
    for (const auto& c : pair.constraints) cons.push_back(specialize(c, vals));
    return CYPair(pair.ambient, std::move(cons), specialize(pair.divisor, vals), pair.label);
}

inline RationalMapSpec specialize(const RationalMapSpec& m, uint64_t seed) {
    return m.specialized(atom_values(m.source().ring(), seed));
}

}  // namespace cypair::fixtures
