#include "scenario/model.hpp"

#include "algebra/parse.hpp"

#include <sstream>

namespace cypair {

std::string CheckSpec::arg(const std::string& key) const {
    auto it = args.find(key);
    if (it == args.end() || it->second.empty())
        throw math_error("check " + id + ": missing argument '" + key + "'");
    return it->second.front();
}

std::string CheckSpec::arg_or(const std::string& key, const std::string& fallback) const {
    auto it = args.find(key);
    if (it == args.end() || it->second.empty()) return fallback;
    return it->second.front();
}

const RingPtr& Scenario::ring(const std::string& n) const {
    auto it = rings.find(n);
    if (it == rings.end()) throw math_error("unknown ring '" + n + "'");
    return it->second;
}

const ToricAmbient& Scenario::ambient(const std::string& n) const {
    auto it = ambients.find(n);
    if (it == ambients.end()) throw math_error("unknown ambient '" + n + "'");
    return it->second;
}

const CYPair& Scenario::pair(const std::string& n) const {
    auto it = pairs.find(n);
    if (it == pairs.end()) throw math_error("unknown pair '" + n + "'");
    return it->second;
}

const RationalMapSpec& Scenario::map(const std::string& n) const {
    auto it = maps.find(n);
    if (it == maps.end()) throw math_error("unknown map '" + n + "'");
    return it->second;
}

const Region& Scenario::region(const std::string& n) const {
    auto it = regions.find(n);
    if (it == regions.end()) throw math_error("unknown region '" + n + "'");
    return it->second;
}

const LatticePtr& Scenario::lattice(const std::string& n) const {
    auto it = lattices.find(n);
    if (it == lattices.end()) throw math_error("unknown lattice '" + n + "'");
    return it->second;
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string weights_row(const std::vector<long>& row) {
    std::string out;
    for (size_t i = 0; i < row.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(row[i]);
    }
    return out;
}

}  // namespace

std::string serialize(const Scenario& s) {
    std::ostringstream out;
    for (const auto& rn : s.ring_order) {
        const RingPtr& r = s.rings.at(rn);
        out << "[ring " << rn << "]\n";
        out << "vars = " << join(r->vars(), " ") << "\n";
        if (r->rank() > 0) {
            std::vector<std::string> rows;
            for (const auto& row : r->weights()) rows.push_back(weights_row(row));
            out << "weights = " << join(rows, " ; ") << "\n";
        }
        if (!r->atoms().empty()) {
            std::vector<std::string> specs;
            for (const auto& a : r->atoms()) {
                std::vector<std::string> argnames;
                for (int idx : a.args) argnames.push_back(r->vars()[idx]);
                std::string deg;
                for (size_t k = 0; k < a.multidegree.size(); ++k) {
                    if (k) deg += ",";
                    deg += std::to_string(a.multidegree[k]);
                }
                specs.push_back(a.name + "(" + join(argnames, ",") + "):" + deg);
            }
            out << "atoms = " << join(specs, " ") << "\n";
        }
        out << "\n";
    }
    for (const auto& an : s.ambient_order) {
        const ToricAmbient& a = s.ambients.at(an);
        out << "[ambient " << an << "]\n";
        std::string ring_name;
        for (const auto& [rn, r] : s.rings)
            if (same_ring(r, a.ring())) ring_name = rn;
        out << "ring = " << ring_name << "\n";
        std::vector<std::string> rays;
        for (const auto& ray : a.chamber().rays) rays.push_back(weights_row(ray));
        out << "chamber = " << join(rays, " ; ") << "\n\n";
    }
    for (const auto& pn : s.pair_order) {
        const CYPair& p = s.pairs.at(pn);
        out << "[pair " << pn << "]\n";
        std::string amb_name;
        for (const auto& an : s.ambient_order)
            if (same_ring(s.ambients.at(an).ring(), p.ambient.ring()) &&
                s.ambients.at(an).chamber().same_rays(p.ambient.chamber()))
                amb_name = an;
        out << "ambient = " << amb_name << "\n";
        if (!p.constraints.empty()) {
            std::vector<std::string> cs;
            for (const auto& c : p.constraints) cs.push_back(to_string(c));
            out << "constraints = " << join(cs, " ; ") << "\n";
        }
        out << "divisor = " << to_string(p.divisor) << "\n\n";
    }
    for (const auto& mn : s.map_order) {
        const RationalMapSpec& m = s.maps.at(mn);
        out << "[map " << mn << "]\n";
        std::string src, tgt;
        for (const auto& an : s.ambient_order) {
            const auto& amb = s.ambients.at(an);
            if (same_ring(amb.ring(), m.source().ring()) &&
                amb.chamber().same_rays(m.source().chamber()))
                src = an;
            if (same_ring(amb.ring(), m.target().ring()) &&
                amb.chamber().same_rays(m.target().chamber()))
                tgt = an;
        }
        out << "source = " << src << "\n";
        out << "target = " << tgt << "\n";
        std::vector<std::string> comps;
        for (const auto& f : m.graded_components()) comps.push_back(to_string(f));
        out << "components = " << join(comps, " ; ") << "\n";
        auto exc = s.map_exceptional.find(mn);
        if (exc != s.map_exceptional.end() && !exc->second.empty()) {
            std::vector<std::string> es;
            for (const auto& e : exc->second) es.push_back(to_string(e));
            out << "exceptional = " << join(es, " ; ") << "\n";
        }
        auto inv = s.map_inverse.find(mn);
        if (inv != s.map_inverse.end()) out << "inverse = " << inv->second << "\n";
        out << "\n";
    }
    for (const auto& rn : s.region_order) {
        const Region& r = s.regions.at(rn);
        out << "[region " << rn << "]\n";
        out << "vars = " << join(r.vars, " ") << "\n";
        RingPtr rring = make_ring(r.vars, {});
        for (const auto& con : r.constraints) {
            Poly p(rring);
            for (size_t i = 0; i < r.vars.size(); ++i)
                p += Poly::symbol(rring, i).scaled(con.coeffs[i]);
            p += Poly::constant(rring, con.constant);
            out << (con.equality ? "eq = " : "ineq = ") << to_string(p) << "\n";
        }
        out << "\n";
    }
    for (const auto& ln : s.lattice_order) {
        const LatticePtr& l = s.lattices.at(ln);
        out << "[lattice " << ln << "]\n";
        out << "basis = " << join(l->basis(), " ") << "\n";
        std::vector<std::string> rows;
        for (const auto& row : l->gram()) {
            std::string rr;
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) rr += " ";
                rr += row[i].str();
            }
            rows.push_back(rr);
        }
        out << "gram = " << join(rows, " ; ") << "\n\n";
    }
    for (const auto& c : s.checks) {
        out << "[check " << c.id << "]\n";
        out << "op = " << c.op << "\n";
        for (const auto& [k, vs] : c.args)
            for (const auto& v : vs) out << k << " = " << v << "\n";
        out << "provenance = " << c.provenance << "\n\n";
    }
    return out.str();
}

}  // namespace cypair
