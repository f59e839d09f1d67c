#include "scenario/parse.hpp"

#include "algebra/parse.hpp"

#include <fstream>
#include <sstream>

namespace cypair {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::vector<long> longs(const std::string& s, size_t line) {
    std::vector<long> out;
    for (const auto& w : words(s)) {
        try {
            out.push_back(std::stol(w));
        } catch (...) {
            throw scenario_error("expected integer, got '" + w + "'", line);
        }
    }
    return out;
}

struct Section {
    std::string kind, name;
    size_t line;
    std::map<std::string, std::vector<std::string>> kv;
    std::vector<std::pair<std::string, std::string>> kv_ordered;

    std::string get(const std::string& key) const {
        auto it = kv.find(key);
        if (it == kv.end() || it->second.empty())
            throw scenario_error("[" + kind + " " + name + "] missing key '" + key + "'", line);
        return it->second.front();
    }
    std::string get_or(const std::string& key, const std::string& fallback) const {
        auto it = kv.find(key);
        if (it == kv.end() || it->second.empty()) return fallback;
        return it->second.front();
    }
    bool has(const std::string& key) const { return kv.count(key) > 0; }
};

}  // namespace

namespace {

Scenario scenario_build(const std::string& text, const std::string& name,
                        std::vector<std::string>* diagnostics);

}  // namespace

Scenario scenario_parse(const std::string& text, const std::string& name) {
    return scenario_build(text, name, nullptr);
}

namespace {

Scenario scenario_build(const std::string& text, const std::string& name,
                        std::vector<std::string>* diagnostics) {
    Scenario s;
    s.name = name;
    std::vector<Section> sections;
    {
        std::istringstream in(text);
        std::string raw;
        size_t lineno = 0;
        Section* cur = nullptr;
        while (std::getline(in, raw)) {
            ++lineno;
            std::string line = raw;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') throw scenario_error("unterminated section header", lineno);
                auto inner = words(line.substr(1, line.size() - 2));
                if (inner.size() != 2)
                    throw scenario_error("section header needs a kind and a name", lineno);
                sections.push_back(Section{inner[0], inner[1], lineno, {}, {}});
                cur = &sections.back();
                continue;
            }
            size_t eq = line.find('=');
            if (eq == std::string::npos || !cur)
                throw scenario_error("expected 'key = value' inside a section", lineno);
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            cur->kv[key].push_back(value);
            cur->kv_ordered.push_back({key, value});
        }
    }

    auto unique_name = [&](const std::map<std::string, int>& seen, const Section& sec) {
        if (seen.count(sec.name))
            throw scenario_error("duplicate " + sec.kind + " name '" + sec.name + "'", sec.line);
    };
    std::map<std::string, int> seen_ring, seen_amb, seen_pair, seen_map, seen_region, seen_lat,
        seen_check;

    for (const auto& sec : sections) {
        try {
            if (sec.kind == "ring") {
                unique_name(seen_ring, sec);
                seen_ring[sec.name] = 1;
                std::vector<std::string> vars = words(sec.get("vars"));
                std::vector<std::vector<long>> weights;
                if (sec.has("weights"))
                    for (const auto& row : split(sec.get("weights"), ';'))
                        weights.push_back(longs(row, sec.line));
                std::vector<AtomSpec> atoms;
                if (sec.has("atoms")) {
                    for (const auto& spec : words(sec.get("atoms"))) {
                        // NAME(arg,arg,...):d1,d2
                        size_t po = spec.find('('), pc = spec.find(')'), co = spec.find(':', pc);
                        if (po == std::string::npos || pc == std::string::npos ||
                            co == std::string::npos)
                            throw scenario_error("bad atom spec '" + spec + "'", sec.line);
                        AtomSpec a;
                        a.name = spec.substr(0, po);
                        for (const auto& arg : split(spec.substr(po + 1, pc - po - 1), ','))
                            a.args.push_back(arg);
                        for (const auto& d : split(spec.substr(co + 1), ','))
                            a.multidegree.push_back(std::stol(d));
                        atoms.push_back(std::move(a));
                    }
                }
                s.ring_order.push_back(sec.name);
                s.rings.emplace(sec.name, make_ring(vars, weights, atoms));
            } else if (sec.kind == "ambient") {
                unique_name(seen_amb, sec);
                seen_amb[sec.name] = 1;
                const RingPtr& ring = s.ring(sec.get("ring"));
                s.ambient_order.push_back(sec.name);
                if (sec.has("chamber")) {
                    std::vector<std::vector<long>> rays;
                    for (const auto& row : split(sec.get("chamber"), ';'))
                        rays.push_back(longs(row, sec.line));
                    s.ambients.emplace(sec.name,
                                       ToricAmbient::with_chamber_rays(ring, rays, sec.name));
                } else {
                    s.ambients.emplace(sec.name, ToricAmbient::standard(ring, sec.name));
                }
            } else if (sec.kind == "pair") {
                unique_name(seen_pair, sec);
                seen_pair[sec.name] = 1;
                const ToricAmbient& amb = s.ambient(sec.get("ambient"));
                std::vector<Poly> cons;
                if (sec.has("constraints"))
                    for (const auto& c : split(sec.get("constraints"), ';'))
                        cons.push_back(poly_parse(c, amb.ring()));
                Poly div = poly_parse(sec.get("divisor"), amb.ring());
                s.pair_order.push_back(sec.name);
                s.pairs.emplace(sec.name, CYPair(amb, std::move(cons), std::move(div), sec.name));
            } else if (sec.kind == "map") {
                unique_name(seen_map, sec);
                seen_map[sec.name] = 1;
                const ToricAmbient& src = s.ambient(sec.get("source"));
                const ToricAmbient& tgt = s.ambient(sec.get("target"));
                std::vector<RatFunc> comps;
                for (const auto& c : split(sec.get("components"), ';'))
                    comps.push_back(ratfunc_parse(c, src.ring()));
                s.map_order.push_back(sec.name);
                s.maps.emplace(sec.name, RationalMapSpec(src, tgt, std::move(comps)));
                std::vector<Poly> exc;
                if (sec.has("exceptional"))
                    for (const auto& e : split(sec.get("exceptional"), ';'))
                        exc.push_back(poly_parse(e, src.ring()));
                s.map_exceptional.emplace(sec.name, std::move(exc));
                if (sec.has("inverse")) s.map_inverse.emplace(sec.name, sec.get("inverse"));
            } else if (sec.kind == "region") {
                unique_name(seen_region, sec);
                seen_region[sec.name] = 1;
                Region r;
                r.vars = words(sec.get("vars"));
                for (const auto& [k, v] : sec.kv_ordered) {
                    if (k == "ineq") r.add(v, false);
                    else if (k == "eq") r.add(v, true);
                }
                s.region_order.push_back(sec.name);
                s.regions.emplace(sec.name, std::move(r));
            } else if (sec.kind == "lattice") {
                unique_name(seen_lat, sec);
                seen_lat[sec.name] = 1;
                std::vector<std::string> basis = words(sec.get("basis"));
                MatQ gram;
                for (const auto& row : split(sec.get("gram"), ';')) {
                    VecQ r;
                    for (const auto& w : words(row)) r.push_back(Rational::from_string(w));
                    gram.push_back(std::move(r));
                }
                s.lattice_order.push_back(sec.name);
                s.lattices.emplace(sec.name,
                                   std::make_shared<const GramLattice>(basis, std::move(gram)));
            } else if (sec.kind == "check") {
                unique_name(seen_check, sec);
                seen_check[sec.name] = 1;
                CheckSpec c;
                c.id = sec.name;
                c.op = sec.get("op");
                c.provenance = sec.get_or("provenance", "derived");
                if (c.provenance != "paper" && c.provenance != "trivial" &&
                    c.provenance != "derived")
                    throw scenario_error("bad provenance '" + c.provenance + "'", sec.line);
                for (const auto& [k, vs] : sec.kv) {
                    if (k == "op" || k == "provenance") continue;
                    c.args.emplace(k, vs);
                }
                s.checks.push_back(std::move(c));
            } else {
                throw scenario_error("unknown section kind '" + sec.kind + "'", sec.line);
            }
        } catch (const scenario_error& e) {
            if (!diagnostics) throw;
            diagnostics->push_back(e.what());
        } catch (const math_error& e) {
            std::string msg = std::string("[") + sec.kind + " " + sec.name + "] " + e.what() +
                              " (line " + std::to_string(sec.line) + ")";
            if (!diagnostics) throw scenario_error(msg, sec.line);
            diagnostics->push_back(msg);
        }
    }
    return s;
}

}  // namespace

std::vector<std::string> scenario_lint(const std::string& text) {
    std::vector<std::string> diags;
    Scenario s = scenario_build(text, "lint", &diags);

    // check-level validation without evaluating expectations
    for (const auto& check : s.checks) {
        auto complain = [&](const std::string& msg) {
            diags.push_back("[check " + check.id + "] " + msg);
        };
        try {
            for (const std::string key : {"pair", "src", "tgt", "divisor_pair", "expect_pair"})
                if (check.has(key)) s.pair(check.arg(key));
            for (const std::string key : {"left", "right", "map"}) {
                if (!check.has(key)) continue;
                // resolve compositions; catches source/target mismatches
                std::vector<std::string> parts;
                std::string cur;
                for (char ch : check.arg(key)) {
                    if (ch == '.') {
                        parts.push_back(cur);
                        cur.clear();
                    } else {
                        cur += ch;
                    }
                }
                parts.push_back(cur);
                for (auto& p : parts) {
                    p.erase(0, p.find_first_not_of(" \t"));
                    p.erase(p.find_last_not_of(" \t") + 1);
                }
                RationalMapSpec acc = s.map(parts.back());
                for (size_t i = parts.size(); i-- > 1;) acc = map_compose(acc, s.map(parts[i - 1]));
                // chart validity on the composed target
                for (const std::string ck : {"chart"}) {
                    if (!check.has(ck)) continue;
                    std::set<size_t> unit;
                    for (const auto& w : split(check.arg(ck), ',')) {
                        auto idx = acc.target().ring()->find_var(w);
                        if (!idx) throw math_error("chart names unknown variable " + w);
                        unit.insert(*idx);
                    }
                    Chart chart(acc.target(), unit);
                }
            }
            if (check.has("src_chart") && check.has("src")) {
                std::set<size_t> unit;
                const auto& amb = s.pair(check.arg("src")).ambient;
                for (const auto& w : split(check.arg("src_chart"), ',')) {
                    auto idx = amb.ring()->find_var(w);
                    if (!idx) throw math_error("chart names unknown variable " + w);
                    unit.insert(*idx);
                }
                Chart chart(amb, unit);
            }
            for (const std::string key : {"ring", "ambient"}) {
                if (!check.has(key)) continue;
                if (key == "ring") s.ring(check.arg(key));
                else s.ambient(check.arg(key));
            }
            for (const std::string key : {"lattice"})
                if (check.has(key)) s.lattice(check.arg(key));
            for (const std::string key : {"region"})
                if (check.has(key)) s.region(check.arg(key));
        } catch (const math_error& e) {
            complain(e.what());
        }
    }
    return diags;
}

Scenario scenario_parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw math_error("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string base = path;
    size_t slash = base.find_last_of('/');
    if (slash != std::string::npos) base = base.substr(slash + 1);
    return scenario_parse(buf.str(), base);
}

}  // namespace cypair
