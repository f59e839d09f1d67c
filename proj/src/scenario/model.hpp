#pragma once

#include "birmap/birmap.hpp"
#include "lattice/lattice.hpp"
#include "lattice/region.hpp"

#include <map>
#include <string>
#include <vector>

namespace cypair {

// One typed check record: an operation name, raw key=value arguments, an
// expectation, and a provenance tag.
struct CheckSpec {
    std::string id;
    std::string op;
    std::string provenance;  // paper | trivial | derived
    std::map<std::string, std::vector<std::string>> args;

    std::string arg(const std::string& key) const;
    std::string arg_or(const std::string& key, const std::string& fallback) const;
    bool has(const std::string& key) const { return args.count(key) > 0; }
};

struct Scenario {
    std::string name;

    std::vector<std::string> ring_order;
    std::map<std::string, RingPtr> rings;
    std::vector<std::string> ambient_order;
    std::map<std::string, ToricAmbient> ambients;
    std::vector<std::string> pair_order;
    std::map<std::string, CYPair> pairs;
    std::vector<std::string> map_order;
    std::map<std::string, RationalMapSpec> maps;
    std::map<std::string, std::vector<Poly>> map_exceptional;
    std::map<std::string, std::string> map_inverse;
    std::vector<std::string> region_order;
    std::map<std::string, Region> regions;
    std::vector<std::string> lattice_order;
    std::map<std::string, LatticePtr> lattices;
    std::vector<CheckSpec> checks;

    const RingPtr& ring(const std::string& n) const;
    const ToricAmbient& ambient(const std::string& n) const;
    const CYPair& pair(const std::string& n) const;
    const RationalMapSpec& map(const std::string& n) const;
    const Region& region(const std::string& n) const;
    const LatticePtr& lattice(const std::string& n) const;
};

// Render back into the scenario file format; parse(serialize(s)) yields an
// identical model.
std::string serialize(const Scenario& s);

}  // namespace cypair
