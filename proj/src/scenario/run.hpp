#pragma once

#include "scenario/model.hpp"

#include <cstdint>

namespace cypair {

enum class CheckStatus { Pass, Fail, Indeterminate };

struct CheckResult {
    std::string id;
    std::string op;
    std::string provenance;
    CheckStatus status = CheckStatus::Indeterminate;
    std::string witness;
    long micros = 0;
};

struct SuiteReport {
    std::string name;
    uint64_t seed = 0;
    std::vector<CheckResult> results;

    bool all_passed() const {
        for (const auto& r : results)
            if (r.status != CheckStatus::Pass) return false;
        return true;
    }
    size_t count(CheckStatus st) const {
        size_t n = 0;
        for (const auto& r : results)
            if (r.status == st) ++n;
        return n;
    }
};

// Deterministic per (scenario, seed); checks may be filtered by id.
SuiteReport run_scenario(const Scenario& s, uint64_t seed,
                         const std::vector<std::string>& check_filter = {});

// Seeded concrete forms for the generic atoms of a ring; the same atom name
// yields the same coefficient pattern in every ring.
std::map<std::string, Poly> seeded_atom_values(const RingPtr& ring, uint64_t seed);

Poly specialize_named(const Poly& p, const std::map<std::string, Poly>& vals);
CYPair specialize_pair(const CYPair& pair, uint64_t seed);
RationalMapSpec specialize_map(const RationalMapSpec& m, uint64_t seed);

std::string to_string(CheckStatus st);

}  // namespace cypair
