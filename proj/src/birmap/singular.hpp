#pragma once

#include "algebra/series.hpp"
#include "toric/toric.hpp"

#include <array>

namespace cypair {

struct TangentCone {
    long multiplicity = 0;
    Poly lowest_form;                   // over the chart ring
    std::optional<size_t> quadratic_rank;  // present when multiplicity == 2
};

// Translate to the chart point and return the lowest-degree homogeneous part.
TangentCone tangent_cone(const Poly& p, const Chart& chart, const std::vector<Rational>& point);

enum class AkClass { Ak, NotADuValAk, Undetermined };

struct AkResult {
    AkClass kind = AkClass::Undetermined;
    long k = 0;  // valid when kind == Ak
};

// Du Val A_k detection by iterated square completion on the truncated series
// (order max_k + 2). Requires a 3-coordinate chart and multiplicity 2.
AkResult classify_Ak(const Poly& p, const Chart& chart, const std::vector<Rational>& point,
                     long max_k);

enum class ReidTai { Terminal, CanonicalNotTerminal, WorseThanCanonical };

// Reid-Tai ages of the cyclic quotient 1/r(w1,w2,w3).
ReidTai reid_tai(long r, const std::array<long, 3>& weights);
ReidTai reid_tai(const QuotientChartData& q);

std::string to_string(ReidTai rt);
std::string to_string(const AkResult& a);

}  // namespace cypair
