#pragma once

#include "algebra/matq.hpp"
#include "algebra/ring.hpp"

#include <string>
#include <vector>

namespace cypair {

// Linear constraint coeffs . x + constant >= 0 (or == 0).
struct LinearConstraint {
    VecQ coeffs;
    Rational constant;
    bool equality = false;
};

struct Region {
    std::vector<std::string> vars;
    std::vector<LinearConstraint> constraints;

    // Parse "−5*b0 + b1 + 6" style expressions as >= 0 / == 0 constraints.
    void add(const std::string& expr, bool equality);
    bool contains(const std::vector<Rational>& point) const;
};

// Exact per-coordinate bounds by Fourier-Motzkin elimination; nullopt when
// the region is empty. Throws when some coordinate is unbounded.
struct CoordinateBounds {
    std::vector<std::pair<Rational, Rational>> bounds;  // [lo, hi] per variable
};
std::optional<CoordinateBounds> region_bounds(const Region& region);

// All integer solutions, sorted lexicographically. Errors on unbounded
// regions; empty regions yield an empty list.
std::vector<std::vector<long>> integer_points(const Region& region);

}  // namespace cypair
