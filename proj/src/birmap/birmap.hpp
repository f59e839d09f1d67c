#pragma once

#include "toric/toric.hpp"

namespace cypair {

// A Calabi-Yau pair: toric ambient, optional hypersurface constraints cutting
// X, and the divisor equation of D on X. The anticanonical condition
// deg(divisor) + sum deg(constraints) = sum of weight columns is enforced.
struct CYPair {
    ToricAmbient ambient;
    std::vector<Poly> constraints;
    Poly divisor;
    std::string label;

    CYPair(ToricAmbient amb, std::vector<Poly> cons, Poly div, std::string lbl);
};

// A rational map between toric ambients in Cox coordinates: one component
// per target variable. Stored two ways:
//  - cleared: denominators cleared, overall gcd and rational content removed
//    (the canonical projective representative);
//  - graded components f_w with multidegree(f_w) = M * col(w) exactly, used
//    for pulling divisors back.
class RationalMapSpec {
public:
    RationalMapSpec(ToricAmbient source, ToricAmbient target, std::vector<RatFunc> components);

    const ToricAmbient& source() const { return source_; }
    const ToricAmbient& target() const { return target_; }
    const std::vector<Poly>& cleared_components() const { return cleared_; }
    const std::vector<RatFunc>& graded_components() const { return graded_; }
    const std::vector<std::vector<long>>& grading_matrix() const { return grading_matrix_; }
    bool cleared_is_graded() const { return cleared_is_graded_; }

    // Substitute the graded components into a homogeneous polynomial on the
    // target. Falls back to the cleared polynomial tuple when that tuple is
    // itself graded (then the result is a Poly with trivial denominator).
    RatFunc pullback(const Poly& divisor_on_target) const;

    bool is_identity() const;

    RationalMapSpec specialized(const std::map<std::string, Poly>& atom_values) const;

private:
    ToricAmbient source_, target_;
    std::vector<Poly> cleared_;
    std::vector<RatFunc> graded_;
    std::vector<std::vector<long>> grading_matrix_;
    bool cleared_is_graded_ = false;
};

// g after f (f first); target of f must match source of g.
RationalMapSpec map_compose(const RationalMapSpec& f, const RationalMapSpec& g);

// Compare two maps with the same source and target by dehomogenizing both on
// a target chart and comparing the chart coordinate tuples exactly.
bool map_equal(const RationalMapSpec& f, const RationalMapSpec& g, const Chart& target_chart);

struct StrictTransform {
    Poly transform;
    // factors divided out, with multiplicities; factors coming from the
    // denominator of the pullback are included with from_denominator = true
    struct Removed {
        Poly factor;
        int multiplicity;
        bool from_denominator;
    };
    std::vector<Removed> removed;
    RatFunc raw_pullback;
};

// Pull `divisor` (on the target) back through `map`, clear denominators, and
// divide out the declared exceptional polynomials and the source coordinate
// variables to maximal multiplicity.
StrictTransform strict_transform(const Poly& divisor, const RationalMapSpec& map,
                                 const std::vector<Poly>& exceptional);

}  // namespace cypair
