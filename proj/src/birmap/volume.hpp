#pragma once

#include "birmap/birmap.hpp"

namespace cypair {

enum class VPStatus { Preserved, Violated, Indeterminate };

// Certificate for phi^*(omega_tgt) = lambda * omega_src, computed on a fixed
// pair of unimodular torus charts. The chart volume forms carry an
// orientation sign so that lambda does not depend on the chart pair.
struct VPReport {
    VPStatus status = VPStatus::Indeterminate;
    std::optional<Rational> lambda;
    std::string src_chart, tgt_chart;
    RatFunc residual;  // zero iff preserved
};

VPReport volume_preserving(const RationalMapSpec& map, const CYPair& src, const CYPair& tgt,
                           const Chart& src_chart, const Chart& tgt_chart);

// The (t,c) criterion: f_* D_src = D_tgt and f^-1_* D_tgt = D_src, checked
// modulo the hypersurface constraints by pseudo-division in `elim_var` (a
// variable of the constrained ring in which the constraint is monic-izable).
// `bwd` is the declared inverse direction of `fwd`. Each direction divides
// out its declared exceptional polynomials: fwd_exceptional lives on the
// source ring, bwd_exceptional on the target ring.
bool restricts_birationally(const RationalMapSpec& fwd, const RationalMapSpec& bwd,
                            const CYPair& src, const CYPair& tgt, const std::string& elim_var,
                            const std::vector<Poly>& fwd_exceptional,
                            const std::vector<Poly>& bwd_exceptional);

// True iff the self-map fixes the divisor pointwise: the divisor divides
// f_i x_j - f_j x_i for every coordinate pair.
bool fixes_divisor_pointwise(const RationalMapSpec& map, const Poly& divisor);

}  // namespace cypair
