#pragma once

#include "birmap/birmap.hpp"

namespace cypair {

// The two explicit families of birational self-maps of P^3 fixing the
// A_1-quartic x3^2 A + x3 B + C. Variant 1 lies in the Pell kernel (fixes the
// quartic pointwise); variant 2 composes with the covering involution.
//   variant 1: (A(F x3+G) x0 : A(F x3+G) x1 : A(F x3+G) x2 : (AG-BF) x3 - CF)
//   variant 2: (A(F x3+G) x0 : A(F x3+G) x1 : A(F x3+G) x2 : -AG x3 + CF - BG)
RationalMapSpec pell_selfmap(const ToricAmbient& p3, const Poly& A, const Poly& B, const Poly& C,
                             const Poly& F, const Poly& G, int variant);

enum class GQComponent { Component1, Component2, NotMember };

// Membership of a projective transformation (alpha beta; gamma delta) in the
// stabilizer of the quadratic form A u^2 + B uv + C v^2 up to scalar, decided
// by the two component parametrizations; cross-checked against the rank-one
// condition on the transformed form's coefficients.
GQComponent gq_membership(const RatFunc& A, const RatFunc& B, const RatFunc& C,
                          const RatFunc& alpha, const RatFunc& beta, const RatFunc& gamma,
                          const RatFunc& delta);

// Direct expansion oracle: does Q(phi(u,v)) equal lambda * Q(u,v)?
bool gq_member_oracle(const RatFunc& A, const RatFunc& B, const RatFunc& C, const RatFunc& alpha,
                      const RatFunc& beta, const RatFunc& gamma, const RatFunc& delta);

std::string to_string(GQComponent c);

}  // namespace cypair
