#include "birmap/pell.hpp"

namespace cypair {

RationalMapSpec pell_selfmap(const ToricAmbient& p3, const Poly& A, const Poly& B, const Poly& C,
                             const Poly& F, const Poly& G, int variant) {
    const RingPtr& ring = p3.ring();
    if (ring->num_vars() != 4 || ring->rank() != 1)
        throw math_error("pell_selfmap lives on P^3");
    auto x3 = Poly::symbol(ring, 3);

    auto check_xyz_form = [&](const Poly& p, long deg, const std::string& name) {
        if (p.is_zero()) return;
        if (p.degree_in(3) != 0)
            throw math_error("pell_selfmap: " + name + " must not involve x3");
        auto d = p.multidegree_opt();
        if (!d || (*d)[0] != deg)
            throw math_error("pell_selfmap: " + name + " must be homogeneous of degree " +
                             std::to_string(deg));
    };
    check_xyz_form(A, 2, "A");
    check_xyz_form(B, 3, "B");
    check_xyz_form(C, 4, "C");
    if (A.is_zero() || B.is_zero() || C.is_zero())
        throw math_error("pell_selfmap: A, B, C must be nonzero");
    long degF = F.is_zero() ? -1 : F.multidegree_checked()[0];
    long degG = G.is_zero() ? -1 : G.multidegree_checked()[0];
    if (F.is_zero()) {
        if (degG != 0) throw math_error("pell_selfmap: F = 0 requires deg(G) = 0");
    } else {
        check_xyz_form(F, degF, "F");
        check_xyz_form(G, degG, "G");
        if (G.is_zero() || degG != degF + 1)
            throw math_error("pell_selfmap: need deg(G) = deg(F) + 1");
    }

    Poly scale = A * (F * x3 + G);
    Poly last(ring);
    if (variant == 1) {
        last = (A * G - B * F) * x3 - C * F;
    } else if (variant == 2) {
        last = -(A * G) * x3 + C * F - B * G;
    } else {
        throw math_error("pell_selfmap: variant must be 1 or 2");
    }

    std::vector<RatFunc> comps;
    for (size_t i = 0; i < 3; ++i) comps.emplace_back(scale * Poly::symbol(ring, i));
    comps.emplace_back(last);
    return RationalMapSpec(p3, p3, std::move(comps));
}

GQComponent gq_membership(const RatFunc& A, const RatFunc& B, const RatFunc& C,
                          const RatFunc& alpha, const RatFunc& beta, const RatFunc& gamma,
                          const RatFunc& delta) {
    if (A.is_zero()) throw math_error("gq_membership: leading coefficient A must be nonzero");
    RatFunc det = alpha * delta - beta * gamma;
    if (det.is_zero()) throw math_error("gq_membership: degenerate matrix");

    bool comp1 = (alpha == -(B / A) * gamma + delta) && (beta == -(C / A) * gamma);
    bool comp2 = (alpha == -delta) && (beta == (C / A) * gamma - (B / A) * delta);
    if (comp1) return GQComponent::Component1;
    if (comp2) return GQComponent::Component2;
    return GQComponent::NotMember;
}

bool gq_member_oracle(const RatFunc& A, const RatFunc& B, const RatFunc& C, const RatFunc& alpha,
                      const RatFunc& beta, const RatFunc& gamma, const RatFunc& delta) {
    // Q(phi(u,v)) has coefficients
    //   u^2 : alpha^2 A + alpha gamma B + gamma^2 C
    //   uv  : 2 alpha beta A + alpha delta B + beta gamma B + 2 gamma delta C
    //   v^2 : beta^2 A + beta delta B + delta^2 C
    // membership iff (A,B,C) and the transformed triple have rank <= 1.
    RatFunc qa = alpha * alpha * A + alpha * gamma * B + gamma * gamma * C;
    RatFunc qb = RatFunc::constant(A.ring(), 2) * alpha * beta * A + alpha * delta * B +
                 beta * gamma * B + RatFunc::constant(A.ring(), 2) * gamma * delta * C;
    RatFunc qc = beta * beta * A + beta * delta * B + delta * delta * C;
    RatFunc m1 = A * qb - B * qa;
    RatFunc m2 = A * qc - C * qa;
    RatFunc m3 = B * qc - C * qb;
    return m1.is_zero() && m2.is_zero() && m3.is_zero();
}

std::string to_string(GQComponent c) {
    switch (c) {
        case GQComponent::Component1: return "component1";
        case GQComponent::Component2: return "component2";
        case GQComponent::NotMember: return "not_member";
    }
    return "?";
}

}  // namespace cypair
