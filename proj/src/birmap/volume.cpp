#include "birmap/volume.hpp"

#include <functional>

namespace cypair {

namespace {

Poly det_poly(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 0) throw math_error("empty determinant");
    if (n == 1) return m[0][0];
    Poly acc(m[0][0].ring());
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * det_poly(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// det of the Jacobian of chart maps phi_j = n_j / d_j without intermediate
// rational-function normalization:
//   d/dx_i (n_j/d_j) = (n_j' d_j - n_j d_j') / d_j^2,
// so J = det(n_j' d_j - n_j d_j') / prod_j d_j^2.
RatFunc jacobian_det(const std::vector<RatFunc>& phi, size_t nvars) {
    std::vector<std::vector<Poly>> num(phi.size(), std::vector<Poly>(nvars));
    Poly den = Poly::constant(phi[0].ring(), 1);
    for (size_t j = 0; j < phi.size(); ++j) {
        const Poly& nj = phi[j].num();
        const Poly& dj = phi[j].den();
        for (size_t i = 0; i < nvars; ++i)
            num[j][i] = nj.derivative(i) * dj - nj * dj.derivative(i);
        den = den * dj * dj;
    }
    Poly d = det_poly(num);
    if (d.is_zero()) return RatFunc::zero(phi[0].ring());
    return RatFunc(d, den);
}

void require_atom_free(const Poly& p, const std::string& what) {
    if (p.has_atoms())
        throw math_error(what + " contains opaque atoms; specialize them before this check");
}

}  // namespace

VPReport volume_preserving(const RationalMapSpec& map, const CYPair& src, const CYPair& tgt,
                           const Chart& src_chart, const Chart& tgt_chart) {
    if (!src.constraints.empty() || !tgt.constraints.empty())
        throw math_error("volume_preserving handles toric-ambient pairs only; use "
                         "restricts_birationally for constrained pairs");
    if (!same_ring(src_chart.ambient_ring(), src.ambient.ring()) ||
        !same_ring(src.ambient.ring(), map.source().ring()))
        throw math_error("source chart/pair/map mismatch");
    if (!same_ring(tgt_chart.ambient_ring(), tgt.ambient.ring()) ||
        !same_ring(tgt.ambient.ring(), map.target().ring()))
        throw math_error("target chart/pair/map mismatch");
    require_atom_free(src.divisor, "source divisor");
    require_atom_free(tgt.divisor, "target divisor");
    for (const auto& f : map.graded_components()) {
        require_atom_free(f.num(), "map component");
        require_atom_free(f.den(), "map component");
    }

    VPReport rep;
    rep.src_chart = src_chart.describe();
    rep.tgt_chart = tgt_chart.describe();

    Poly f_src = src_chart.dehomogenize(src.divisor);
    if (f_src.is_zero()) throw math_error("source divisor vanishes on the chart");

    // chart expression of the map
    const RingPtr& amb = map.source().ring();
    std::vector<RatFunc> phi;
    for (size_t j = 0; j < tgt_chart.coords().size(); ++j) {
        const auto& exps = tgt_chart.coordinate_exponents(j);
        RatFunc val = RatFunc::constant(amb, 1);
        for (size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == 0) continue;
            const RatFunc& fv = map.graded_components()[v];
            if (fv.is_zero() && exps[v] < 0)
                throw math_error("map not defined on target chart: component " +
                                 map.target().ring()->vars()[v] + " is identically zero");
            val = val * fv.pow(exps[v]);
        }
        phi.push_back(src_chart.dehomogenize(val));
    }

    const size_t n = src_chart.coords().size();
    if (phi.size() != n) throw math_error("source and target have different dimension");
    RatFunc J = jacobian_det(phi, n);
    if (J.is_zero()) throw math_error("zero Jacobian: map is not dominant");

    Poly g_tgt = tgt_chart.dehomogenize(tgt.divisor);
    if (g_tgt.is_zero()) throw math_error("target divisor vanishes on the chart");
    std::map<size_t, RatFunc> bind;
    for (size_t j = 0; j < n; ++j) bind.emplace(j, phi[j]);
    RatFunc g_pulled = substitute(g_tgt, bind);
    if (g_pulled.is_zero())
        throw math_error("image of the map lies inside the target divisor");

    // lambda = f_src * J / (g_tgt o phi), assembled over a common denominator
    // so the preserved case is decided by one proportionality test
    Poly lam_num = f_src * J.num() * g_pulled.den();
    Poly lam_den = J.den() * g_pulled.num();
    int sign = src_chart.orientation_sign() * tgt_chart.orientation_sign();
    if (sign < 0) lam_num = -lam_num;

    if (auto c = proportional_scalar(lam_num, lam_den)) {
        if (c->is_zero()) throw math_error("degenerate volume ratio");
        rep.status = VPStatus::Preserved;
        rep.lambda = *c;
        rep.residual = RatFunc::zero(f_src.ring());
    } else {
        rep.status = VPStatus::Violated;
        rep.residual = RatFunc(lam_num, lam_den);
    }
    return rep;
}

namespace {

// Does `pulled` equal lambda * (product of exceptional factors) * divisor
// modulo the principal ideal (constraint), for some nonzero rational lambda
// and some degree-matched nonnegative factor multiplicities?
bool matches_divisor_mod(const RatFunc& pulled, const CYPair& pair,
                         const std::vector<Poly>& exceptional, const std::string& elim_var) {
    const RingPtr& ring = pair.ambient.ring();
    Poly n = pulled.num();
    Poly d = pulled.den();

    // the denominator must consist of exceptional/coordinate content
    std::vector<Poly> den_factors = exceptional;
    for (size_t v = 0; v < ring->num_vars(); ++v) den_factors.push_back(Poly::symbol(ring, v));
    for (const auto& f : den_factors) d = divide_out(d, f).first;
    if (!d.is_constant()) return false;

    if (pair.constraints.empty()) {
        for (const auto& f : den_factors) n = divide_out(n, f).first;
        return proportional_scalar(n, pair.divisor).has_value();
    }
    if (pair.constraints.size() != 1)
        throw math_error("restricts_birationally supports a single constraint");
    const Poly& X = pair.constraints[0];
    auto ev = ring->find_var(elim_var);
    if (!ev) throw math_error("no elimination variable named " + elim_var);
    if (X.degree_in(*ev) < 1)
        throw math_error("constraint does not involve the elimination variable");

    auto deg_n = n.multidegree_checked();
    auto deg_div = pair.divisor.multidegree_checked();
    std::vector<long> gap(deg_n.size());
    for (size_t k = 0; k < gap.size(); ++k) gap[k] = deg_n[k] - deg_div[k];

    auto congruent_up_to_scalar = [&](const Poly& cand) {
        long dn = n.degree_in(*ev), dc = cand.degree_in(*ev), dx = X.degree_in(*ev);
        long steps = std::max({dn - dx + 1, dc - dx + 1, 0L});
        Poly rn = pseudo_rem_fixed(n, X, *ev, steps);
        Poly rc = pseudo_rem_fixed(cand, X, *ev, steps);
        if (rn.is_zero() || rc.is_zero()) return false;
        return proportional_scalar(rn, rc).has_value();
    };

    // multiplicities over the declared exceptionals, capped and matched to
    // the degree gap
    constexpr long kMaxMult = 6;
    std::function<bool(size_t, const std::vector<long>&, const Poly&)> search =
        [&](size_t idx, const std::vector<long>& rest, const Poly& eprod) -> bool {
        if (idx == exceptional.size()) {
            for (long g : rest)
                if (g != 0) return false;
            return congruent_up_to_scalar(eprod * pair.divisor);
        }
        auto edeg = exceptional[idx].multidegree_opt();
        if (!edeg) return false;
        for (long m = 0; m <= kMaxMult; ++m) {
            std::vector<long> next = rest;
            for (size_t k = 0; k < next.size(); ++k) next[k] -= m * (*edeg)[k];
            if (search(idx + 1, next, m == 0 ? eprod : eprod * exceptional[idx].pow(m)))
                return true;
        }
        return false;
    };
    return search(0, gap, Poly::constant(ring, 1));
}

}  // namespace

bool restricts_birationally(const RationalMapSpec& fwd, const RationalMapSpec& bwd,
                            const CYPair& src, const CYPair& tgt, const std::string& elim_var,
                            const std::vector<Poly>& fwd_exceptional,
                            const std::vector<Poly>& bwd_exceptional) {
    if (!same_ring(fwd.source().ring(), src.ambient.ring()) ||
        !same_ring(fwd.target().ring(), tgt.ambient.ring()))
        throw math_error("restricts_birationally: fwd map does not connect the pairs");
    if (!same_ring(bwd.source().ring(), tgt.ambient.ring()) ||
        !same_ring(bwd.target().ring(), src.ambient.ring()))
        throw math_error("restricts_birationally: bwd map does not connect the pairs");

    RatFunc pulled_to_src = fwd.pullback(tgt.divisor);
    if (pulled_to_src.is_zero()) throw math_error("strict transform degenerate (fwd)");
    if (!matches_divisor_mod(pulled_to_src, src, fwd_exceptional, elim_var)) return false;

    RatFunc pulled_to_tgt = bwd.pullback(src.divisor);
    if (pulled_to_tgt.is_zero()) throw math_error("strict transform degenerate (bwd)");
    return matches_divisor_mod(pulled_to_tgt, tgt, bwd_exceptional, elim_var);
}

bool fixes_divisor_pointwise(const RationalMapSpec& map, const Poly& divisor) {
    if (!same_ring(map.source().ring(), map.target().ring()))
        throw math_error("fixes_divisor_pointwise needs a self-map");
    if (!same_ring(divisor.ring(), map.source().ring()))
        throw math_error("divisor is not on the map ambient");
    const auto& comps = map.cleared_components();
    const RingPtr& ring = map.source().ring();
    for (size_t i = 0; i < comps.size(); ++i) {
        for (size_t j = i + 1; j < comps.size(); ++j) {
            Poly cross = comps[i] * Poly::symbol(ring, j) - comps[j] * Poly::symbol(ring, i);
            if (cross.is_zero()) continue;
            if (!exact_div(cross, divisor)) return false;
        }
    }
    return true;
}

}  // namespace cypair
