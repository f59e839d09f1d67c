#include "birmap/birmap.hpp"

#include "algebra/matq.hpp"

#include <algorithm>
#include <functional>

namespace cypair {

CYPair::CYPair(ToricAmbient amb, std::vector<Poly> cons, Poly div, std::string lbl)
    : ambient(std::move(amb)), constraints(std::move(cons)), divisor(std::move(div)),
      label(std::move(lbl)) {
    if (divisor.is_zero()) throw math_error("pair " + label + ": zero divisor");
    std::vector<long> total = divisor.multidegree_checked();
    for (const auto& c : constraints) {
        auto d = c.multidegree_checked();
        for (size_t k = 0; k < total.size(); ++k) total[k] += d[k];
    }
    if (total != ambient.ring()->sum_of_columns())
        throw math_error("pair " + label +
                         ": divisor and constraints do not add up to the anticanonical degree");
}

namespace {

// Solve deg(p_w) = M * col(w) + shift for an integer matrix M (and shift when
// allowed). Returns M (row-major, r_src x r_tgt) or nullopt.
std::optional<std::vector<std::vector<long>>> solve_grading(
    const std::vector<std::vector<long>>& degs, const RingPtr& src, const RingPtr& tgt,
    bool allow_shift, std::vector<long>* shift_out) {
    const size_t rs = src->rank();
    const size_t rt = tgt->rank();
    const size_t n = tgt->num_vars();
    // unknowns: M (rs*rt) then shift (rs)
    size_t cols = rs * rt + (allow_shift ? rs : 0);
    MatQ a;
    VecQ b;
    for (size_t w = 0; w < n; ++w) {
        auto col = tgt->column(w);
        for (size_t i = 0; i < rs; ++i) {
            VecQ row(cols, Rational(0));
            for (size_t j = 0; j < rt; ++j) row[i * rt + j] = Rational(col[j]);
            if (allow_shift) row[rs * rt + i] = Rational(1);
            a.push_back(std::move(row));
            b.push_back(Rational(degs[w][i]));
        }
    }
    auto sol = solve(a, b);
    if (!sol) return std::nullopt;
    std::vector<std::vector<long>> m(rs, std::vector<long>(rt));
    for (size_t i = 0; i < rs; ++i)
        for (size_t j = 0; j < rt; ++j) {
            if (!(*sol)[i * rt + j].is_integer()) return std::nullopt;
            m[i][j] = static_cast<long>((*sol)[i * rt + j].numerator().get_si());
        }
    if (allow_shift && shift_out) {
        shift_out->assign(rs, 0);
        for (size_t i = 0; i < rs; ++i) {
            if (!(*sol)[rs * rt + i].is_integer()) return std::nullopt;
            (*shift_out)[i] = static_cast<long>((*sol)[rs * rt + i].numerator().get_si());
        }
    }
    return m;
}

// A Laurent monomial of the given multidegree, as a RatFunc.
RatFunc laurent_of_degree(const RingPtr& ring, const std::vector<long>& deg) {
    const size_t r = ring->rank();
    const size_t n = ring->num_vars();
    // find r columns with unimodular submatrix
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<size_t> pick;
    std::vector<bool> used(n, false);
    std::function<bool(size_t)> search = [&](size_t k) -> bool {
        if (k == r) {
            std::vector<std::vector<long>> sub(r, std::vector<long>(r));
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j) sub[i][j] = ring->weights()[i][pick[j]];
            long d = idet(sub);
            return d == 1 || d == -1;
        }
        for (size_t v = (pick.empty() ? 0 : pick.back() + 1); v < n; ++v) {
            pick.push_back(v);
            if (search(k + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!search(0)) throw math_error("weight columns do not generate the grading lattice");
    MatQ sub(r, VecQ(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) sub[i][j] = Rational(ring->weights()[i][pick[j]]);
    VecQ rhs(r);
    for (size_t i = 0; i < r; ++i) rhs[i] = Rational(deg[i]);
    auto a = solve(sub, rhs);
    if (!a) throw math_error("internal: unimodular solve failed");
    RatFunc m = RatFunc::constant(ring, 1);
    for (size_t j = 0; j < r; ++j) {
        long e = static_cast<long>((*a)[j].numerator().get_si());
        m = m * RatFunc(Poly::symbol(ring, pick[j])).pow(e);
    }
    return m;
}

}  // namespace

RationalMapSpec::RationalMapSpec(ToricAmbient source, ToricAmbient target,
                                 std::vector<RatFunc> components)
    : source_(std::move(source)), target_(std::move(target)) {
    const RingPtr& src = source_.ring();
    const RingPtr& tgt = target_.ring();
    if (components.size() != tgt->num_vars())
        throw math_error("map needs one component per target variable");
    for (const auto& f : components)
        if (!same_ring(f.ring(), src)) throw math_error("map component in wrong ring");

    // canonical cleared tuple: common denominator, overall gcd, content
    Poly common_den = Poly::constant(src, 1);
    for (const auto& f : components) {
        Poly g = poly_gcd(common_den, f.den());
        common_den = *exact_div(common_den * f.den(), g);
    }
    bool all_zero = true;
    for (const auto& f : components) {
        RatFunc cleared = f * RatFunc(common_den);
        if (!cleared.is_poly()) throw math_error("internal: denominator clearing failed");
        cleared_.push_back(cleared.num().scaled(cleared.den().constant_value().inverse()));
        if (!cleared_.back().is_zero()) all_zero = false;
    }
    if (all_zero) throw math_error("map with all components zero");
    Poly g(src);
    for (const auto& p : cleared_) g = poly_gcd(g, p);
    if (!g.is_constant())
        for (auto& p : cleared_) p = *exact_div(p, g);
    // rational content: make the first nonzero component integer-primitive
    for (const auto& p : cleared_) {
        if (p.is_zero()) continue;
        Rational c = p.content_rational();
        for (auto& q : cleared_) q = q.scaled(c.inverse());
        break;
    }

    // grading consistency; prefer the caller's tuple when already graded
    std::vector<std::vector<long>> degs;
    for (size_t w = 0; w < cleared_.size(); ++w) {
        if (cleared_[w].is_zero())
            throw math_error("map component for " + tgt->vars()[w] +
                             " vanishes identically after normalization");
        auto d = cleared_[w].multidegree_opt();
        if (!d)
            throw math_error("map component for " + tgt->vars()[w] + " is not homogeneous");
        degs.push_back(*d);
    }

    std::vector<std::vector<long>> input_degs;
    bool input_graded_candidate = true;
    for (const auto& f : components) {
        auto d = f.multidegree_opt();
        if (!d) {
            input_graded_candidate = false;
            break;
        }
        input_degs.push_back(*d);
    }
    if (input_graded_candidate) {
        if (auto m = solve_grading(input_degs, src, tgt, false, nullptr)) {
            grading_matrix_ = *m;
            graded_ = components;
            cleared_is_graded_ = solve_grading(degs, src, tgt, false, nullptr).has_value();
            return;
        }
    }
    if (auto m = solve_grading(degs, src, tgt, false, nullptr)) {
        grading_matrix_ = *m;
        cleared_is_graded_ = true;
        for (const auto& p : cleared_) graded_.emplace_back(p);
    } else {
        std::vector<long> shift;
        auto ms = solve_grading(degs, src, tgt, true, &shift);
        if (!ms)
            throw math_error("grading inconsistency: component degrees do not factor through "
                             "the target weights");
        grading_matrix_ = *ms;
        RatFunc mu = laurent_of_degree(src, shift);
        for (const auto& p : cleared_) graded_.push_back(RatFunc(p) / mu);
    }
}

RatFunc RationalMapSpec::pullback(const Poly& divisor_on_target) const {
    if (!same_ring(divisor_on_target.ring(), target_.ring()))
        throw math_error("divisor is not on the map target");
    if (!divisor_on_target.is_homogeneous())
        throw math_error("pullback requires a homogeneous divisor");
    std::map<size_t, RatFunc> bind;
    for (size_t w = 0; w < graded_.size(); ++w) bind.emplace(w, graded_[w]);
    return substitute(divisor_on_target, bind);
}

bool RationalMapSpec::is_identity() const {
    if (!same_ring(source_.ring(), target_.ring())) return false;
    const size_t n = source_.ring()->num_vars();
    std::vector<Poly> id;
    for (size_t i = 0; i < n; ++i) id.push_back(Poly::symbol(source_.ring(), i));
    // cleared tuple equals (x_0,...,x_{n-1}) up to one scalar
    std::optional<Rational> scale;
    for (size_t i = 0; i < n; ++i) {
        auto c = proportional_scalar(cleared_[i], id[i]);
        if (!c) return false;
        if (!scale) scale = c;
        else if (*scale != *c) return false;
    }
    return true;
}

RationalMapSpec RationalMapSpec::specialized(const std::map<std::string, Poly>& atom_values) const {
    const RingPtr& src = source_.ring();
    std::map<size_t, Poly> by_index;
    for (const auto& [name, value] : atom_values) {
        auto idx = src->find_symbol(name);
        if (!idx || !src->is_atom_index(*idx)) continue;
        by_index.emplace(*idx, value);
    }
    std::vector<RatFunc> comps;
    for (const auto& f : graded_)
        comps.emplace_back(f.num().specialize_atoms(by_index), f.den().specialize_atoms(by_index));
    return RationalMapSpec(source_, target_, std::move(comps));
}

RationalMapSpec map_compose(const RationalMapSpec& f, const RationalMapSpec& g) {
    if (!same_ring(f.target().ring(), g.source().ring()))
        throw math_error("composition mismatch: target of first map != source of second");
    std::map<size_t, RatFunc> bind;
    for (size_t w = 0; w < f.graded_components().size(); ++w)
        bind.emplace(w, f.graded_components()[w]);
    std::vector<RatFunc> comps;
    for (const auto& gw : g.graded_components()) comps.push_back(substitute(gw, bind));
    return RationalMapSpec(f.source(), g.target(), std::move(comps));
}

bool map_equal(const RationalMapSpec& f, const RationalMapSpec& g, const Chart& target_chart) {
    if (!same_ring(f.source().ring(), g.source().ring()) ||
        !same_ring(f.target().ring(), g.target().ring()))
        throw math_error("map_equal needs matching source and target");
    if (!same_ring(target_chart.ambient_ring(), f.target().ring()))
        throw math_error("chart is not on the map target");

    auto chart_tuple = [&](const RationalMapSpec& m) {
        std::vector<RatFunc> out;
        const RingPtr& src = m.source().ring();
        for (size_t j = 0; j < target_chart.coords().size(); ++j) {
            const auto& exps = target_chart.coordinate_exponents(j);
            RatFunc val = RatFunc::constant(src, 1);
            for (size_t v = 0; v < exps.size(); ++v) {
                if (exps[v] == 0) continue;
                const RatFunc& fv = m.graded_components()[v];
                if (fv.is_zero() && exps[v] < 0)
                    throw math_error("chart invalid for map: unit-set component " +
                                     m.target().ring()->vars()[v] + " is identically zero");
                val = val * fv.pow(exps[v]);
            }
            out.push_back(val);
        }
        return out;
    };

    auto tf = chart_tuple(f);
    auto tg = chart_tuple(g);
    for (size_t j = 0; j < tf.size(); ++j)
        if (!(tf[j] == tg[j])) return false;
    return true;
}

StrictTransform strict_transform(const Poly& divisor, const RationalMapSpec& map,
                                 const std::vector<Poly>& exceptional) {
    StrictTransform out;
    out.raw_pullback = map.pullback(divisor);
    if (out.raw_pullback.is_zero())
        throw math_error("pullback of divisor vanishes identically (divisor contains the image)");

    const RingPtr& src = map.source().ring();
    std::vector<Poly> factors;
    for (const auto& e : exceptional) {
        if (!same_ring(e.ring(), src)) throw math_error("exceptional polynomial in wrong ring");
        factors.push_back(e.normalized_primitive());
    }
    for (size_t v = 0; v < src->num_vars(); ++v) {
        Poly x = Poly::symbol(src, v);
        bool dup = false;
        for (const auto& f : factors)
            if (f == x) dup = true;
        if (!dup) factors.push_back(x);
    }

    Poly num = out.raw_pullback.num();
    Poly den = out.raw_pullback.den();
    for (const auto& f : factors) {
        auto [rest, mult] = divide_out(num, f);
        if (mult > 0) {
            num = rest;
            out.removed.push_back({f, mult, false});
        }
        auto [drest, dmult] = divide_out(den, f);
        if (dmult > 0) {
            den = drest;
            out.removed.push_back({f, dmult, true});
        }
    }
    if (!den.is_constant())
        throw math_error("pullback denominator has a factor outside the declared exceptional set: " +
                         std::string("degree ") + std::to_string(den.total_degree()));
    out.transform = num.normalized_primitive();
    return out;
}

}  // namespace cypair
