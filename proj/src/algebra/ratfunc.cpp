#include "algebra/ratfunc.hpp"

namespace cypair {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw math_error("rational function with zero denominator");
    if (!same_ring(num_.ring(), den_.ring())) throw math_error("ring mismatch in rational function");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.ring(), 1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *exact_div(num_, g);
        den_ = *exact_div(den_, g);
    }
    Rational c = den_.content_rational();
    num_ = num_.scaled(c.inverse());
    den_ = den_.scaled(c.inverse());
}

bool RatFunc::is_poly() const { return den_.is_constant(); }

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw math_error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(long n) const {
    if (n < 0) {
        if (is_zero()) throw math_error("negative power of zero");
        return RatFunc(den_, num_).pow(-n);
    }
    RatFunc r = RatFunc::constant(ring(), 1);
    RatFunc base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

std::optional<std::vector<long>> RatFunc::multidegree_opt() const {
    if (num_.is_zero()) return std::nullopt;
    auto dn = num_.multidegree_opt();
    auto dd = den_.multidegree_opt();
    if (!dn || !dd) return std::nullopt;
    std::vector<long> d(dn->size());
    for (size_t i = 0; i < d.size(); ++i) d[i] = (*dn)[i] - (*dd)[i];
    return d;
}

RatFunc RatFunc::derivative(size_t var) const {
    Poly dn = num_.derivative(var);
    Poly dd = den_.derivative(var);
    return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

RatFunc substitute(const Poly& p, const std::map<size_t, RatFunc>& bindings) {
    const RingPtr& src = p.ring();
    RingPtr dst;
    for (const auto& [i, v] : bindings) {
        if (i >= src->num_vars()) throw math_error("binding index is not a variable");
        if (!dst) dst = v.ring();
        else if (!same_ring(dst, v.ring())) throw math_error("bindings live in different rings");
    }
    if (!dst) dst = src;  // empty bindings: only legal for constants
    const size_t nv = src->num_vars();

    // check coverage
    for (size_t s : p.support_symbols()) {
        if (s < nv) {
            if (!bindings.count(s))
                throw math_error("unbound variable in substitution: " + src->symbol_name(s));
        } else {
            for (int a : src->atom_at(s).args)
                if (!bindings.count(static_cast<size_t>(a)))
                    throw math_error("unbound atom argument in substitution: " +
                                     src->vars()[a]);
        }
    }

    // atom pullbacks
    std::map<size_t, RatFunc> atom_values;
    for (size_t s : p.support_symbols()) {
        if (s < nv) continue;
        const AtomDecl& decl = src->atom_at(s);
        auto dst_atom = dst->find_symbol(decl.name);
        if (!dst_atom || !dst->is_atom_index(*dst_atom))
            throw math_error("binding ring lacks atom " + decl.name);
        if (dst->atom_at(*dst_atom).form_degree != decl.form_degree)
            throw math_error("atom " + decl.name + " has different form degree in binding ring");
        RatFunc s_common;
        bool have = false;
        for (int a : decl.args) {
            auto dv = dst->find_var(src->vars()[a]);
            if (!dv)
                throw math_error("atom-scaling check: binding ring lacks variable " +
                                 src->vars()[a]);
            RatFunc var_dst(Poly::symbol(dst, *dv));
            RatFunc scale = bindings.at(a) / var_dst;
            if (!have) {
                s_common = scale;
                have = true;
            } else if (!(scale == s_common)) {
                throw math_error("atom-scaling violation for atom " + decl.name +
                                 ": arguments are not rescaled by a common factor");
            }
        }
        RatFunc av(Poly::symbol(dst, *dst_atom));
        atom_values.emplace(s, s_common.pow(decl.form_degree) * av);
    }

    // Accumulate over one explicit common denominator: each symbol i with
    // value N_i/D_i contributes N_i^e * D_i^(E_i - e) per term, where E_i is
    // the largest exponent of i across p. The single final reduction cancels
    // the known D_i powers by exact division, avoiding intermediate gcds.
    std::map<size_t, RatFunc> values;
    for (size_t s : p.support_symbols())
        values.emplace(s, s < nv ? bindings.at(s) : atom_values.at(s));

    std::map<size_t, int> max_exp;
    for (const auto& [m, c] : p.terms())
        for (size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0) max_exp[i] = std::max(max_exp[i], m.e[i]);

    Poly num(dst);
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(dst, c);
        for (const auto& [i, top] : max_exp) {
            int e = m.e[i];
            const RatFunc& v = values.at(i);
            if (e > 0) term = term * v.num().pow(e);
            if (top - e > 0) {
                if (v.den().is_constant())
                    term = term.scaled(v.den().constant_value().pow(top - e));
                else
                    term = term * v.den().pow(top - e);
            }
        }
        num += term;
    }
    Poly den = Poly::constant(dst, 1);
    std::vector<std::pair<Poly, int>> den_factors;
    for (const auto& [i, top] : max_exp) {
        const Poly& d = values.at(i).den();
        if (!d.is_constant()) den_factors.push_back({d, top});
        else den = den.scaled(d.constant_value().pow(top));
    }
    for (const auto& [d, top] : den_factors) {
        auto [rest, mult] = divide_out(num, d);
        int keep = top - std::min(mult, top);
        if (mult > top) {
            // more copies divided out than the denominator carries
            num = rest * d.pow(mult - top);
        } else {
            num = rest;
        }
        den = den * d.pow(keep);
    }
    return RatFunc(std::move(num), std::move(den));
}

RatFunc substitute(const RatFunc& f, const std::map<size_t, RatFunc>& bindings) {
    RatFunc den = substitute(f.den(), bindings);
    if (den.is_zero()) throw math_error("substitution sends denominator to zero");
    return substitute(f.num(), bindings) / den;
}

std::map<size_t, RatFunc> bindings_by_name(const RingPtr& source,
                                           const std::map<std::string, RatFunc>& by_name) {
    std::map<size_t, RatFunc> out;
    for (const auto& [name, value] : by_name) {
        auto idx = source->find_var(name);
        if (!idx) throw math_error("no variable named " + name + " in source ring");
        out.emplace(*idx, value);
    }
    return out;
}

}  // namespace cypair
