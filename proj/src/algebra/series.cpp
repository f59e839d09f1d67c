#include "algebra/series.hpp"

namespace cypair {

TruncSeries TruncSeries::from_poly(const Poly& p, long order) {
    TruncSeries s(p.ring(), order);
    for (const auto& [m, c] : p.terms())
        if (m.total_degree() < order) s.terms_.emplace(m, c);
    return s;
}

TruncSeries TruncSeries::constant(const RingPtr& ring, long order, const Rational& c) {
    return from_poly(Poly::constant(ring, c), order);
}

TruncSeries TruncSeries::variable(const RingPtr& ring, long order, size_t var) {
    return from_poly(Poly::symbol(ring, var), order);
}

long TruncSeries::valuation() const {
    long v = order_;
    for (const auto& [m, c] : terms_) v = std::min(v, m.total_degree());
    return v;
}

Poly TruncSeries::homogeneous_part(long degree) const {
    Poly p(ring_);
    for (const auto& [m, c] : terms_)
        if (m.total_degree() == degree) p.add_term(m, c);
    return p;
}

Poly TruncSeries::to_poly() const {
    Poly p(ring_);
    for (const auto& [m, c] : terms_) p.add_term(m, c);
    return p;
}

Rational TruncSeries::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncSeries::add_term(const Mono& m, const Rational& c) {
    if (c.is_zero() || m.total_degree() >= order_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(ring_, order_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(a.ring_, std::min(a.order_, b.order_));
    for (const auto& [m, c] : a.terms_) r.add_term(m, c);
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    return a + (-b);
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(a.ring_, std::min(a.order_, b.order_));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.total_degree() + mb.total_degree() >= r.order_) continue;
            Mono m;
            m.e.resize(ma.e.size());
            for (size_t i = 0; i < ma.e.size(); ++i) m.e[i] = ma.e[i] + mb.e[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

TruncSeries TruncSeries::scaled(const Rational& c) const {
    TruncSeries r(ring_, order_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

TruncSeries TruncSeries::pow(long n) const {
    if (n < 0) throw math_error("negative power of series");
    TruncSeries r = constant(ring_, order_, 1);
    TruncSeries base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

TruncSeries TruncSeries::inverse() const {
    Mono one;
    one.e.assign(ring_->num_symbols(), 0);
    Rational c0 = coeff(one);
    if (c0.is_zero()) throw math_error("series inverse needs a unit constant term");
    // f = c0 (1 - u), 1/f = (1/c0) sum u^k
    TruncSeries u = constant(ring_, order_, 1) - scaled(c0.inverse());
    TruncSeries acc = constant(ring_, order_, 1);
    TruncSeries upow = u;
    for (long k = 1; k < order_ && !upow.is_zero(); ++k) {
        acc = acc + upow;
        upow = upow * u;
    }
    return acc.scaled(c0.inverse());
}

TruncSeries TruncSeries::sqrt_unit() const {
    Mono one;
    one.e.assign(ring_->num_symbols(), 0);
    if (coeff(one) != Rational(1)) throw math_error("sqrt_unit needs constant term 1");
    // binomial series (1+t)^(1/2)
    TruncSeries t = *this - constant(ring_, order_, 1);
    TruncSeries acc = constant(ring_, order_, 1);
    TruncSeries tpow = t;
    Rational binom(1);
    for (long k = 1; k < order_ && !tpow.is_zero(); ++k) {
        // C(1/2, k) = C(1/2, k-1) * (1/2 - (k-1)) / k
        binom *= (Rational(1, 2) - Rational(k - 1)) / Rational(k);
        acc = acc + tpow.scaled(binom);
        tpow = tpow * t;
    }
    return acc;
}

TruncSeries TruncSeries::substitute_vars(const std::map<size_t, TruncSeries>& bindings) const {
    TruncSeries r(ring_, order_);
    for (const auto& [m, c] : terms_) {
        TruncSeries term = constant(ring_, order_, c);
        Mono rest = m;
        for (const auto& [v, val] : bindings) {
            if (rest.e[v] > 0) {
                term = term * val.pow(rest.e[v]);
                rest.e[v] = 0;
            }
        }
        term = term * from_poly(Poly::monomial(ring_, rest, Rational(1)), order_);
        r = r + term;
    }
    return r;
}

TruncSeries series_expand(const RatFunc& f, const std::vector<Rational>& center, long order) {
    const RingPtr& ring = f.ring();
    if (center.size() != ring->num_vars()) throw math_error("center has wrong length");
    if (f.num().has_atoms() || f.den().has_atoms())
        throw math_error("series expansion requires atom-free input");

    // Recenter: x_i -> x_i + c_i.
    std::map<size_t, RatFunc> shift;
    for (size_t i = 0; i < ring->num_vars(); ++i) {
        shift.emplace(i, RatFunc(Poly::symbol(ring, i) +
                                 Poly::constant(ring, center[i])));
    }
    RatFunc num_shift = substitute(RatFunc(f.num()), shift);
    RatFunc den_shift = substitute(RatFunc(f.den()), shift);
    Poly num = num_shift.num().scaled(num_shift.den().constant_value().inverse());
    Poly den = den_shift.num().scaled(den_shift.den().constant_value().inverse());

    std::vector<Rational> origin(ring->num_vars(), Rational(0));
    if (den.eval(origin).is_zero()) throw math_error("pole at series center");

    TruncSeries n = TruncSeries::from_poly(num, order);
    TruncSeries d = TruncSeries::from_poly(den, order);
    return n * d.inverse();
}

}  // namespace cypair
