#include "algebra/poly.hpp"

#include <algorithm>

namespace cypair {

Poly Poly::constant(RingPtr ring, const Rational& c) {
    Poly p(ring);
    if (!c.is_zero()) {
        Mono m;
        m.e.assign(ring->num_symbols(), 0);
        p.terms_.emplace(std::move(m), c);
    }
    return p;
}

Poly Poly::symbol(RingPtr ring, size_t index, int power) {
    if (index >= ring->num_symbols()) throw math_error("symbol index out of range");
    if (power < 0) throw math_error("negative exponent");
    if (power == 0) return constant(std::move(ring), 1);
    Poly p(ring);
    Mono m;
    m.e.assign(ring->num_symbols(), 0);
    m.e[index] = power;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Poly Poly::monomial(RingPtr ring, Mono m, const Rational& c) {
    Poly p(ring);
    if (!c.is_zero()) {
        if (m.e.size() != ring->num_symbols()) throw math_error("monomial exponent length mismatch");
        p.terms_.emplace(std::move(m), c);
    }
    return p;
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw math_error("polynomial is not constant");
    return terms_.begin()->second;
}

const Mono& Poly::leading_mono() const {
    if (terms_.empty()) throw math_error("zero polynomial has no leading term");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
    if (terms_.empty()) throw math_error("zero polynomial has no leading term");
    return terms_.begin()->second;
}

void Poly::add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!ring_) ring_ = o.ring_;
    if (!same_ring(ring_, o.ring_)) throw math_error("ring mismatch in addition");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!ring_) ring_ = o.ring_;
    if (!same_ring(ring_, o.ring_)) throw math_error("ring mismatch in subtraction");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (!same_ring(a.ring_, b.ring_)) throw math_error("ring mismatch in multiplication");
    Poly r(a.ring_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono m;
            m.e.resize(ma.e.size());
            for (size_t i = 0; i < ma.e.size(); ++i) m.e[i] = ma.e[i] + mb.e[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::pow(long n) const {
    if (n < 0) throw math_error("negative power of polynomial");
    Poly r = constant(ring_, 1);
    Poly base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    return a.terms_ == b.terms_;
}

long Poly::degree_in(size_t symbol) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.e[symbol]));
    return d;
}

long Poly::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::optional<std::vector<long>> Poly::multidegree_opt() const {
    if (terms_.empty()) return std::nullopt;
    const size_t r = ring_->rank();
    std::optional<std::vector<long>> deg;
    for (const auto& [m, c] : terms_) {
        std::vector<long> d(r, 0);
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            auto sd = ring_->symbol_degree(i);
            for (size_t k = 0; k < r; ++k) d[k] += sd[k] * m.e[i];
        }
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return std::nullopt;
        }
    }
    return deg;
}

std::vector<long> Poly::multidegree_checked() const {
    if (is_zero()) throw math_error("multidegree of the zero polynomial is undefined");
    auto d = multidegree_opt();
    if (!d) throw math_error("polynomial is not homogeneous");
    return *d;
}

std::set<size_t> Poly::support_symbols() const {
    std::set<size_t> s;
    for (const auto& [m, c] : terms_)
        for (size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] != 0) s.insert(i);
    return s;
}

bool Poly::contains_symbol(size_t symbol) const {
    for (const auto& [m, c] : terms_)
        if (m.e[symbol] != 0) return true;
    return false;
}

bool Poly::has_atoms() const {
    const size_t nv = ring_->num_vars();
    for (const auto& [m, c] : terms_)
        for (size_t i = nv; i < m.e.size(); ++i)
            if (m.e[i] != 0) return true;
    return false;
}

std::map<long, Poly> Poly::coeffs_in(size_t symbol) const {
    std::map<long, Poly> out;
    for (const auto& [m, c] : terms_) {
        long k = m.e[symbol];
        Mono red = m;
        red.e[symbol] = 0;
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, Poly(ring_)).first;
        it->second.add_term(red, c);
    }
    return out;
}

Poly Poly::assemble_in(size_t symbol, const std::map<long, Poly>& coeffs, const RingPtr& ring) {
    Poly r(ring);
    for (const auto& [k, p] : coeffs) {
        r += p * Poly::symbol(ring, symbol, static_cast<int>(k));
    }
    return r;
}

Poly Poly::derivative(size_t var) const {
    if (var >= ring_->num_vars()) throw math_error("derivative index is not a variable");
    const size_t nv = ring_->num_vars();
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        for (size_t i = nv; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            const auto& decl = ring_->atom_at(i);
            if (std::find(decl.args.begin(), decl.args.end(), static_cast<int>(var)) !=
                decl.args.end())
                throw math_error("cannot differentiate opaque atom " + decl.name);
        }
        if (m.e[var] == 0) continue;
        Mono d = m;
        d.e[var] -= 1;
        r.add_term(d, c * Rational(m.e[var]));
    }
    return r;
}

Poly Poly::substitute_ones(const std::set<size_t>& vars) const {
    const size_t nv = ring_->num_vars();
    for (size_t i = nv; i < ring_->num_symbols(); ++i) {
        if (!contains_symbol(i)) continue;
        for (int a : ring_->atom_at(i).args)
            if (vars.count(static_cast<size_t>(a)))
                throw math_error("cannot set atom argument to 1 symbolically (atom " +
                                 ring_->atom_at(i).name + ")");
    }
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        Mono red = m;
        for (size_t v : vars) red.e[v] = 0;
        r.add_term(red, c);
    }
    return r;
}

Poly Poly::specialize_atoms(const std::map<size_t, Poly>& values) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(ring_, c);
        Mono red = m;
        for (const auto& [sym, val] : values) {
            if (red.e[sym] != 0) {
                term = term * val.pow(red.e[sym]);
                red.e[sym] = 0;
            }
        }
        r += term * Poly::monomial(ring_, red, Rational(1));
    }
    return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (point.size() != ring_->num_vars()) throw math_error("evaluation point has wrong length");
    if (has_atoms()) throw math_error("cannot evaluate polynomial with opaque atoms");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < ring_->num_vars(); ++i) {
            for (int k = 0; k < m.e[i]; ++k) t *= point[i];
        }
        total += t;
    }
    return total;
}

Rational Poly::content_rational() const {
    if (is_zero()) return Rational(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd(num_gcd, c.numerator());
        den_lcm = lcm(den_lcm, c.denominator());
    }
    Rational content(num_gcd, den_lcm);
    if (leading_coeff().is_negative()) content = -content;
    return content;
}

Poly Poly::normalized_primitive() const {
    if (is_zero()) return *this;
    return scaled(content_rational().inverse());
}

static bool mono_divides(const Mono& a, const Mono& b) {
    // does a divide b
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw math_error("division by zero polynomial");
    if (a.is_zero()) return Poly::zero(a.ring());
    if (!same_ring(a.ring(), b.ring())) throw math_error("ring mismatch in division");
    Poly rem = a;
    Poly quot(a.ring());
    const Mono& lb = b.leading_mono();
    const Rational& cb = b.leading_coeff();
    while (!rem.is_zero()) {
        const Mono& lr = rem.leading_mono();
        if (!mono_divides(lb, lr)) return std::nullopt;
        Mono q;
        q.e.resize(lr.e.size());
        for (size_t i = 0; i < lr.e.size(); ++i) q.e[i] = lr.e[i] - lb.e[i];
        Poly qt = Poly::monomial(a.ring(), q, rem.leading_coeff() / cb);
        quot += qt;
        rem -= qt * b;
    }
    return quot;
}

std::pair<Poly, int> divide_out(const Poly& a, const Poly& b) {
    Poly cur = a;
    int mult = 0;
    if (b.is_constant()) return {cur, 0};
    while (true) {
        auto q = exact_div(cur, b);
        if (!q) break;
        cur = *q;
        ++mult;
        if (cur.is_zero()) break;
    }
    return {cur, mult};
}

PseudoDivision pseudo_divide(const Poly& a, const Poly& b, size_t symbol) {
    if (b.is_zero()) throw math_error("pseudo-division by zero");
    long db = b.degree_in(symbol);
    auto bc = b.coeffs_in(symbol);
    Poly lb = bc.rbegin()->second;  // leading coefficient in `symbol`
    Poly rem = a;
    Poly quot(a.ring());
    long da = rem.degree_in(symbol);
    long k = std::max(da - db + 1, 0L);
    Poly mult = Poly::constant(a.ring(), 1);
    for (long step = 0; step < k; ++step) {
        da = rem.degree_in(symbol);
        if (da < db) {
            // multiply through remaining times to keep the stated identity
            rem = rem * lb;
            quot = quot * lb;
            mult = mult * lb;
            continue;
        }
        auto rc = rem.coeffs_in(symbol);
        Poly lr = rc.rbegin()->second;
        Poly shift = Poly::symbol(a.ring(), symbol, static_cast<int>(da - db));
        quot = quot * lb + lr * shift;
        rem = rem * lb - lr * shift * b;
        mult = mult * lb;
    }
    return {quot, rem, mult};
}

Poly pseudo_rem_fixed(const Poly& a, const Poly& b, size_t symbol, long steps) {
    if (b.is_zero()) throw math_error("pseudo-division by zero");
    long db = b.degree_in(symbol);
    auto bc = b.coeffs_in(symbol);
    Poly lb = bc.rbegin()->second;
    Poly rem = a;
    for (long step = 0; step < steps; ++step) {
        long da = rem.degree_in(symbol);
        if (da < db) {
            rem = rem * lb;
            continue;
        }
        auto rc = rem.coeffs_in(symbol);
        Poly lr = rc.rbegin()->second;
        Poly shift = Poly::symbol(a.ring(), symbol, static_cast<int>(da - db));
        rem = rem * lb - lr * shift * b;
    }
    return rem;
}

std::optional<Rational> proportional_scalar(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() && b.is_zero()) return Rational(1);
        return std::nullopt;
    }
    if (a.term_count() != b.term_count()) return std::nullopt;
    Rational c = a.leading_coeff() / b.leading_coeff();
    auto ita = a.terms().begin();
    auto itb = b.terms().begin();
    for (; ita != a.terms().end(); ++ita, ++itb) {
        if (!(ita->first == itb->first)) return std::nullopt;
        if (ita->second != itb->second * c) return std::nullopt;
    }
    return c;
}

// ---------------------------------------------------------------------------
// GCD: primitive polynomial remainder sequences, recursing on the highest
// occurring symbol.

namespace {

size_t max_symbol(const Poly& a, const Poly& b) {
    size_t mx = 0;
    bool found = false;
    for (const Poly* p : {&a, &b}) {
        for (size_t s : p->support_symbols()) {
            mx = found ? std::max(mx, s) : s;
            found = true;
        }
    }
    if (!found) throw math_error("max_symbol of constants");
    return mx;
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, size_t symbol) {
    Poly c(p.ring());
    for (const auto& [k, coeff] : p.coeffs_in(symbol)) {
        c = c.is_zero() ? coeff : gcd_rec(c, coeff);
        if (c.is_constant() && !c.is_zero()) return Poly::constant(p.ring(), 1);
    }
    return c.normalized_primitive();
}

Poly primitive_part_in(const Poly& p, size_t symbol) {
    if (p.is_zero()) return p;
    Poly c = content_in(p, symbol);
    auto q = exact_div(p, c);
    if (!q) throw math_error("internal: content does not divide");
    return q->normalized_primitive();
}

// prem variant for the PRS: stops as soon as the degree drops, no padding
Poly prem_lean(const Poly& a, const Poly& b, size_t symbol) {
    long db = b.degree_in(symbol);
    Poly lb = b.coeffs_in(symbol).rbegin()->second;
    Poly rem = a;
    while (!rem.is_zero() && rem.degree_in(symbol) >= db) {
        long da = rem.degree_in(symbol);
        Poly lr = rem.coeffs_in(symbol).rbegin()->second;
        Poly shift = Poly::symbol(a.ring(), symbol, static_cast<int>(da - db));
        rem = rem * lb - lr * shift * b;
    }
    return rem;
}

// univariate image at a deterministic point; nullopt when a leading
// coefficient vanishes there
std::optional<std::map<long, Rational>> univariate_image(const Poly& p, size_t symbol,
                                                         long salt) {
    std::map<long, Rational> img;
    for (const auto& [m, c] : p.terms()) {
        Rational val = c;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (i == symbol || m.e[i] == 0) continue;
            // points 2+salt, 3+salt, ... per symbol index
            Rational pt(static_cast<long>(i) + 2 + salt);
            for (int k = 0; k < m.e[i]; ++k) val *= pt;
        }
        img[m.e[symbol]] += val;
    }
    for (auto it = img.begin(); it != img.end();) {
        if (it->second.is_zero()) it = img.erase(it);
        else ++it;
    }
    if (img.empty()) return std::nullopt;
    if (img.rbegin()->first != p.degree_in(symbol)) return std::nullopt;  // lc vanished
    return img;
}

long univariate_gcd_degree(std::map<long, Rational> a, std::map<long, Rational> b) {
    auto deg = [](const std::map<long, Rational>& p) { return p.empty() ? -1L : p.rbegin()->first; };
    while (!b.empty()) {
        // a mod b
        while (deg(a) >= deg(b) && !a.empty()) {
            long shift = deg(a) - deg(b);
            Rational f = a.rbegin()->second / b.rbegin()->second;
            for (const auto& [e, c] : b) {
                a[e + shift] -= f * c;
                if (a[e + shift].is_zero()) a.erase(e + shift);
            }
        }
        std::swap(a, b);
    }
    return deg(a);
}

// certify gcd(a, b) constant via univariate evaluations; false = inconclusive
bool certify_coprime(const Poly& a, const Poly& b) {
    auto sa = a.support_symbols();
    auto sb = b.support_symbols();
    for (size_t s : sa) {
        if (!sb.count(s)) continue;
        bool shown = false;
        for (long salt = 0; salt < 3 && !shown; ++salt) {
            auto ua = univariate_image(a, s, salt);
            auto ub = univariate_image(b, s, salt);
            if (!ua || !ub) continue;
            if (univariate_gcd_degree(*ua, *ub) == 0) shown = true;
        }
        if (!shown) return false;
    }
    return true;
}

// gcd of the monomial parts (cheap common content)
Mono monomial_content(const Poly& p) {
    Mono m;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        if (first) {
            m = mono;
            first = false;
        } else {
            for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::min(m.e[i], mono.e[i]);
        }
    }
    return m;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.normalized_primitive();
    if (b.is_zero()) return a.normalized_primitive();
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.ring(), 1);
    if (proportional_scalar(a, b)) return a.normalized_primitive();

    // split off monomial content first
    Mono ma = monomial_content(a), mb = monomial_content(b);
    bool strip = false;
    for (int e : ma.e) strip = strip || e != 0;
    for (int e : mb.e) strip = strip || e != 0;
    if (strip) {
        Mono common = ma;
        for (size_t i = 0; i < common.e.size(); ++i) common.e[i] = std::min(ma.e[i], mb.e[i]);
        Poly aa = *exact_div(a, Poly::monomial(a.ring(), ma, Rational(1)));
        Poly bb = *exact_div(b, Poly::monomial(b.ring(), mb, Rational(1)));
        return (Poly::monomial(a.ring(), common, Rational(1)) * gcd_rec(aa, bb))
            .normalized_primitive();
    }

    // cheap exact-division trials cover the common library cases
    if (a.term_count() <= b.term_count()) {
        if (exact_div(b, a)) return a.normalized_primitive();
    } else if (exact_div(a, b)) {
        return b.normalized_primitive();
    }
    if (certify_coprime(a, b)) return Poly::constant(a.ring(), 1);

    size_t main = max_symbol(a, b);
    if (!a.contains_symbol(main)) return gcd_rec(a, content_in(b, main));
    if (!b.contains_symbol(main)) return gcd_rec(content_in(a, main), b);
    Poly ca = content_in(a, main);
    Poly cb = content_in(b, main);
    Poly pa = primitive_part_in(a, main);
    Poly pb = primitive_part_in(b, main);
    if (pa.degree_in(main) < pb.degree_in(main)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = prem_lean(pa, pb, main);
        pa = pb;
        pb = r.is_zero() ? r : primitive_part_in(r, main);
    }
    Poly g = pa.contains_symbol(main) ? primitive_part_in(pa, main) : Poly::constant(a.ring(), 1);
    return (gcd_rec(ca, cb) * g).normalized_primitive();
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (!same_ring(a.ring(), b.ring())) throw math_error("ring mismatch in gcd");
    return gcd_rec(a, b).normalized_primitive();
}

}  // namespace cypair
