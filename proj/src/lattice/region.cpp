#include "lattice/region.hpp"

#include "algebra/parse.hpp"

#include <algorithm>

namespace cypair {

void Region::add(const std::string& expr, bool equality) {
    RingPtr ring = make_ring(vars, {});
    Poly p = poly_parse(expr, ring);
    LinearConstraint con;
    con.coeffs.assign(vars.size(), Rational(0));
    con.equality = equality;
    for (const auto& [m, c] : p.terms()) {
        long d = m.total_degree();
        if (d == 0) {
            con.constant += c;
        } else if (d == 1) {
            for (size_t i = 0; i < vars.size(); ++i)
                if (m.e[i] == 1) con.coeffs[i] += c;
        } else {
            throw math_error("region constraint is not linear: " + expr);
        }
    }
    constraints.push_back(std::move(con));
}

bool Region::contains(const std::vector<Rational>& point) const {
    for (const auto& con : constraints) {
        Rational v = con.constant;
        for (size_t i = 0; i < con.coeffs.size(); ++i) v += con.coeffs[i] * point[i];
        if (con.equality ? !v.is_zero() : v.is_negative()) return false;
    }
    return true;
}

namespace {

// inequality list in the form coeffs . x + c >= 0
using IneqList = std::vector<std::pair<VecQ, Rational>>;

// Fourier-Motzkin: eliminate variable `v` from the system.
IneqList eliminate(const IneqList& sys, size_t v) {
    IneqList none, pos, neg;
    for (const auto& [a, c] : sys) {
        if (a[v].is_zero()) none.push_back({a, c});
        else if (a[v].is_positive()) pos.push_back({a, c});
        else neg.push_back({a, c});
    }
    IneqList out = none;
    for (const auto& [ap, cp] : pos) {
        for (const auto& [an, cn] : neg) {
            // ap[v] > 0, an[v] < 0: combine to cancel v
            Rational f = ap[v] / (-an[v]);
            VecQ a(ap.size());
            for (size_t i = 0; i < a.size(); ++i) a[i] = ap[i] + f * an[i];
            Rational c = cp + f * cn;
            a[v] = Rational(0);
            out.push_back({std::move(a), c});
        }
    }
    return out;
}

// over the 1-variable system in `v`, extract [lo, hi]; unbounded sides are
// reported as nullopt
struct Interval {
    std::optional<Rational> lo, hi;
    bool empty = false;
};

Interval interval_of(const IneqList& sys, size_t v) {
    Interval iv;
    for (const auto& [a, c] : sys) {
        if (a[v].is_zero()) {
            if (c.is_negative()) iv.empty = true;  // 0 >= -c fails
            continue;
        }
        // a[v] x + c >= 0
        Rational bound = -c / a[v];
        if (a[v].is_positive()) {
            if (!iv.lo || bound > *iv.lo) iv.lo = bound;
        } else {
            if (!iv.hi || bound < *iv.hi) iv.hi = bound;
        }
    }
    if (iv.lo && iv.hi && *iv.lo > *iv.hi) iv.empty = true;
    return iv;
}

IneqList as_inequalities(const Region& region) {
    IneqList sys;
    for (const auto& con : region.constraints) {
        sys.push_back({con.coeffs, con.constant});
        if (con.equality) {
            VecQ neg(con.coeffs.size());
            for (size_t i = 0; i < neg.size(); ++i) neg[i] = -con.coeffs[i];
            sys.push_back({std::move(neg), -con.constant});
        }
    }
    return sys;
}

}  // namespace

std::optional<CoordinateBounds> region_bounds(const Region& region) {
    const size_t n = region.vars.size();
    IneqList base = as_inequalities(region);
    CoordinateBounds out;
    out.bounds.resize(n);
    for (size_t v = 0; v < n; ++v) {
        IneqList sys = base;
        for (size_t w = 0; w < n; ++w) {
            if (w == v) continue;
            sys = eliminate(sys, w);
        }
        Interval iv = interval_of(sys, v);
        if (iv.empty) return std::nullopt;
        if (!iv.lo || !iv.hi)
            throw math_error("unbounded region: variable " + region.vars[v] +
                             " has no finite bound");
        out.bounds[v] = {*iv.lo, *iv.hi};
    }
    return out;
}

std::vector<std::vector<long>> integer_points(const Region& region) {
    auto bounds = region_bounds(region);
    std::vector<std::vector<long>> out;
    if (!bounds) return out;
    const size_t n = region.vars.size();
    std::vector<long> lo(n), hi(n);
    for (size_t i = 0; i < n; ++i) {
        lo[i] = static_cast<long>(bounds->bounds[i].first.ceil().get_si());
        hi[i] = static_cast<long>(bounds->bounds[i].second.floor().get_si());
        if (lo[i] > hi[i]) return out;
    }
    std::vector<long> cur = lo;
    while (true) {
        std::vector<Rational> pt(n);
        for (size_t i = 0; i < n; ++i) pt[i] = Rational(cur[i]);
        if (region.contains(pt)) out.push_back(cur);
        size_t i = n;
        while (i > 0 && cur[i - 1] == hi[i - 1]) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (size_t j = i; j < n; ++j) cur[j] = lo[j];
    }
    return out;
}

}  // namespace cypair
