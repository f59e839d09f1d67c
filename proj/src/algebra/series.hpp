#pragma once

#include "algebra/ratfunc.hpp"

namespace cypair {

// Truncated multivariate power series: all stored terms have total degree
// strictly below `order`. Lives over a (typically rank-0 chart) ring.
class TruncSeries {
public:
    TruncSeries(RingPtr ring, long order) : ring_(std::move(ring)), order_(order) {
        if (order_ < 0) throw math_error("negative truncation order");
    }
    static TruncSeries from_poly(const Poly& p, long order);
    static TruncSeries constant(const RingPtr& ring, long order, const Rational& c);
    static TruncSeries variable(const RingPtr& ring, long order, size_t var);

    const RingPtr& ring() const { return ring_; }
    long order() const { return order_; }
    const Poly::TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Lowest total degree of a nonzero term; order() when zero (meaning
    // "vanishes to truncation order").
    long valuation() const;
    Poly homogeneous_part(long degree) const;
    Poly to_poly() const;
    Rational coeff(const Mono& m) const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries scaled(const Rational& c) const;
    TruncSeries pow(long n) const;

    // Multiplicative inverse; requires nonzero constant term.
    TruncSeries inverse() const;
    // Square root with rational coefficients; requires the constant term to
    // be 1 (callers normalize units separately).
    TruncSeries sqrt_unit() const;

    // Substitute series for variables (unbound variables map to themselves);
    // every substituted series must have zero constant term unless the
    // variable itself no longer occurs.
    TruncSeries substitute_vars(const std::map<size_t, TruncSeries>& bindings) const;

    void add_term(const Mono& m, const Rational& c);

private:
    RingPtr ring_;
    long order_;
    Poly::TermMap terms_;
};

// Taylor expansion of f at a rational center, truncated below `order`.
// The denominator must not vanish at the center; f must be atom-free.
TruncSeries series_expand(const RatFunc& f, const std::vector<Rational>& center, long order);

}  // namespace cypair
