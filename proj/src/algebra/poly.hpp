#pragma once

#include "algebra/ring.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace cypair {

// Exponent vector over all ring symbols (variables first, then atoms).
struct Mono {
    std::vector<int> e;

    long total_degree() const {
        long d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool is_one() const {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

// Graded-lexicographic, highest term first: variables in declared order,
// atoms after variables.
struct MonoGrlexDesc {
    bool operator()(const Mono& a, const Mono& b) const {
        long da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.e > b.e;
    }
};

class Poly {
public:
    using TermMap = std::map<Mono, Rational, MonoGrlexDesc>;

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const Rational& c);
    static Poly symbol(RingPtr ring, size_t index, int power = 1);
    static Poly monomial(RingPtr ring, Mono m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    Rational constant_value() const;
    size_t term_count() const { return terms_.size(); }

    const Mono& leading_mono() const;
    const Rational& leading_coeff() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly scaled(const Rational& c) const;
    Poly pow(long n) const;
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Degree bookkeeping.
    long degree_in(size_t symbol) const;
    long total_degree() const;  // max over terms; -1 for zero
    std::optional<std::vector<long>> multidegree_opt() const;
    std::vector<long> multidegree_checked() const;  // throws on zero / inhomogeneous
    bool is_homogeneous() const { return !is_zero() && multidegree_opt().has_value(); }
    std::set<size_t> support_symbols() const;
    bool contains_symbol(size_t symbol) const;
    bool has_atoms() const;

    // View as a univariate polynomial in `symbol` with Poly coefficients.
    std::map<long, Poly> coeffs_in(size_t symbol) const;
    static Poly assemble_in(size_t symbol, const std::map<long, Poly>& coeffs, const RingPtr& ring);

    // d/dvar. Throws if an atom depending on the variable occurs.
    Poly derivative(size_t var) const;

    // Substitute 1 for each variable in `vars`; throws if an atom has an
    // argument in the set (its dehomogenized meaning would change).
    Poly substitute_ones(const std::set<size_t>& vars) const;

    // Replace atoms by concrete polynomials (indexed by symbol index).
    Poly specialize_atoms(const std::map<size_t, Poly>& values) const;

    // Evaluate at a rational point (values for all variables); requires the
    // polynomial to be atom-free.
    Rational eval(const std::vector<Rational>& point) const;

    // Integer-primitive, positive leading coefficient rescale (unit multiple).
    Poly normalized_primitive() const;
    // The positive rational c with (*this) = c * normalized_primitive().
    Rational content_rational() const;

    void add_term(const Mono& m, const Rational& c);

private:
    RingPtr ring_;
    TermMap terms_;
};

// Exact division: returns q with a = q*b, or nullopt.
std::optional<Poly> exact_div(const Poly& a, const Poly& b);

// Divide out b from a as many times as it exactly divides; returns the
// saturated polynomial and the multiplicity removed.
std::pair<Poly, int> divide_out(const Poly& a, const Poly& b);

// GCD (primitive PRS), normalized integer-primitive with positive leading
// coefficient; gcd(p, 0) = normalized p.
Poly poly_gcd(const Poly& a, const Poly& b);

// Pseudo-remainder and pseudo-quotient of a by b in `symbol`:
// lc(b)^k * a = pquo * b + prem  with deg_symbol(prem) < deg_symbol(b),
// k = max(deg_symbol(a) - deg_symbol(b) + 1, 0).
struct PseudoDivision {
    Poly quotient;
    Poly remainder;
    Poly multiplier;  // lc(b)^k
};
PseudoDivision pseudo_divide(const Poly& a, const Poly& b, size_t symbol);

// Pseudo-remainder with a fixed number of multiplier steps:
// lc(b)^steps * a = q*b + r with deg_symbol(r) < deg_symbol(b) whenever
// steps >= deg_symbol(a) - deg_symbol(b) + 1. Linear in `a` for fixed steps.
Poly pseudo_rem_fixed(const Poly& a, const Poly& b, size_t symbol, long steps);

// True iff a = c*b for a nonzero rational c (both nonzero); c reported.
std::optional<Rational> proportional_scalar(const Poly& a, const Poly& b);

}  // namespace cypair
