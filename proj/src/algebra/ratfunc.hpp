#pragma once

#include "algebra/poly.hpp"

#include <map>

namespace cypair {

// Quotient of polynomials, stored with numerator and denominator coprime and
// the denominator integer-primitive with positive leading coefficient.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(Poly p) : num_(std::move(p)) {
        den_ = Poly::constant(num_.ring(), 1);
    }
    RatFunc(Poly num, Poly den);

    static RatFunc zero(const RingPtr& ring) { return RatFunc(Poly::zero(ring)); }
    static RatFunc constant(const RingPtr& ring, const Rational& c) {
        return RatFunc(Poly::constant(ring, c));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }
    RatFunc pow(long n) const;

    // Structural equality of normal forms; agrees with cross-multiplication.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // num deg - den deg, when both are homogeneous.
    std::optional<std::vector<long>> multidegree_opt() const;

    RatFunc derivative(size_t var) const;

private:
    Poly num_, den_;
};

// Substitute bindings (by variable index of p's ring) into p. Every variable
// occurring in p, and every argument of every atom occurring in p, must be
// bound. Atom arguments must be bound to a common scaling s times the
// same-named variable of the binding ring; the atom pulls back to
// s^form_degree times the same-named atom of the binding ring.
RatFunc substitute(const Poly& p, const std::map<size_t, RatFunc>& bindings);
RatFunc substitute(const RatFunc& f, const std::map<size_t, RatFunc>& bindings);

// Bindings helper keyed by variable name; all values must share one ring.
std::map<size_t, RatFunc> bindings_by_name(const RingPtr& source,
                                           const std::map<std::string, RatFunc>& by_name);

}  // namespace cypair
