#pragma once

#include "algebra/ratfunc.hpp"

#include <string>

namespace cypair {

struct parse_error : math_error {
    size_t position;
    parse_error(const std::string& what, size_t pos)
        : math_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// Expression grammar: identifiers, integer literals, + - * / ^, parentheses;
// ^ binds tightest, unary minus allowed, whitespace insignificant.
RatFunc ratfunc_parse(const std::string& text, const RingPtr& ring);

// As above but the result must be polynomial.
Poly poly_parse(const std::string& text, const RingPtr& ring);

std::string to_string(const Poly& p);
std::string to_string(const RatFunc& f);
std::string to_string(const Rational& q);

}  // namespace cypair
