#include "algebra/parse.hpp"

#include <cctype>
#include <sstream>

namespace cypair {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

struct Parser {
    Lexer lex;
    RingPtr ring;

    Parser(const std::string& text, RingPtr r) : lex(text), ring(std::move(r)) {}

    RatFunc parse() {
        RatFunc e = expr();
        if (!lex.eof()) throw parse_error("unexpected trailing input", lex.pos);
        return e;
    }

    RatFunc expr() {
        RatFunc acc = term();
        while (true) {
            if (lex.accept('+')) acc = acc + term();
            else if (lex.accept('-')) acc = acc - term();
            else return acc;
        }
    }

    RatFunc term() {
        RatFunc acc = factor();
        while (true) {
            if (lex.accept('*')) acc = acc * factor();
            else if (lex.accept('/')) {
                size_t at = lex.pos;
                RatFunc d = factor();
                if (d.is_zero()) throw parse_error("division by zero", at);
                acc = acc / d;
            } else
                return acc;
        }
    }

    RatFunc factor() {
        if (lex.accept('-')) return -factor();
        return power();
    }

    RatFunc power() {
        RatFunc base = primary();
        if (lex.accept('^')) {
            size_t at = lex.pos;
            bool neg = lex.accept('-');
            long e = integer_literal();
            if (neg) throw parse_error("negative exponent", at);
            return base.pow(e);
        }
        return base;
    }

    long integer_literal() {
        lex.skip_ws();
        size_t at = lex.pos;
        std::string digits;
        while (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
            digits += lex.s[lex.pos++];
        if (digits.empty()) throw parse_error("expected integer", at);
        return std::stol(digits);
    }

    RatFunc primary() {
        lex.skip_ws();
        size_t at = lex.pos;
        if (lex.accept('(')) {
            RatFunc e = expr();
            if (!lex.accept(')')) throw parse_error("expected ')'", lex.pos);
            return e;
        }
        char c = lex.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (lex.pos < lex.s.size() &&
                   std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
                digits += lex.s[lex.pos++];
            return RatFunc::constant(ring, Rational(Int(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (lex.pos < lex.s.size() &&
                   (std::isalnum(static_cast<unsigned char>(lex.s[lex.pos])) ||
                    lex.s[lex.pos] == '_'))
                name += lex.s[lex.pos++];
            auto idx = ring->find_symbol(name);
            if (!idx) throw parse_error("unknown identifier '" + name + "'", at);
            return RatFunc(Poly::symbol(ring, *idx));
        }
        throw parse_error("unexpected character", at);
    }
};

}  // namespace

RatFunc ratfunc_parse(const std::string& text, const RingPtr& ring) {
    Parser p(text, ring);
    return p.parse();
}

Poly poly_parse(const std::string& text, const RingPtr& ring) {
    RatFunc f = ratfunc_parse(text, ring);
    if (!f.is_poly())
        throw parse_error("expression is not polynomial (denominator " + to_string(f.den()) + ")",
                          0);
    Rational c = f.den().constant_value();
    return f.num().scaled(c.inverse());
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a.is_negative()) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            if (a.is_negative()) {
                out << " - ";
                a = -a;
            } else {
                out << " + ";
            }
        }
        bool coeff_printed = false;
        if (m.is_one() || a != Rational(1)) {
            out << a.str();
            coeff_printed = true;
        }
        bool any = false;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (coeff_printed || any) out << "*";
            out << p.ring()->symbol_name(i);
            if (m.e[i] > 1) out << "^" << m.e[i];
            any = true;
        }
    }
    return out.str();
}

std::string to_string(const RatFunc& f) {
    if (f.is_poly()) {
        Rational c = f.den().constant_value();
        if (c == Rational(1)) return to_string(f.num());
        return "(" + to_string(f.num()) + ")/" + c.str();
    }
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace cypair
