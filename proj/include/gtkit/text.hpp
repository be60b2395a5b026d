#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace gtkit {

namespace detail {

// Signed display support: over Q a negative coefficient prints behind a
// minus sign; prime-field residues are never negative.
inline bool display_negative(const QField&, const Rational& c) { return c.sign() < 0; }
inline Rational display_abs(const QField&, const Rational& c) {
    return c.sign() < 0 ? -c : c;
}
inline bool display_negative(const PrimeField&, std::uint32_t) { return false; }
inline std::uint32_t display_abs(const PrimeField&, std::uint32_t c) { return c; }

} // namespace detail

// Canonical text form: terms in descending monomial order, " + " / " - "
// separators, "^" for powers, "*" between factors, unit coefficients
// omitted.  Examples: "x11^2 + 2*x12*x21 + x22^2", "-1/2*x11", "0".
template <CoefficientField F>
std::string to_string(const Polynomial<F>& p) {
    if (p.is_zero()) return "0";
    const F& f = p.field();
    const auto& ring = *p.ring();
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool neg = detail::display_negative(f, t.c);
        const auto mag = detail::display_abs(f, t.c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < ring.nvars(); ++i) {
            const int e = t.m[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring.name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        const bool unit = f.is_zero(f.sub(mag, f.one()));
        if (mono.empty()) {
            out += f.to_string(mag);
        } else if (unit) {
            out += mono;
        } else {
            out += f.to_string(mag) + "*" + mono;
        }
    }
    return out;
}

namespace detail {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

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

    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits at position " + std::to_string(start) +
                                           " in '" + s + "'");
        return s.substr(start, pos - start);
    }

    // "n" or "n/d"
    std::string number() {
        std::string n = digits();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            n += "/" + digits();
        }
        return n;
    }

    // variable names: a letter followed by letters, digits or underscores
    std::string name() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected variable name at position " + std::to_string(start) +
                             " in '" + s + "'");
        ++pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

} // namespace detail

// Parses the canonical text form back into a polynomial over the given
// ring.  Round-trips exactly: parse(ring, to_string(p)) == p.
template <CoefficientField F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, const std::string& text) {
    detail::Lexer lx{text};
    const F& f = ring->field();
    using Term = typename Polynomial<F>::Term;
    std::vector<Term> terms;

    if (lx.eof()) throw ParseError("empty polynomial text");

    bool negative = false;
    if (lx.consume('-'))
        negative = true;
    else
        lx.consume('+');

    for (;;) {
        // one term: optional number, then optional variable factors
        auto coef = f.one();
        bool saw_any = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coef = f.from_rational(Rational::from_string(lx.number()));
            saw_any = true;
            if (!lx.consume('*')) {
                // bare constant term
                Monomial m;
                if (negative) coef = f.neg(coef);
                terms.push_back(Term{m, coef});
                goto next_term;
            }
        }
        {
            Monomial m;
            for (;;) {
                const std::string nm = lx.name();
                const int id = ring->find_name(nm);
                if (id < 0)
                    throw ParseError("unknown variable '" + nm + "' in '" + text + "'");
                int exp = 1;
                if (lx.consume('^')) {
                    exp = std::stoi(lx.digits());
                    if (exp <= 0 || exp > 255) throw ParseError("exponent out of range in '" + text + "'");
                }
                m.set(id, m[id] + exp);
                saw_any = true;
                if (!lx.consume('*')) break;
                // a '*' may be followed by another variable only (numbers lead)
            }
            if (!saw_any) throw ParseError("empty term in '" + text + "'");
            if (negative) coef = f.neg(coef);
            terms.push_back(Term{m, coef});
        }

    next_term:
        if (lx.eof()) break;
        if (lx.consume('+'))
            negative = false;
        else if (lx.consume('-'))
            negative = true;
        else
            throw ParseError("expected '+' or '-' at position " + std::to_string(lx.pos) +
                             " in '" + text + "'");
        if (lx.eof()) throw ParseError("dangling sign in '" + text + "'");
    }

    return Polynomial<F>::from_terms(ring, std::move(terms));
}

} // namespace gtkit
