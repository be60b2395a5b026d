#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "errors.hpp"

namespace gtkit {

// Arbitrary-precision rational number.  Always kept in canonical form:
// reduced fraction, positive denominator, 0 represented as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit on purpose, mirrors int literals
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "n" and "n/d" with optional leading '-'.
    static Rational from_string(const std::string& s) {
        if (s.empty()) throw ParseError("empty rational literal");
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw ParseError("bad rational literal: '" + s + "'");
        if (v.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
        v.canonicalize();
        return Rational(std::move(v));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const {
        mpq_class r = -v_;
        return Rational(std::move(r));
    }

    Rational inv() const {
        if (is_zero()) throw DomainError("inverse of zero");
        mpq_class r = 1 / v_;
        return Rational(std::move(r));
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        mpq_class r = a.v_ + b.v_;
        return Rational(std::move(r));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        mpq_class r = a.v_ - b.v_;
        return Rational(std::move(r));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        mpq_class r = a.v_ * b.v_;
        return Rational(std::move(r));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DomainError("division by zero");
        mpq_class r = a.v_ / b.v_;
        return Rational(std::move(r));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    // Canonical text: "n" when the denominator is 1, otherwise "n/d".
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace gtkit
