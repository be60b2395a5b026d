#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace gtkit {

// Coefficient fields are small value types; the element representation is
// chosen per field (Rational for Q, a reduced residue for F_p).  All
// arithmetic goes through the field object so prime-field elements stay a
// bare uint32_t.
template <class F>
concept CoefficientField = requires(const F f, const typename F::Elem& a,
                                    const typename F::Elem& b) {
    typename F::Elem;
    { f.zero() } -> std::same_as<typename F::Elem>;
    { f.one() } -> std::same_as<typename F::Elem>;
    { f.add(a, b) } -> std::same_as<typename F::Elem>;
    { f.sub(a, b) } -> std::same_as<typename F::Elem>;
    { f.mul(a, b) } -> std::same_as<typename F::Elem>;
    { f.neg(a) } -> std::same_as<typename F::Elem>;
    { f.inv(a) } -> std::same_as<typename F::Elem>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.eq(a, b) } -> std::same_as<bool>;
    { f.from_int(long{}) } -> std::same_as<typename F::Elem>;
    { f.from_rational(Rational{}) } -> std::same_as<typename F::Elem>;
    { f.to_string(a) } -> std::same_as<std::string>;
    { f.name() } -> std::same_as<std::string>;
    { f.modular() } -> std::same_as<bool>;
};

// The rational numbers.  Exact; results over this field are labelled
// "exact" in certificates.
struct QField {
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return a.inv(); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return a.is_one(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_int(long n) const { return Rational(n); }
    Elem from_rational(const Rational& r) const { return r; }
    Elem parse(const std::string& s) const { return Rational::from_string(s); }
    std::string to_string(const Elem& a) const { return a.str(); }
    std::string name() const { return "Q"; }
    bool modular() const { return false; }

    friend bool operator==(const QField&, const QField&) { return true; }
};

// The prime field F_p for an odd prime p < 2^31.  Elements are reduced
// residues in [0, p); products go through 64-bit intermediates.  Results
// over this field are labelled "modular" in certificates.
class PrimeField {
public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 3 || p >= (1u << 31) || !probable_prime(p))
            throw DomainError("prime field characteristic must be an odd prime < 2^31, got " +
                              std::to_string(p));
    }

    std::uint32_t prime() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const {
        std::uint32_t s = a + b; // p < 2^31 so no unsigned overflow
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((std::uint64_t)a * b % p_);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("inverse of zero");
        return pow(a, p_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem from_int(long n) const {
        long r = n % static_cast<long>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    // n/d mod p; requires d coprime to p.
    Elem from_rational(const Rational& r) const {
        const mpz_class num = r.num(), den = r.den();
        const Elem d = from_mpz(den);
        if (d == 0)
            throw DomainError("rational " + r.str() + " has denominator divisible by " +
                              std::to_string(p_));
        return mul(from_mpz(num), inv(d));
    }

    Elem parse(const std::string& s) const { return from_rational(Rational::from_string(s)); }

    std::string to_string(Elem a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p_); }
    bool modular() const { return true; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        return a.p_ == b.p_;
    }

private:
    Elem pow(Elem base, std::uint32_t e) const {
        std::uint64_t acc = 1, b = base;
        while (e) {
            if (e & 1) acc = acc * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<Elem>(acc);
    }

    Elem from_mpz(const mpz_class& z) const {
        mpz_class r = z % p_;
        if (r < 0) r += p_;
        return static_cast<Elem>(r.get_ui());
    }

    static bool probable_prime(std::uint32_t p) {
        if (p % 2 == 0) return false;
        for (std::uint64_t q = 3; q * q <= p; q += 2)
            if (p % q == 0) return false;
        return true;
    }

    std::uint32_t p_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

} // namespace gtkit
