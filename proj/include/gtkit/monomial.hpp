#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace gtkit {

// Hard cap on ring size: an 8x8 grid plus elimination auxiliaries fits
// comfortably, and a fixed-size exponent array keeps monomials POD.
inline constexpr int kMaxVars = 40;

// Exponent vector with cached total degree and support bitmask.  Variable
// indices follow the owning ring's priority order (index 0 is the largest
// variable).  All operations take the active variable count nv.
struct Monomial {
    std::uint32_t deg = 0;
    std::uint64_t mask = 0; // bit i set iff e[i] > 0
    std::array<std::uint8_t, kMaxVars> e{};

    static Monomial one() { return Monomial{}; }

    static Monomial var(int i, int exp = 1) {
        Monomial m;
        m.set(i, exp);
        return m;
    }

    int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

    void set(int i, int exp) {
        const auto idx = static_cast<std::size_t>(i);
        deg += static_cast<std::uint32_t>(exp) - e[idx];
        e[idx] = check_exp(exp);
        if (exp > 0)
            mask |= std::uint64_t{1} << i;
        else
            mask &= ~(std::uint64_t{1} << i);
    }

    bool is_one() const { return deg == 0; }

    bool divides(const Monomial& m, int nv) const {
        if (deg > m.deg || (mask & ~m.mask) != 0) return false;
        for (int i = 0; i < nv; ++i)
            if (e[static_cast<std::size_t>(i)] > m.e[static_cast<std::size_t>(i)])
                return false;
        return true;
    }

    static Monomial mul(const Monomial& a, const Monomial& b, int nv) {
        Monomial r;
        r.deg = a.deg + b.deg;
        r.mask = a.mask | b.mask;
        for (int i = 0; i < nv; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            r.e[idx] = check_exp(a.e[idx] + b.e[idx]);
        }
        return r;
    }

    // Requires b | a.
    static Monomial div(const Monomial& a, const Monomial& b, int nv) {
        Monomial r;
        r.deg = a.deg - b.deg;
        for (int i = 0; i < nv; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            r.e[idx] = static_cast<std::uint8_t>(a.e[idx] - b.e[idx]);
            if (r.e[idx]) r.mask |= std::uint64_t{1} << i;
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b, int nv) {
        Monomial r;
        std::uint32_t d = 0;
        for (int i = 0; i < nv; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            r.e[idx] = a.e[idx] > b.e[idx] ? a.e[idx] : b.e[idx];
            d += r.e[idx];
            if (r.e[idx]) r.mask |= std::uint64_t{1} << i;
        }
        r.deg = d;
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        return (a.mask & b.mask) == 0;
    }

    static bool equal(const Monomial& a, const Monomial& b, int nv) {
        if (a.deg != b.deg || a.mask != b.mask) return false;
        for (int i = 0; i < nv; ++i)
            if (a.e[static_cast<std::size_t>(i)] != b.e[static_cast<std::size_t>(i)])
                return false;
        return true;
    }

    std::size_t hash(int nv) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < nv; ++i) {
            h ^= e[static_cast<std::size_t>(i)];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

private:
    static std::uint8_t check_exp(long v) {
        if (v < 0 || v > 255) throw DomainError("monomial exponent out of range");
        return static_cast<std::uint8_t>(v);
    }
};

enum class OrderKind {
    DegRevLex, // graded reverse lexicographic (default)
    Lex,       // pure lexicographic
    Block,     // eliminate the first `block` variables: degrevlex on the
               // auxiliary block, then degrevlex on the rest
};

// A monomial order on the first nv variables of a ring.  compare() returns
// +1 when a is larger, -1 when smaller, 0 when equal.
struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    int block = 0; // number of leading variables in the eliminated block

    int compare(const Monomial& a, const Monomial& b, int nv) const {
        switch (kind) {
        case OrderKind::DegRevLex:
            if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
            return revlex_tie(a, b, 0, nv);
        case OrderKind::Lex:
            for (int i = 0; i < nv; ++i) {
                const auto idx = static_cast<std::size_t>(i);
                if (a.e[idx] != b.e[idx]) return a.e[idx] > b.e[idx] ? 1 : -1;
            }
            return 0;
        case OrderKind::Block: {
            if (int c = degrevlex(a, b, 0, block)) return c;
            return degrevlex(a, b, block, nv);
        }
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b, int nv) const {
        return compare(a, b, nv) > 0;
    }

    std::string name() const {
        switch (kind) {
        case OrderKind::DegRevLex: return "degrevlex";
        case OrderKind::Lex: return "lex";
        case OrderKind::Block: return "elim" + std::to_string(block);
        }
        return "?";
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && (a.kind != OrderKind::Block || a.block == b.block);
    }

private:
    // Degrevlex restricted to variables [lo, hi): higher degree wins; ties
    // go to the monomial whose *last* differing exponent is smaller.
    static int degrevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
        std::uint32_t da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a.e[static_cast<std::size_t>(i)];
            db += b.e[static_cast<std::size_t>(i)];
        }
        if (da != db) return da > db ? 1 : -1;
        return revlex_tie(a, b, lo, hi);
    }

    static int revlex_tie(const Monomial& a, const Monomial& b, int lo, int hi) {
        for (int i = hi - 1; i >= lo; --i) {
            const auto idx = static_cast<std::size_t>(i);
            if (a.e[idx] != b.e[idx]) return a.e[idx] < b.e[idx] ? 1 : -1;
        }
        return 0;
    }
};

} // namespace gtkit
