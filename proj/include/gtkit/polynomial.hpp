#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace gtkit {

// Sparse multivariate polynomial over a shared ring.  Terms are kept
// strictly sorted, largest monomial first under the ring's order, with no
// zero coefficients; every constructor and operation maintains this.
template <CoefficientField F>
class Polynomial {
public:
    using Elem = typename F::Elem;

    struct Term {
        Monomial m;
        Elem c;
    };

    Polynomial() = default;

    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr<F> ring, Elem c) {
        Polynomial p(std::move(ring));
        if (!p.field().is_zero(c)) p.terms_.push_back(Term{Monomial::one(), std::move(c)});
        return p;
    }

    static Polynomial one(RingPtr<F> ring) {
        auto f = ring->field();
        return constant(std::move(ring), f.one());
    }

    static Polynomial variable(RingPtr<F> ring, int var_id, int exp = 1) {
        if (var_id < 0 || var_id >= ring->nvars())
            throw DomainError("variable id out of range");
        Polynomial p(std::move(ring));
        if (exp == 0) return one(p.ring_);
        p.terms_.push_back(Term{Monomial::var(var_id, exp), p.field().one()});
        return p;
    }

    // Builds a polynomial from arbitrary (monomial, coefficient) pairs:
    // sorts, combines duplicates, drops zeros.
    static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> raw) {
        Polynomial p(std::move(ring));
        const int nv = p.ring_->nvars();
        const MonomialOrder& ord = p.ring_->order();
        std::sort(raw.begin(), raw.end(), [&](const Term& a, const Term& b) {
            return ord.compare(a.m, b.m, nv) > 0;
        });
        const F& f = p.field();
        for (Term& t : raw) {
            if (!p.terms_.empty() && Monomial::equal(p.terms_.back().m, t.m, nv)) {
                p.terms_.back().c = f.add(p.terms_.back().c, t.c);
                if (f.is_zero(p.terms_.back().c)) p.terms_.pop_back();
            } else if (!f.is_zero(t.c)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const F& field() const { return ring_->field(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
    }

    const Term& leading() const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        return terms_.front();
    }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
        return d;
    }

    friend Polynomial operator-(const Polynomial& p) {
        Polynomial r(p.ring_);
        r.terms_.reserve(p.terms_.size());
        const F& f = p.field();
        for (const Term& t : p.terms_) r.terms_.push_back(Term{t.m, f.neg(t.c)});
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, /*negate_b=*/false);
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, /*negate_b=*/true);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        const int nv = a.ring_->nvars();
        const F& f = a.field();
        std::vector<Term> raw;
        raw.reserve(a.terms_.size() * b.terms_.size());
        for (const Term& s : a.terms_)
            for (const Term& t : b.terms_)
                raw.push_back(Term{Monomial::mul(s.m, t.m, nv), f.mul(s.c, t.c)});
        return from_terms(a.ring_, std::move(raw));
    }

    Polynomial scaled(const Elem& c) const {
        const F& f = field();
        if (f.is_zero(c)) return zero(ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.push_back(Term{t.m, f.mul(t.c, c)});
        return r;
    }

    // Multiplication by a single term.  Monomial orders are compatible with
    // multiplication, so sortedness is preserved.
    Polynomial times_term(const Monomial& m, const Elem& c) const {
        const F& f = field();
        if (f.is_zero(c)) return zero(ring_);
        const int nv = ring_->nvars();
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_)
            r.terms_.push_back(Term{Monomial::mul(t.m, m, nv), f.mul(t.c, c)});
        return r;
    }

    Polynomial pow(int e) const {
        if (e < 0) throw DomainError("negative polynomial power");
        Polynomial r = one(ring_);
        Polynomial base = *this;
        while (e) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
        const int nv = a.ring_->nvars();
        const F& f = a.field();
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!Monomial::equal(a.terms_[i].m, b.terms_[i].m, nv) ||
                !f.eq(a.terms_[i].c, b.terms_[i].c))
                return false;
        return true;
    }

    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool negate_b) {
        require_same_ring(a.ring_, b.ring_);
        const int nv = a.ring_->nvars();
        const MonomialOrder& ord = a.ring_->order();
        const F& f = a.field();
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            const int c = ord.compare(a.terms_[i].m, b.terms_[j].m, nv);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                const Term& t = b.terms_[j++];
                r.terms_.push_back(Term{t.m, negate_b ? f.neg(t.c) : t.c});
            } else {
                Elem s = negate_b ? f.sub(a.terms_[i].c, b.terms_[j].c)
                                  : f.add(a.terms_[i].c, b.terms_[j].c);
                if (!f.is_zero(s)) r.terms_.push_back(Term{a.terms_[i].m, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            const Term& t = b.terms_[j];
            r.terms_.push_back(Term{t.m, negate_b ? f.neg(t.c) : t.c});
        }
        return r;
    }

    RingPtr<F> ring_;
    std::vector<Term> terms_;

    template <CoefficientField G>
    friend class PolyBuilder;
};

// Incremental construction in descending monomial order (used by kernels
// that produce terms already sorted).
template <CoefficientField F>
class PolyBuilder {
public:
    explicit PolyBuilder(RingPtr<F> ring) : p_(std::move(ring)) {}

    void append(const Monomial& m, typename F::Elem c) {
        p_.terms_.push_back(typename Polynomial<F>::Term{m, std::move(c)});
    }

    Polynomial<F> take() { return std::move(p_); }

private:
    Polynomial<F> p_;
};

// --- structural operations ------------------------------------------------

// The image of p under setting the listed variables to zero, in the same
// ring: terms meeting any listed variable are dropped.
template <CoefficientField F>
Polynomial<F> substitute_zero(const Polynomial<F>& p, const std::vector<int>& var_ids) {
    std::uint64_t kill = 0;
    for (int v : var_ids) {
        if (v < 0 || v >= p.ring()->nvars())
            throw DomainError("substitute_zero: variable id out of range");
        kill |= std::uint64_t{1} << v;
    }
    Polynomial<F> r = Polynomial<F>::zero(p.ring());
    std::vector<typename Polynomial<F>::Term> keep;
    for (const auto& t : p.terms())
        if ((t.m.mask & kill) == 0) keep.push_back(t);
    return Polynomial<F>::from_terms(p.ring(), std::move(keep));
}

// Homogeneity test.  The zero polynomial counts as homogeneous of degree 0.
template <CoefficientField F>
std::pair<bool, int> is_homogeneous(const Polynomial<F>& p) {
    if (p.is_zero()) return {true, 0};
    const auto d = p.terms().front().m.deg;
    for (const auto& t : p.terms())
        if (t.m.deg != d) return {false, -1};
    return {true, static_cast<int>(d)};
}

// Sum of the terms of maximal total degree (the leading form / top form).
template <CoefficientField F>
Polynomial<F> leading_form(const Polynomial<F>& p) {
    if (p.is_zero()) return p;
    std::uint32_t d = 0;
    for (const auto& t : p.terms()) d = std::max(d, t.m.deg);
    std::vector<typename Polynomial<F>::Term> keep;
    for (const auto& t : p.terms())
        if (t.m.deg == d) keep.push_back(t);
    return Polynomial<F>::from_terms(p.ring(), std::move(keep));
}

// Formal partial derivative with respect to one ring variable.
template <CoefficientField F>
Polynomial<F> derivative(const Polynomial<F>& p, int var_id) {
    if (var_id < 0 || var_id >= p.ring()->nvars())
        throw DomainError("derivative: variable id out of range");
    const F& f = p.field();
    std::vector<typename Polynomial<F>::Term> out;
    for (const auto& t : p.terms()) {
        const int e = t.m[var_id];
        if (e == 0) continue;
        auto c = f.mul(t.c, f.from_int(e));
        if (f.is_zero(c)) continue; // possible in finite characteristic
        Monomial m = t.m;
        m.set(var_id, e - 1);
        out.push_back(typename Polynomial<F>::Term{m, std::move(c)});
    }
    return Polynomial<F>::from_terms(p.ring(), std::move(out));
}

// Evaluation at a point given by one field element per ring variable.
template <CoefficientField F>
typename F::Elem evaluate(const Polynomial<F>& p, const std::vector<typename F::Elem>& point) {
    if (static_cast<int>(point.size()) != p.ring()->nvars())
        throw DomainError("evaluate: point has wrong length");
    const F& f = p.field();
    const int nv = p.ring()->nvars();
    auto acc = f.zero();
    for (const auto& t : p.terms()) {
        auto v = t.c;
        for (int i = 0; i < nv; ++i) {
            for (int e = t.m[i]; e > 0; --e) v = f.mul(v, point[static_cast<std::size_t>(i)]);
        }
        acc = f.add(acc, v);
    }
    return acc;
}

// Moves p into another ring over the same field.  Every variable that
// actually occurs must exist (by name) in the destination; the result is
// re-sorted under the destination order.  Used to embed subring elements
// into larger rings and to change the active order.
template <CoefficientField F>
Polynomial<F> transport(const Polynomial<F>& p, const RingPtr<F>& dst) {
    if (same_ring(p.ring(), dst)) return p;
    if (!(p.ring()->field() == dst->field()))
        throw RingMismatch("transport: source and destination fields differ");
    const int src_nv = p.ring()->nvars();
    std::vector<int> map(static_cast<std::size_t>(src_nv), -1);
    for (int i = 0; i < src_nv; ++i)
        map[static_cast<std::size_t>(i)] = dst->find_name(p.ring()->name(i));
    std::vector<typename Polynomial<F>::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m;
        for (int i = 0; i < src_nv; ++i) {
            const int e = t.m[i];
            if (e == 0) continue;
            const int j = map[static_cast<std::size_t>(i)];
            if (j < 0)
                throw DomainError("transport: variable " + p.ring()->name(i) +
                                  " is missing from the destination ring");
            m.set(j, e);
        }
        out.push_back(typename Polynomial<F>::Term{m, t.c});
    }
    return Polynomial<F>::from_terms(dst, std::move(out));
}

// Reduction of rational coefficients mod p.  Fails if any denominator is
// divisible by p.
inline Polynomial<PrimeField> mod_reduce(const Polynomial<QField>& p,
                                         const RingPtr<PrimeField>& dst) {
    if (dst->nvars() != p.ring()->nvars() || dst->names() != p.ring()->names())
        throw RingMismatch("mod_reduce: destination ring has different variables");
    const PrimeField& f = dst->field();
    std::vector<Polynomial<PrimeField>::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        const auto c = f.from_rational(t.c);
        if (c != 0) out.push_back(Polynomial<PrimeField>::Term{t.m, c});
    }
    return Polynomial<PrimeField>::from_terms(dst, std::move(out));
}

} // namespace gtkit
