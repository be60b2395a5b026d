#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace gtkit {

// Geobucket accumulator for reduction-heavy polynomial arithmetic.  Terms are
// spread over buckets of geometrically growing capacity (bucket k holds at
// most 4^(k+1) terms) so that adding a short polynomial to a long accumulator
// costs time proportional to the short one.  Buckets store terms ascending,
// leading term at the back, which makes popping the head cheap.
template <CoefficientField F>
class Geobucket {
public:
    using Elem = typename F::Elem;
    using Term = typename Polynomial<F>::Term;

    explicit Geobucket(RingPtr<F> ring) : ring_(std::move(ring)) {}

    const RingPtr<F>& ring() const { return ring_; }

    void add(const Polynomial<F>& p) {
        if (p.is_zero()) return;
        require_same_ring(ring_, p.ring());
        flush_pending();
        std::vector<Term> asc(p.terms().rbegin(), p.terms().rend());
        insert(std::move(asc));
    }

    // Accumulates c * u * p.  When skip_leading is set the leading term of p
    // is left out: reduction and S-polynomial steps cancel it exactly against
    // terms that never enter the buckets, so skipping avoids the churn.
    void add_scaled(const Polynomial<F>& p, const Monomial& u, const Elem& c,
                    bool skip_leading) {
        require_same_ring(ring_, p.ring());
        const auto& field = ring_->field();
        if (p.is_zero() || field.is_zero(c)) return;
        flush_pending();
        const auto& ts = p.terms();
        const std::size_t stop = skip_leading ? 1 : 0;
        if (ts.size() <= stop) return;
        const int nv = ring_->nvars();
        std::vector<Term> asc;
        asc.reserve(ts.size() - stop);
        for (std::size_t i = ts.size(); i > stop; --i) {
            const Term& t = ts[i - 1];
            asc.push_back(Term{Monomial::mul(t.m, u, nv), field.mul(t.c, c)});
        }
        insert(std::move(asc));
    }

    // Collapses cancellations at the top and stages the true leading term.
    // Returns false once the accumulator is exhausted.
    bool normalize_leading() {
        if (pending_) return true;
        const auto& field = ring_->field();
        const auto& ord = ring_->order();
        const int nv = ring_->nvars();
        for (;;) {
            int best = -1;
            for (std::size_t k = 0; k < buckets_.size(); ++k) {
                if (buckets_[k].empty()) continue;
                if (best < 0 ||
                    ord.compare(buckets_[k].back().m,
                                buckets_[static_cast<std::size_t>(best)].back().m,
                                nv) > 0) {
                    best = static_cast<int>(k);
                }
            }
            if (best < 0) return false;
            auto& top = buckets_[static_cast<std::size_t>(best)];
            Monomial m = top.back().m;
            Elem c = top.back().c;
            top.pop_back();
            for (std::size_t k = 0; k < buckets_.size(); ++k) {
                if (static_cast<int>(k) == best) continue;
                auto& b = buckets_[k];
                if (!b.empty() && Monomial::equal(b.back().m, m, nv)) {
                    c = field.add(c, b.back().c);
                    b.pop_back();
                }
            }
            if (!field.is_zero(c)) {
                pending_ = Term{m, c};
                return true;
            }
        }
    }

    // Valid only after normalize_leading() returned true.
    const Term& leading() const { return *pending_; }

    Term pop_leading() {
        Term t = std::move(*pending_);
        pending_.reset();
        return t;
    }

    // Drains everything into a canonical polynomial.
    Polynomial<F> take() {
        flush_pending();
        std::vector<Term> all;
        for (auto& b : buckets_) {
            all = merge(std::move(all), std::move(b));
            b.clear();
        }
        buckets_.clear();
        PolyBuilder<F> out(ring_);
        for (std::size_t i = all.size(); i > 0; --i) {
            out.append(all[i - 1].m, all[i - 1].c);
        }
        return out.take();
    }

private:
    static std::size_t cap(std::size_t k) { return std::size_t{1} << (2 * (k + 1)); }

    void flush_pending() {
        if (!pending_) return;
        std::vector<Term> one;
        one.push_back(std::move(*pending_));
        pending_.reset();
        insert(std::move(one));
    }

    std::vector<Term> merge(std::vector<Term>&& a, std::vector<Term>&& b) const {
        if (a.empty()) return std::move(b);
        if (b.empty()) return std::move(a);
        const auto& field = ring_->field();
        const auto& ord = ring_->order();
        const int nv = ring_->nvars();
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.size() && j < b.size()) {
            const int c = ord.compare(a[i].m, b[j].m, nv);
            if (c < 0) {
                out.push_back(std::move(a[i++]));
            } else if (c > 0) {
                out.push_back(std::move(b[j++]));
            } else {
                Elem s = field.add(a[i].c, b[j].c);
                if (!field.is_zero(s)) out.push_back(Term{a[i].m, std::move(s)});
                ++i;
                ++j;
            }
        }
        while (i < a.size()) out.push_back(std::move(a[i++]));
        while (j < b.size()) out.push_back(std::move(b[j++]));
        return out;
    }

    void insert(std::vector<Term>&& terms) {
        if (terms.empty()) return;
        std::size_t k = 0;
        while (cap(k) < terms.size()) ++k;
        for (;;) {
            if (buckets_.size() <= k) buckets_.resize(k + 1);
            std::vector<Term> host = std::move(buckets_[k]);
            buckets_[k].clear();
            terms = merge(std::move(host), std::move(terms));
            if (terms.size() <= cap(k)) {
                buckets_[k] = std::move(terms);
                return;
            }
            ++k;
        }
    }

    RingPtr<F> ring_;
    std::vector<std::vector<Term>> buckets_;
    std::optional<Term> pending_;
};

}  // namespace gtkit
