#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "geobucket.hpp"
#include "polynomial.hpp"

namespace gtkit {

// Canonical generator scaling: primitive integer coefficients with positive
// leading coefficient over Q, monic over a prime field.  Keeping every basis
// element in this form bounds coefficient growth during reduction and makes
// reduced bases comparable across runs.
template <CoefficientField F>
Polynomial<F> normalize_generator(const Polynomial<F>& p) {
    if (p.is_zero()) return p;
    if constexpr (std::is_same_v<F, QField>) {
        mpz_class den_lcm = 1;
        mpz_class num_gcd = 0;
        for (const auto& t : p.terms()) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.den().get_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.num().get_mpz_t());
        }
        mpq_class q(den_lcm);
        q /= mpq_class(num_gcd);
        Rational scale{q};
        if ((p.leading().c * scale).sign() < 0) scale = -scale;
        return p.scaled(scale);
    } else {
        return p.scaled(p.ring()->field().inv(p.leading().c));
    }
}

// Fully reduces f modulo the given polynomials: no term of the result is
// divisible by any reducer's leading monomial.  Reducers are scanned in list
// order, which keeps runs deterministic; when the list is a Groebner basis
// the result is the canonical normal form regardless of that choice.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f,
                          const std::vector<Polynomial<F>>& reducers,
                          BudgetGuard* guard = nullptr) {
    if (f.is_zero()) return f;
    const RingPtr<F>& ring = f.ring();
    for (const auto& g : reducers) require_same_ring(ring, g.ring());
    const auto& field = ring->field();
    const int nv = ring->nvars();
    Geobucket<F> acc(ring);
    acc.add(f);
    PolyBuilder<F> out(ring);
    std::uint64_t steps = 0;
    while (acc.normalize_leading()) {
        const auto& head = acc.leading();
        const Polynomial<F>* red = nullptr;
        for (const auto& g : reducers) {
            if (!g.is_zero() && g.leading().m.divides(head.m, nv)) {
                red = &g;
                break;
            }
        }
        if (red == nullptr) {
            auto t = acc.pop_leading();
            out.append(t.m, t.c);
            continue;
        }
        auto t = acc.pop_leading();
        const Monomial u = Monomial::div(t.m, red->leading().m, nv);
        const auto c = field.mul(t.c, field.inv(red->leading().c));
        acc.add_scaled(*red, u, field.neg(c), /*skip_leading=*/true);
        if (guard != nullptr && ((++steps & 0x3FF) == 0)) guard->check_time();
    }
    return out.take();
}

// Exact division f / d; throws DomainError when d does not divide f.  Used
// by the ideal quotient, where divisibility is guaranteed by construction.
template <CoefficientField F>
Polynomial<F> divide_exact(const Polynomial<F>& f, const Polynomial<F>& d,
                           BudgetGuard* guard = nullptr) {
    const RingPtr<F>& ring = f.ring();
    require_same_ring(ring, d.ring());
    if (d.is_zero()) throw DomainError("divide_exact: division by zero polynomial");
    if (f.is_zero()) return f;
    const auto& field = ring->field();
    const int nv = ring->nvars();
    Geobucket<F> acc(ring);
    acc.add(f);
    PolyBuilder<F> out(ring);
    std::uint64_t steps = 0;
    while (acc.normalize_leading()) {
        auto t = acc.pop_leading();
        if (!d.leading().m.divides(t.m, nv)) {
            throw DomainError("divide_exact: operand is not divisible");
        }
        const Monomial u = Monomial::div(t.m, d.leading().m, nv);
        const auto c = field.mul(t.c, field.inv(d.leading().c));
        out.append(u, c);
        acc.add_scaled(d, u, field.neg(c), /*skip_leading=*/true);
        if (guard != nullptr && ((++steps & 0x3FF) == 0)) guard->check_time();
    }
    return out.take();
}

// S-polynomial with cross-scaled leading coefficients; the two head terms
// cancel by construction and never enter the accumulator.
template <CoefficientField F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
    const RingPtr<F>& ring = f.ring();
    require_same_ring(ring, g.ring());
    if (f.is_zero() || g.is_zero()) throw DomainError("s_polynomial: zero operand");
    const auto& field = ring->field();
    const int nv = ring->nvars();
    const Monomial l = Monomial::lcm(f.leading().m, g.leading().m, nv);
    const Monomial uf = Monomial::div(l, f.leading().m, nv);
    const Monomial ug = Monomial::div(l, g.leading().m, nv);
    Geobucket<F> acc(ring);
    acc.add_scaled(f, uf, g.leading().c, /*skip_leading=*/true);
    acc.add_scaled(g, ug, field.neg(f.leading().c), /*skip_leading=*/true);
    return acc.take();
}

namespace detail {

// Total order on polynomials used only to make input seeding deterministic.
template <CoefficientField F>
bool polynomial_less(const Polynomial<F>& a, const Polynomial<F>& b) {
    const auto& ring = a.ring();
    const auto& ord = ring->order();
    const int nv = ring->nvars();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    const std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = ord.compare(ta[i].m, tb[i].m, nv);
        if (c != 0) return c < 0;
        if (!ring->field().eq(ta[i].c, tb[i].c)) {
            return ring->field().to_string(ta[i].c) < ring->field().to_string(tb[i].c);
        }
    }
    return ta.size() < tb.size();
}

}  // namespace detail

// Buchberger's algorithm with the Gebauer-Moeller pair update and the normal
// selection strategy (lowest lcm degree, then lcm order, then indices).  The
// result is the unique reduced Groebner basis, sorted ascending by leading
// monomial.  Throws BudgetExceeded when the pair or time budget runs out.
template <CoefficientField F>
std::vector<Polynomial<F>> groebner_basis(const RingPtr<F>& ring,
                                          const std::vector<Polynomial<F>>& input,
                                          BudgetGuard& guard) {
    const auto& ord = ring->order();
    const int nv = ring->nvars();

    struct Pair {
        int i;
        int j;
        Monomial l;
    };

    std::vector<Polynomial<F>> basis;
    std::vector<Pair> pairs;

    auto lm = [&](int i) -> const Monomial& {
        return basis[static_cast<std::size_t>(i)].leading().m;
    };

    // Gebauer-Moeller update: prune the new pairs against each other, drop
    // coprime ones (Buchberger's first criterion), then prune old pairs whose
    // lcm factors strictly through the newcomer.
    auto update = [&](Polynomial<F>&& h) {
        const int t = static_cast<int>(basis.size());
        const Monomial& lmh = h.leading().m;
        std::vector<Pair> fresh;
        fresh.reserve(static_cast<std::size_t>(t));
        for (int g = 0; g < t; ++g) {
            fresh.push_back(Pair{g, t, Monomial::lcm(lm(g), lmh, nv)});
        }
        std::vector<Pair> kept;
        for (int a = 0; a < t; ++a) {
            bool drop = false;
            if (!Monomial::coprime(lm(a), lmh)) {
                for (int b = a + 1; b < t && !drop; ++b) {
                    if (fresh[static_cast<std::size_t>(b)].l.divides(
                            fresh[static_cast<std::size_t>(a)].l, nv)) {
                        drop = true;
                    }
                }
                for (const auto& d : kept) {
                    if (drop) break;
                    if (d.l.divides(fresh[static_cast<std::size_t>(a)].l, nv)) {
                        drop = true;
                    }
                }
            }
            if (!drop) kept.push_back(fresh[static_cast<std::size_t>(a)]);
        }
        std::vector<Pair> next;
        next.reserve(pairs.size() + kept.size());
        for (const auto& pr : pairs) {
            const bool covered =
                lmh.divides(pr.l, nv) &&
                !Monomial::equal(Monomial::lcm(lm(pr.i), lmh, nv), pr.l, nv) &&
                !Monomial::equal(Monomial::lcm(lm(pr.j), lmh, nv), pr.l, nv);
            if (!covered) next.push_back(pr);
        }
        for (const auto& pr : kept) {
            if (!Monomial::coprime(lm(pr.i), lmh)) next.push_back(pr);
        }
        pairs = std::move(next);
        basis.push_back(std::move(h));
    };

    // Deterministic seeding: normalized nonzero inputs, sorted and deduped.
    std::vector<Polynomial<F>> seed;
    seed.reserve(input.size());
    for (const auto& f : input) {
        require_same_ring(ring, f.ring());
        if (!f.is_zero()) seed.push_back(normalize_generator(f));
    }
    std::sort(seed.begin(), seed.end(), detail::polynomial_less<F>);
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());

    auto unit_basis = [&]() {
        std::vector<Polynomial<F>> one;
        one.push_back(Polynomial<F>::one(ring));
        return one;
    };

    for (const auto& f : seed) {
        Polynomial<F> h = normal_form(f, basis, &guard);
        if (h.is_zero()) continue;
        h = normalize_generator(h);
        if (h.is_constant()) return unit_basis();
        update(std::move(h));
    }

    while (!pairs.empty()) {
        guard.on_pair();
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const auto& a = pairs[k];
            const auto& b = pairs[best];
            if (a.l.deg != b.l.deg) {
                if (a.l.deg < b.l.deg) best = k;
                continue;
            }
            const int c = ord.compare(a.l, b.l, nv);
            if (c != 0) {
                if (c < 0) best = k;
                continue;
            }
            if (a.i != b.i ? a.i < b.i : a.j < b.j) best = k;
        }
        const Pair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        Polynomial<F> h = normal_form(
            s_polynomial(basis[static_cast<std::size_t>(pr.i)],
                         basis[static_cast<std::size_t>(pr.j)]),
            basis, &guard);
        if (h.is_zero()) continue;
        h = normalize_generator(h);
        if (h.is_constant()) return unit_basis();
        update(std::move(h));
    }

    // Minimalize: ascending by leading monomial, keep only heads that no
    // earlier kept head divides (divisibility implies order, so one pass).
    std::vector<int> by_lm(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) by_lm[i] = static_cast<int>(i);
    std::sort(by_lm.begin(), by_lm.end(), [&](int a, int b) {
        const int c = ord.compare(lm(a), lm(b), nv);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<Polynomial<F>> minimal;
    for (const int idx : by_lm) {
        bool redundant = false;
        for (const auto& g : minimal) {
            if (g.leading().m.divides(lm(idx), nv)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[static_cast<std::size_t>(idx)]);
    }

    // Full tail reduction against the other survivors yields the reduced
    // basis; leading monomials are pairwise indivisible so they are stable.
    std::vector<Polynomial<F>> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<F>> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        reduced.push_back(normalize_generator(normal_form(minimal[i], others, &guard)));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
        return ord.compare(a.leading().m, b.leading().m, nv) < 0;
    });
    return reduced;
}

template <CoefficientField F>
std::vector<Polynomial<F>> groebner_basis(const RingPtr<F>& ring,
                                          const std::vector<Polynomial<F>>& input,
                                          const Budget& budget = Budget::defaults(),
                                          const char* where = "groebner") {
    BudgetGuard guard(budget, where);
    return groebner_basis(ring, input, guard);
}

// A finitely generated ideal with a cached reduced Groebner basis.  Instances
// are not synchronized; concurrent verifications each build their own.
template <CoefficientField F>
class Ideal {
public:
    Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {
        for (const auto& g : gens_) require_same_ring(ring_, g.ring());
    }

    static Ideal zero(RingPtr<F> ring) { return Ideal(std::move(ring), {}); }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Polynomial<F>>& generators() const { return gens_; }

    const std::vector<Polynomial<F>>& groebner(const Budget& budget = Budget::defaults()) const {
        if (!gb_) gb_ = groebner_basis(ring_, gens_, budget, "groebner");
        return *gb_;
    }

    Polynomial<F> normal_form(const Polynomial<F>& f,
                              const Budget& budget = Budget::defaults()) const {
        BudgetGuard guard(budget, "normal_form");
        return gtkit::normal_form(f, groebner(budget), &guard);
    }

    bool contains(const Polynomial<F>& f, const Budget& budget = Budget::defaults()) const {
        return normal_form(f, budget).is_zero();
    }

    bool is_unit(const Budget& budget = Budget::defaults()) const {
        const auto& gb = groebner(budget);
        return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
    }

    bool is_zero_ideal(const Budget& budget = Budget::defaults()) const {
        return groebner(budget).empty();
    }

    // Extends the generator list; any cached basis is dropped.
    Ideal plus(std::vector<Polynomial<F>> more) const {
        std::vector<Polynomial<F>> gens = gens_;
        for (auto& f : more) gens.push_back(std::move(f));
        return Ideal(ring_, std::move(gens));
    }

private:
    RingPtr<F> ring_;
    std::vector<Polynomial<F>> gens_;
    mutable std::optional<std::vector<Polynomial<F>>> gb_;
};

// Reduced bases are canonical, so ideal equality is basis-list equality.
template <CoefficientField F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b,
                 const Budget& budget = Budget::defaults()) {
    require_same_ring(a.ring(), b.ring());
    const auto& ga = a.groebner(budget);
    const auto& gb = b.groebner(budget);
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i) {
        if (!(ga[i] == gb[i])) return false;
    }
    return true;
}

}  // namespace gtkit
