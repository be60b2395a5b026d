#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "groebner.hpp"
#include "ringhom.hpp"

namespace gtkit {

// Ideal intersection via a single auxiliary variable t under an elimination
// order: I cap J is generated by the t-free elements of a Groebner basis of
// t*I + (1-t)*J.  The survivors are returned as plain generators of an ideal
// in the original ring (the eliminated order restricted to the base block
// need not equal the base ring's order, so no basis is carried over).
template <CoefficientField F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b,
                   const Budget& budget = Budget::defaults()) {
    require_same_ring(a.ring(), b.ring());
    const RingPtr<F>& base = a.ring();
    const RingPtr<F> ext = extend_with_aux(base, 1);
    const Polynomial<F> t = Polynomial<F>::variable(ext, 0);
    const Polynomial<F> one_minus_t = Polynomial<F>::one(ext) - t;
    std::vector<Polynomial<F>> gens;
    gens.reserve(a.generators().size() + b.generators().size());
    for (const auto& f : a.generators()) gens.push_back(t * transport(f, ext));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * transport(g, ext));
    const auto gb = groebner_basis(ext, gens, budget, "intersect");
    std::vector<Polynomial<F>> kept;
    for (const auto& p : gb) {
        if ((p.leading().m.mask & 1u) != 0) continue;
        kept.push_back(transport(p, base));
    }
    return Ideal<F>(base, std::move(kept));
}

// Ideal quotient (I : f) computed as (I cap (f)) / f, elementwise exact
// division.  f must be nonzero.
template <CoefficientField F>
Ideal<F> quotient(const Ideal<F>& ideal, const Polynomial<F>& f,
                  const Budget& budget = Budget::defaults()) {
    require_same_ring(ideal.ring(), f.ring());
    if (f.is_zero()) throw DomainError("quotient: divisor is the zero polynomial");
    Ideal<F> principal(ideal.ring(), {f});
    Ideal<F> meet = intersect(ideal, principal, budget);
    BudgetGuard guard(budget, "quotient");
    std::vector<Polynomial<F>> gens;
    gens.reserve(meet.generators().size());
    for (const auto& g : meet.generators()) {
        gens.push_back(divide_exact(g, f, &guard));
    }
    return Ideal<F>(ideal.ring(), std::move(gens));
}

// Radical membership: p lies in rad(I) iff 1 lies in I + (1 - t*p) in the
// ring extended by t (Rabinowitsch).  The plain normal-form test runs first;
// membership in I itself settles most queries this toolkit issues.
template <CoefficientField F>
bool radical_membership(const Polynomial<F>& p, const Ideal<F>& ideal,
                        const Budget& budget = Budget::defaults()) {
    require_same_ring(ideal.ring(), p.ring());
    if (p.is_zero()) return true;
    const auto& gb = ideal.groebner(budget);
    {
        BudgetGuard guard(budget, "radical_membership");
        if (normal_form(p, gb, &guard).is_zero()) return true;
    }
    const RingPtr<F> ext = extend_with_aux(ideal.ring(), 1);
    const Polynomial<F> t = Polynomial<F>::variable(ext, 0);
    std::vector<Polynomial<F>> gens;
    gens.reserve(gb.size() + 1);
    for (const auto& g : gb) gens.push_back(transport(g, ext));
    gens.push_back(Polynomial<F>::one(ext) - t * transport(p, ext));
    const auto ext_gb = groebner_basis(ext, gens, budget, "radical_membership");
    return ext_gb.size() == 1 && ext_gb.front().is_constant();
}

// Krull dimension of R/I via the leading-term ideal: the dimension equals
// nvars minus the size of a minimum hitting set of the minimal leading-term
// supports, and the complement of that hitting set is a maximal independent
// set of variables (the witness).
struct DimensionResult {
    int krull_dim = -1;               // -1 exactly for the unit ideal
    std::vector<int> witness;         // independent variable ids, ascending
};

namespace detail {

// Branch and bound for a minimum hitting set over <= kMaxVars elements.
// Supports are bitmasks; variables are tried ascending for determinism.
class HittingSetSolver {
public:
    explicit HittingSetSolver(std::vector<std::uint64_t> supports)
        : supports_(std::move(supports)) {}

    std::uint64_t solve(int nvars) {
        best_count_ = nvars + 1;
        best_ = ~std::uint64_t{0};
        recurse(0, 0);
        return best_;
    }

    int best_count() const { return best_count_; }

private:
    void recurse(std::uint64_t hit, int count) {
        if (count >= best_count_) return;
        const std::uint64_t* open = nullptr;
        for (const auto& s : supports_) {
            if ((s & hit) == 0) {
                open = &s;
                break;
            }
        }
        if (open == nullptr) {
            best_count_ = count;
            best_ = hit;
            return;
        }
        for (std::uint64_t rest = *open; rest != 0; rest &= rest - 1) {
            const std::uint64_t bit = rest & (~rest + 1);
            recurse(hit | bit, count + 1);
        }
    }

    std::vector<std::uint64_t> supports_;
    int best_count_ = 0;
    std::uint64_t best_ = 0;
};

}  // namespace detail

template <CoefficientField F>
DimensionResult krull_dimension(const Ideal<F>& ideal,
                                const Budget& budget = Budget::defaults()) {
    const auto& gb = ideal.groebner(budget);
    const int nv = ideal.ring()->nvars();
    DimensionResult out;
    if (!gb.empty() && gb.front().is_constant()) {
        out.krull_dim = -1;
        return out;
    }
    std::vector<std::uint64_t> supports;
    supports.reserve(gb.size());
    for (const auto& g : gb) supports.push_back(g.leading().m.mask);
    std::sort(supports.begin(), supports.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = __builtin_popcountll(a);
        const int pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::uint64_t> minimal;
    for (const auto& s : supports) {
        bool covered = false;
        for (const auto& m : minimal) {
            if ((m & ~s) == 0) {
                covered = true;
                break;
            }
        }
        if (!covered) minimal.push_back(s);
    }
    detail::HittingSetSolver solver(std::move(minimal));
    const std::uint64_t hit = solver.solve(nv);
    out.krull_dim = nv - solver.best_count();
    for (int v = 0; v < nv; ++v) {
        if ((hit & (std::uint64_t{1} << v)) == 0) out.witness.push_back(v);
    }
    return out;
}

// Two-sided containment of ideals via normal forms of generators.
template <CoefficientField F>
bool ideal_contains(const Ideal<F>& outer, const Ideal<F>& inner,
                    const Budget& budget = Budget::defaults()) {
    for (const auto& g : inner.generators()) {
        if (!outer.contains(g, budget)) return false;
    }
    return true;
}

// Radical-level equality: every generator of each ideal lies in the radical
// of the other.  This is variety equality over an algebraically closed field.
template <CoefficientField F>
bool radical_equal(const Ideal<F>& a, const Ideal<F>& b,
                   const Budget& budget = Budget::defaults()) {
    for (const auto& g : a.generators()) {
        if (!radical_membership(g, b, budget)) return false;
    }
    for (const auto& g : b.generators()) {
        if (!radical_membership(g, a, budget)) return false;
    }
    return true;
}

}  // namespace gtkit
