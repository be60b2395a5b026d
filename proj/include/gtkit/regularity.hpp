#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ideal_ops.hpp"
#include "rng.hpp"
#include "text.hpp"

namespace gtkit {

// Evidence for one step of the regular-sequence check: g_i is a nonzerodivisor
// modulo its predecessors iff (I_(i-1) : g_i) = I_(i-1), and a non-unit iff
// 1 is not in I_(i-1) + (g_i).
struct RegularityStep {
    bool quotient_equal = false;
    bool non_unit = false;
};

enum class RegularityVerdict { Regular, FailedAt, Budget };

inline const char* to_string(RegularityVerdict v) {
    switch (v) {
        case RegularityVerdict::Regular: return "regular";
        case RegularityVerdict::FailedAt: return "failed_at";
        case RegularityVerdict::Budget: return "budget";
    }
    return "?";
}

struct RegularityCertificate {
    std::vector<std::string> sequence;   // printed generators, in checked order
    std::vector<RegularityStep> steps;   // one per attempted step
    RegularityVerdict verdict = RegularityVerdict::Budget;
    int failed_index = 0;                // 1-based step that failed or hit budget

    bool regular() const { return verdict == RegularityVerdict::Regular; }
};

// Quotient-chain regular sequence check.  Each step carries the reduced basis
// of the accumulated ideal forward, so step i costs one quotient and one
// basis extension.  A budget overrun becomes a verdict, not an exception.
template <CoefficientField F>
RegularityCertificate is_regular_sequence(const RingPtr<F>& ring,
                                          const std::vector<Polynomial<F>>& gens,
                                          const Budget& budget = Budget::defaults()) {
    if (static_cast<int>(gens.size()) > ring->nvars()) {
        throw DomainError("is_regular_sequence: more generators than variables");
    }
    RegularityCertificate cert;
    cert.sequence.reserve(gens.size());
    for (const auto& g : gens) {
        require_same_ring(ring, g.ring());
        cert.sequence.push_back(to_string(g));
    }
    std::vector<Polynomial<F>> prev_gb;  // reduced basis of (g_1..g_(i-1))
    int i = 0;
    try {
        for (const auto& g : gens) {
            ++i;
            RegularityStep step;
            if (g.is_zero()) {
                // 0 is a zerodivisor unless the quotient ring itself is zero.
                step.quotient_equal =
                    !prev_gb.empty() && prev_gb.front().is_constant();
                step.non_unit = !step.quotient_equal;
            } else {
                Ideal<F> before(ring, prev_gb);
                Ideal<F> q = quotient(before, g, budget);
                step.quotient_equal = true;
                {
                    BudgetGuard guard(budget, "regular_sequence");
                    for (const auto& h : q.generators()) {
                        if (!normal_form(h, prev_gb, &guard).is_zero()) {
                            step.quotient_equal = false;
                            break;
                        }
                    }
                }
                auto with_g = prev_gb;
                with_g.push_back(g);
                auto next_gb = groebner_basis(ring, with_g, budget, "regular_sequence");
                step.non_unit = !(next_gb.size() == 1 && next_gb.front().is_constant());
                prev_gb = std::move(next_gb);
            }
            cert.steps.push_back(step);
            if (!step.quotient_equal || !step.non_unit) {
                cert.verdict = RegularityVerdict::FailedAt;
                cert.failed_index = i;
                return cert;
            }
        }
        cert.verdict = RegularityVerdict::Regular;
        cert.failed_index = 0;
    } catch (const BudgetExceeded&) {
        cert.verdict = RegularityVerdict::Budget;
        cert.failed_index = i;
    }
    return cert;
}

// For homogeneous generators, regular sequence <=> complete intersection
// <=> V(g_1..g_t) equidimensional of dimension nvars - t.  The certificate
// is issued only when both hypotheses are established.
struct EquidimCertificate {
    int ambient = 0;                 // number of variables
    int length = 0;                  // number of generators
    bool homogeneous = false;
    RegularityCertificate regularity;
    bool issued = false;
    int concluded_dim = -1;          // ambient - length, valid when issued
};

template <CoefficientField F>
EquidimCertificate equidimensional_by_ci(const RingPtr<F>& ring,
                                         const std::vector<Polynomial<F>>& gens,
                                         const Budget& budget = Budget::defaults()) {
    EquidimCertificate cert;
    cert.ambient = ring->nvars();
    cert.length = static_cast<int>(gens.size());
    cert.homogeneous = true;
    for (const auto& g : gens) {
        if (!is_homogeneous(g).first) {
            cert.homogeneous = false;
            break;
        }
    }
    cert.regularity = is_regular_sequence(ring, gens, budget);
    if (cert.homogeneous && cert.regularity.regular()) {
        cert.issued = true;
        cert.concluded_dim = cert.ambient - cert.length;
    }
    return cert;
}

// Homogeneous regular sequences stay regular under permutation; this check
// replays the certificate on every ordering (exhaustive when t! fits in
// max_orderings, seeded samples otherwise).
struct PermutationInvarianceReport {
    bool exhaustive = false;
    int orderings_checked = 0;
    int regular_count = 0;
    bool all_regular = false;
    std::vector<std::vector<int>> failures;  // generator orderings that failed
};

template <CoefficientField F>
PermutationInvarianceReport check_permutation_invariance(
    const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
    int max_orderings, std::uint64_t seed,
    const Budget& budget = Budget::defaults()) {
    const int t = static_cast<int>(gens.size());
    long factorial = 1;
    bool overflow = false;
    for (int i = 2; i <= t; ++i) {
        factorial *= i;
        if (factorial > max_orderings) {
            overflow = true;
            break;
        }
    }
    std::vector<std::vector<int>> orderings;
    std::vector<int> idx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (!overflow) {
        do {
            orderings.push_back(idx);
        } while (std::next_permutation(idx.begin(), idx.end()));
    } else {
        Rng rng(seed);
        for (int s = 0; s < max_orderings; ++s) {
            rng.shuffle(idx);
            orderings.push_back(idx);
        }
    }
    PermutationInvarianceReport rep;
    rep.exhaustive = !overflow;
    for (const auto& ord : orderings) {
        std::vector<Polynomial<F>> permuted;
        permuted.reserve(gens.size());
        for (const int i : ord) permuted.push_back(gens[static_cast<std::size_t>(i)]);
        ++rep.orderings_checked;
        if (is_regular_sequence(ring, permuted, budget).regular()) {
            ++rep.regular_count;
        } else {
            rep.failures.push_back(ord);
        }
    }
    rep.all_regular = rep.regular_count == rep.orderings_checked;
    return rep;
}

// Substitutes zero for the given variables in every generator; images are
// returned 1:1 with the input (zeros included) so callers can match them
// against expected systems.
template <CoefficientField F>
std::vector<Polynomial<F>> project_out_variables(const std::vector<Polynomial<F>>& gens,
                                                 const std::vector<int>& var_ids) {
    std::vector<Polynomial<F>> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(substitute_zero(g, var_ids));
    return out;
}

// Dimension inference for inhomogeneous systems through their top forms:
// if the leading forms are a (homogeneous) regular sequence, the system
// itself is regular and cuts out an equidimensional variety of dimension
// nvars - t.  The converse is false, so a failed top-form check is reported
// as inconclusive, never as a refutation; on small rings a direct basis
// computation distinguishes the unit ideal.
enum class InferenceConclusion { Regular, Inconclusive, UnitIdeal, Budget };

inline const char* to_string(InferenceConclusion c) {
    switch (c) {
        case InferenceConclusion::Regular: return "regular";
        case InferenceConclusion::Inconclusive: return "inconclusive";
        case InferenceConclusion::UnitIdeal: return "unit ideal";
        case InferenceConclusion::Budget: return "budget";
    }
    return "?";
}

struct LeadingFormInference {
    RegularityCertificate tops;
    InferenceConclusion conclusion = InferenceConclusion::Inconclusive;
    bool direct_checked = false;
    int concluded_dim = -1;  // nvars - t when conclusion == Regular
};

template <CoefficientField F>
LeadingFormInference leading_form_inference(const RingPtr<F>& ring,
                                            const std::vector<Polynomial<F>>& gens,
                                            const Budget& budget = Budget::defaults(),
                                            int direct_check_max_vars = 9) {
    LeadingFormInference out;
    std::vector<Polynomial<F>> tops;
    tops.reserve(gens.size());
    for (const auto& g : gens) tops.push_back(leading_form(g));
    out.tops = is_regular_sequence(ring, tops, budget);
    if (out.tops.verdict == RegularityVerdict::Budget) {
        out.conclusion = InferenceConclusion::Budget;
        return out;
    }
    if (out.tops.regular()) {
        out.conclusion = InferenceConclusion::Regular;
        out.concluded_dim = ring->nvars() - static_cast<int>(gens.size());
        return out;
    }
    if (ring->nvars() <= direct_check_max_vars) {
        try {
            Ideal<F> ideal(ring, gens);
            out.direct_checked = true;
            out.conclusion = ideal.is_unit(budget) ? InferenceConclusion::UnitIdeal
                                                   : InferenceConclusion::Inconclusive;
        } catch (const BudgetExceeded&) {
            out.conclusion = InferenceConclusion::Inconclusive;
        }
    } else {
        out.conclusion = InferenceConclusion::Inconclusive;
    }
    return out;
}

}  // namespace gtkit
