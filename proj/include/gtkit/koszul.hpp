#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

namespace gtkit {

// One graded piece of the Koszul complex: in homological degree p and
// internal degree d, the piece has dim_piece basis elements e_S (x) m with
// |S| = p and |m| = d - sum of generator degrees over S.  Its homology
// dimension is dim - rank(d_p) - rank(d_(p+1)); regular sequences have none
// in positive homological degree.
struct GradedPieceReport {
    int p = 0;
    int d = 0;
    std::size_t dim_piece = 0;
    int rank_d_p = 0;
    int rank_d_p1 = 0;
    long homology_dim = 0;
};

// Koszul complex on homogeneous generators g_1..g_t: K_p is free on the
// p-subsets of generators, and d(e_(i1<...<ip)) = sum over k of
// (-1)^(k+1) g_(ik) e_(subset minus ik).  Matrices are materialized one
// graded piece at a time; the complex itself stays implicit.
template <CoefficientField F>
class KoszulComplex {
public:
    KoszulComplex(RingPtr<F> ring, std::vector<Polynomial<F>> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {
        degs_.reserve(gens_.size());
        for (const auto& g : gens_) {
            require_same_ring(ring_, g.ring());
            const auto [hom, deg] = is_homogeneous(g);
            if (!hom) throw DomainError("koszul: generators must be homogeneous");
            if (g.is_zero()) throw DomainError("koszul: zero generator");
            degs_.push_back(deg);
        }
    }

    const RingPtr<F>& ring() const { return ring_; }
    int length() const { return static_cast<int>(gens_.size()); }
    const std::vector<Polynomial<F>>& generators() const { return gens_; }

    // All p-subsets of {0..t-1} in lexicographic order.
    std::vector<std::vector<int>> subsets(int p) const {
        std::vector<std::vector<int>> out;
        const int t = length();
        if (p < 0 || p > t) return out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int from) -> void {
            if (static_cast<int>(cur.size()) == p) {
                out.push_back(cur);
                return;
            }
            for (int i = from; i < t; ++i) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    }

    // Matrix of d_p restricted to internal degree d, rows indexed by the
    // degree-d basis of K_(p-1), columns by the degree-d basis of K_p.
    DenseMatrix<F> differential_piece(int p, int d, BudgetGuard& guard) const {
        const auto cols = basis(p, d, guard);
        const auto rows = basis(p - 1, d, guard);
        const auto row_index = index_of(rows);
        const auto& field = ring_->field();
        const int nv = ring_->nvars();
        DenseMatrix<F> mat(field, rows.entries.size(), cols.entries.size());
        for (std::size_t cidx = 0; cidx < cols.entries.size(); ++cidx) {
            const auto& [sidx, m] = cols.entries[cidx];
            const auto& subset = cols.subsets[static_cast<std::size_t>(sidx)];
            for (std::size_t k = 0; k < subset.size(); ++k) {
                std::vector<int> sub = subset;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
                const int rs = rows.subset_pos.at(key_of(sub));
                const auto& g = gens_[static_cast<std::size_t>(subset[k])];
                const bool negate = (k % 2) != 0;  // sign (-1)^(k+1), k 1-based
                for (const auto& term : g.terms()) {
                    const Monomial rm = Monomial::mul(m, term.m, nv);
                    const auto it = row_index.find(RowKey{rs, rm});
                    if (it == row_index.end()) {
                        throw Error("koszul: differential left the graded piece");
                    }
                    auto& cell = mat.at(it->second, cidx);
                    cell = negate ? field.sub(cell, term.c) : field.add(cell, term.c);
                }
            }
        }
        return mat;
    }

    GradedPieceReport graded_piece(int p, int d,
                                   const Budget& budget = Budget::defaults()) const {
        if (p < 1 || p > length()) throw DomainError("koszul: homological degree out of range");
        BudgetGuard guard(budget, "koszul");
        GradedPieceReport rep;
        rep.p = p;
        rep.d = d;
        rep.dim_piece = basis(p, d, guard).entries.size();
        rep.rank_d_p = differential_piece(p, d, guard).rank();
        rep.rank_d_p1 =
            p + 1 <= length() ? differential_piece(p + 1, d, guard).rank() : 0;
        rep.homology_dim = static_cast<long>(rep.dim_piece) - rep.rank_d_p - rep.rank_d_p1;
        return rep;
    }

    // Composition check d_(p-1) . d_p = 0 on every piece up to max_degree.
    bool d_squared_is_zero(int max_degree, const Budget& budget = Budget::defaults()) const {
        BudgetGuard guard(budget, "koszul");
        for (int p = 2; p <= length(); ++p) {
            for (int d = 0; d <= max_degree; ++d) {
                const auto dp = differential_piece(p, d, guard);
                const auto dp_prev = differential_piece(p - 1, d, guard);
                if (!dp_prev.product_is_zero(dp)) return false;
            }
        }
        return true;
    }

private:
    struct Basis {
        std::vector<std::vector<int>> subsets;
        std::unordered_map<std::uint64_t, int> subset_pos;
        std::vector<std::pair<int, Monomial>> entries;  // (subset index, monomial)
    };

    struct RowKey {
        int subset;
        Monomial m;
    };

    struct RowKeyHash {
        int nv;
        std::size_t operator()(const RowKey& k) const {
            return k.m.hash(nv) * 1000003u + static_cast<std::size_t>(k.subset);
        }
    };

    struct RowKeyEq {
        int nv;
        bool operator()(const RowKey& a, const RowKey& b) const {
            return a.subset == b.subset && Monomial::equal(a.m, b.m, nv);
        }
    };

    static std::uint64_t key_of(const std::vector<int>& subset) {
        std::uint64_t key = 0;
        for (const int i : subset) key |= std::uint64_t{1} << i;
        return key;
    }

    void monomials_of_degree(int d, std::vector<Monomial>& out) const {
        const int nv = ring_->nvars();
        Monomial m = Monomial::one();
        auto rec = [&](auto&& self, int var, int rem) -> void {
            if (var == nv - 1) {
                m.set(var, rem);
                out.push_back(m);
                m.set(var, 0);
                return;
            }
            for (int e = rem; e >= 0; --e) {
                m.set(var, e);
                self(self, var + 1, rem - e);
            }
            m.set(var, 0);
        };
        if (nv == 0) return;
        rec(rec, 0, d);
    }

    Basis basis(int p, int d, BudgetGuard& guard) const {
        Basis b;
        b.subsets = subsets(p);
        for (std::size_t s = 0; s < b.subsets.size(); ++s) {
            b.subset_pos[key_of(b.subsets[s])] = static_cast<int>(s);
        }
        for (std::size_t s = 0; s < b.subsets.size(); ++s) {
            int wt = 0;
            for (const int i : b.subsets[s]) wt += degs_[static_cast<std::size_t>(i)];
            const int rem = d - wt;
            if (rem < 0) continue;
            std::vector<Monomial> ms;
            monomials_of_degree(rem, ms);
            guard.check_piece_dim(b.entries.size() + ms.size());
            for (const auto& m : ms) b.entries.emplace_back(static_cast<int>(s), m);
        }
        return b;
    }

    std::unordered_map<RowKey, std::size_t, RowKeyHash, RowKeyEq>
    index_of(const Basis& rows) const {
        const int nv = ring_->nvars();
        std::unordered_map<RowKey, std::size_t, RowKeyHash, RowKeyEq> map(
            rows.entries.size() * 2 + 1, RowKeyHash{nv}, RowKeyEq{nv});
        for (std::size_t i = 0; i < rows.entries.size(); ++i) {
            map[RowKey{rows.entries[i].first, rows.entries[i].second}] = i;
        }
        return map;
    }

    RingPtr<F> ring_;
    std::vector<Polynomial<F>> gens_;
    std::vector<int> degs_;
};

// Degreewise homology screen: scans internal degrees 1..max_degree and all
// homological degrees for nonzero homology.  Finding some refutes
// regularity; finding none up to the bound proves nothing beyond it, and
// every consumer of this verdict states that explicitly.
struct CIOracleReport {
    int max_degree = 8;
    bool homology_found = false;
    int at_p = 0;
    int at_d = 0;
    static constexpr const char* kScopeNote =
        "degreewise screen: no homology up to the degree bound does not prove "
        "regularity";
};

template <CoefficientField F>
CIOracleReport ci_oracle(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                         int max_degree = 8, const Budget& budget = Budget::defaults()) {
    KoszulComplex<F> complex(ring, gens);
    CIOracleReport rep;
    rep.max_degree = max_degree;
    for (int d = 1; d <= max_degree; ++d) {
        for (int p = 1; p <= complex.length(); ++p) {
            const auto piece = complex.graded_piece(p, d, budget);
            if (piece.homology_dim > 0) {
                rep.homology_found = true;
                rep.at_p = p;
                rep.at_d = d;
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace gtkit
