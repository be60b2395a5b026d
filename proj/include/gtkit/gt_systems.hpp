#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "ringhom.hpp"

namespace gtkit {

// Dimension bookkeeping: d(t) = t(t+1)/2 is the triangular count, and
// e(t) = (t+2)(t-1)/2 = d(t) - 1 counts the strict lower triangle plus the
// last column of a t x t grid.
inline constexpr int d_of(int t) { return t * (t + 1) / 2; }
inline constexpr int e_of(int t) { return (t + 2) * (t - 1) / 2; }

// Strict lower triangle (row-major) followed by the last column (top-down,
// without the corner): the variable support of the weak system at size n.
inline std::vector<Variable> weak_index_set(int n) {
    if (n < 2) throw DomainError("weak_index_set: need n >= 2");
    std::vector<Variable> vars;
    vars.reserve(static_cast<std::size_t>(e_of(n)));
    for (int i = 2; i <= n; ++i) {
        for (int j = 1; j < i; ++j) vars.push_back(Variable{i, j});
    }
    for (int i = 1; i < n; ++i) vars.push_back(Variable{i, n});
    return vars;
}

// The weak index set with row t and column t struck out.
inline std::vector<Variable> punctured_index_set(int n, int t) {
    if (t < 1 || t > n) throw DomainError("punctured_index_set: t out of range");
    std::vector<Variable> vars;
    for (const auto& v : weak_index_set(n)) {
        if (v.row != t && v.col != t) vars.push_back(v);
    }
    return vars;
}

namespace detail {

template <CoefficientField F>
using PolyMatrix = std::vector<std::vector<Polynomial<F>>>;

// Upper-left m x m corner of the variable grid as a polynomial matrix.
template <CoefficientField F>
PolyMatrix<F> corner_matrix(const RingPtr<F>& ring, int m) {
    PolyMatrix<F> x(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        auto& row = x[static_cast<std::size_t>(i - 1)];
        row.reserve(static_cast<std::size_t>(m));
        for (int j = 1; j <= m; ++j) {
            row.push_back(Polynomial<F>::variable(ring, ring->id(i, j)));
        }
    }
    return x;
}

template <CoefficientField F>
PolyMatrix<F> mat_mul(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
    const std::size_t m = a.size();
    PolyMatrix<F> r(m);
    for (std::size_t i = 0; i < m; ++i) {
        r[i].reserve(m);
        for (std::size_t j = 0; j < m; ++j) {
            Polynomial<F> s = a[i][0] * b[0][j];
            for (std::size_t k = 1; k < m; ++k) s = s + a[i][k] * b[k][j];
            r[i].push_back(std::move(s));
        }
    }
    return r;
}

template <CoefficientField F>
Polynomial<F> mat_trace(const PolyMatrix<F>& a) {
    Polynomial<F> s = a[0][0];
    for (std::size_t i = 1; i < a.size(); ++i) s = s + a[i][i];
    return s;
}

}  // namespace detail

// Power traces tr(X_i^j) for one level i, j = 1..i, in the given grid ring.
template <CoefficientField F>
std::vector<Polynomial<F>> gamma_bar_level(const RingPtr<F>& ring, int i) {
    const auto x = detail::corner_matrix(ring, i);
    std::vector<Polynomial<F>> out;
    out.reserve(static_cast<std::size_t>(i));
    auto p = x;
    for (int j = 1; j <= i; ++j) {
        out.push_back(detail::mat_trace(p));
        if (j < i) p = detail::mat_mul(p, x);
    }
    return out;
}

// Characteristic coefficients of X_i under the det(t*Id - X_i) convention:
// chi_ij is the coefficient of t^(i-j).  Faddeev-LeVerrier recurrence, exact.
template <CoefficientField F>
std::vector<Polynomial<F>> chi_level(const RingPtr<F>& ring, int i) {
    const auto& field = ring->field();
    const auto x = detail::corner_matrix(ring, i);
    const std::size_t m = static_cast<std::size_t>(i);
    detail::PolyMatrix<F> acc(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            acc[r].push_back(r == c ? Polynomial<F>::one(ring)
                                    : Polynomial<F>::zero(ring));
        }
    }
    std::vector<Polynomial<F>> out;
    out.reserve(m);
    for (int k = 1; k <= i; ++k) {
        acc = detail::mat_mul(x, acc);
        const auto ck =
            detail::mat_trace(acc).scaled(field.neg(field.inv(field.from_int(k))));
        out.push_back(ck);
        for (std::size_t r = 0; r < m; ++r) {
            acc[r][r] = acc[r][r] + ck;
        }
    }
    return out;
}

enum class SystemFamily { GammaBar, Sigma, Chi, PartialGamma, PartialChi };

inline const char* family_name(SystemFamily f) {
    switch (f) {
        case SystemFamily::GammaBar: return "gamma_bar";
        case SystemFamily::Sigma: return "sigma";
        case SystemFamily::Chi: return "chi";
        case SystemFamily::PartialGamma: return "partial_gamma";
        case SystemFamily::PartialChi: return "partial_chi";
    }
    return "?";
}

// A named polynomial system attached to its ring.  beta records the exact
// rational target vector for the partial families (empty otherwise).
template <CoefficientField F>
struct GTSystem {
    SystemFamily family;
    int n = 0;
    int k = 0;
    std::vector<Rational> beta;
    RingPtr<F> ring;
    std::vector<Polynomial<F>> generators;
};

// Full power-trace system: gamma_bar_ij = tr(X_i^j), level i ascending and
// j = 1..i inside a level; d(n) generators in the n x n grid ring.
template <CoefficientField F>
GTSystem<F> gamma_bar_system(int n, const F& field, MonomialOrder order = {}) {
    if (n < 1 || n > 6) throw DomainError("gamma_bar_system: supported range is 1..6");
    GTSystem<F> sys{SystemFamily::GammaBar, n, 0, {}, make_grid_ring(n, field, order), {}};
    sys.generators.reserve(static_cast<std::size_t>(d_of(n)));
    for (int i = 1; i <= n; ++i) {
        for (auto& g : gamma_bar_level(sys.ring, i)) sys.generators.push_back(std::move(g));
    }
    return sys;
}

// Characteristic-coefficient system chi_ij, same layout as gamma_bar.
template <CoefficientField F>
GTSystem<F> chi_system(int n, const F& field, MonomialOrder order = {}) {
    if (n < 1 || n > 6) throw DomainError("chi_system: supported range is 1..6");
    GTSystem<F> sys{SystemFamily::Chi, n, 0, {}, make_grid_ring(n, field, order), {}};
    sys.generators.reserve(static_cast<std::size_t>(d_of(n)));
    for (int i = 1; i <= n; ++i) {
        for (auto& g : chi_level(sys.ring, i)) sys.generators.push_back(std::move(g));
    }
    return sys;
}

// Weak system sigma_nj, j = 2..n: the sum over strictly decreasing index
// paths n > t_1 > ... > t_(j-1) >= 1 of x(n,t_1) x(t_1,t_2) ... x(t_(j-1),n),
// living in the e(n)-variable ring on the weak index set.
template <CoefficientField F>
GTSystem<F> sigma_system(int n, const F& field, MonomialOrder order = {}) {
    if (n < 2 || n > 8) throw DomainError("sigma_system: supported range is 2..8");
    GTSystem<F> sys{SystemFamily::Sigma, n, 0, {},
                    make_sub_ring(n, weak_index_set(n), field, order), {}};
    const RingPtr<F>& ring = sys.ring;
    const int nv = ring->nvars();
    for (int j = 2; j <= n; ++j) {
        std::vector<typename Polynomial<F>::Term> terms;
        std::vector<int> path(static_cast<std::size_t>(j - 1));
        // Enumerate strictly decreasing (j-1)-tuples from {1..n-1}.
        auto emit = [&](auto&& self, int pos, int upper) -> void {
            if (pos == j - 1) {
                Monomial m = Monomial::one();
                int prev = n;
                for (int a = 0; a < j - 1; ++a) {
                    m = Monomial::mul(
                        m, Monomial::var(ring->id(prev, path[static_cast<std::size_t>(a)])),
                        nv);
                    prev = path[static_cast<std::size_t>(a)];
                }
                m = Monomial::mul(m, Monomial::var(ring->id(prev, n)), nv);
                terms.push_back({m, field.one()});
                return;
            }
            for (int t = upper - 1; t >= j - 1 - pos; --t) {
                path[static_cast<std::size_t>(pos)] = t;
                self(self, pos + 1, t);
            }
        };
        emit(emit, 0, n);
        sys.generators.push_back(Polynomial<F>::from_terms(ring, std::move(terms)));
    }
    return sys;
}

// Partial system at levels n-k+1..n: gamma_bar_ij - beta_ij (or chi_ij -
// beta_ij), beta listed level-ascending then j-ascending, nk - k(k-1)/2 long.
template <CoefficientField F>
GTSystem<F> partial_system(int n, int k, std::vector<Rational> beta, const F& field,
                           bool chi_family = false, MonomialOrder order = {}) {
    if (n < 1 || n > 6 || k < 1 || k > n) {
        throw DomainError("partial_system: need 1 <= k <= n <= 6");
    }
    const int expected = n * k - k * (k - 1) / 2;
    if (static_cast<int>(beta.size()) != expected) {
        throw DomainError("partial_system: beta must have length nk - k(k-1)/2");
    }
    GTSystem<F> sys{chi_family ? SystemFamily::PartialChi : SystemFamily::PartialGamma,
                    n, k, std::move(beta), make_grid_ring(n, field, order), {}};
    std::size_t b = 0;
    for (int i = n - k + 1; i <= n; ++i) {
        auto level = chi_family ? chi_level(sys.ring, i) : gamma_bar_level(sys.ring, i);
        for (auto& g : level) {
            sys.generators.push_back(
                g - Polynomial<F>::constant(sys.ring, field.from_rational(sys.beta[b])));
            ++b;
        }
    }
    return sys;
}

// --- Named substitution homomorphisms -------------------------------------
//
// The five coordinate substitutions the verification replays use.  Sources
// and targets are the weak-index rings except for the two grid involutions.

// x(i,j) -> x(i+1,j+1): k[weak(n-1)] -> k[punctured(n,1)].
template <CoefficientField F>
RingHom<F> shift_hom(int n, const F& field, MonomialOrder order = {}) {
    auto src = make_sub_ring(n - 1, weak_index_set(n - 1), field, order);
    auto dst = make_sub_ring(n, punctured_index_set(n, 1), field, order);
    return variable_hom<F>("shift", src, dst,
                           [](int r, int c) { return std::pair<int, int>{r + 1, c + 1}; });
}

// Indices at or above t slide by one: k[weak(n-1)] -> k[punctured(n,t)].
template <CoefficientField F>
RingHom<F> puncture_hom(int n, int t, const F& field, MonomialOrder order = {}) {
    if (t < 2 || t > n - 1) throw DomainError("puncture_hom: need 2 <= t <= n-1");
    auto src = make_sub_ring(n - 1, weak_index_set(n - 1), field, order);
    auto dst = make_sub_ring(n, punctured_index_set(n, t), field, order);
    return variable_hom<F>("puncture", src, dst, [t](int r, int c) {
        return std::pair<int, int>{r >= t ? r + 1 : r, c >= t ? c + 1 : c};
    });
}

// Row and column n-1 move to row and column n: k[weak(n-1)] ->
// k[punctured(n,n-1)].
template <CoefficientField F>
RingHom<F> last_row_swap_hom(int n, const F& field, MonomialOrder order = {}) {
    if (n < 3) throw DomainError("last_row_swap_hom: need n >= 3");
    auto src = make_sub_ring(n - 1, weak_index_set(n - 1), field, order);
    auto dst = make_sub_ring(n, punctured_index_set(n, n - 1), field, order);
    return variable_hom<F>("last_row_swap", src, dst, [n](int r, int c) {
        return std::pair<int, int>{r == n - 1 ? n : r, c == n - 1 ? n : c};
    });
}

// x(i,j) -> x(j,i) on a full grid ring.
template <CoefficientField F>
RingHom<F> transpose_hom(const RingPtr<F>& grid) {
    return variable_hom<F>("transpose", grid, grid,
                           [](int r, int c) { return std::pair<int, int>{c, r}; });
}

// x(i,j) -> x(perm(i),perm(j)); perm is 1-based over the grid size.
template <CoefficientField F>
RingHom<F> conj_perm_hom(const RingPtr<F>& grid, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != grid->grid_n()) {
        throw DomainError("conj_perm_hom: permutation size must match the grid");
    }
    return variable_hom<F>("conj_perm", grid, grid, [perm](int r, int c) {
        return std::pair<int, int>{perm[static_cast<std::size_t>(r - 1)],
                                   perm[static_cast<std::size_t>(c - 1)]};
    });
}

}  // namespace gtkit
