#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gt_systems.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace gtkit {

// A square matrix with exact rational entries.
struct ConcreteMatrix {
    int n = 0;
    std::vector<std::vector<Rational>> a;

    ConcreteMatrix() = default;

    explicit ConcreteMatrix(int size)
        : n(size), a(static_cast<std::size_t>(size),
                     std::vector<Rational>(static_cast<std::size_t>(size))) {
        if (size < 1) throw DomainError("matrix size must be positive");
    }

    static ConcreteMatrix from_rows(std::vector<std::vector<Rational>> rows) {
        ConcreteMatrix m(static_cast<int>(rows.size()));
        for (const auto& r : rows) {
            if (r.size() != rows.size()) throw DomainError("matrix must be square");
        }
        m.a = std::move(rows);
        return m;
    }

    // Integer entries uniform in [-10, 10].
    static ConcreteMatrix random(int size, Rng& rng) {
        ConcreteMatrix m(size);
        for (auto& row : m.a) {
            for (auto& x : row) x = Rational(rng.uniform(-10, 10));
        }
        return m;
    }

    // Strictly lower triangular with random integer entries.
    static ConcreteMatrix random_strict_lower(int size, Rng& rng) {
        ConcreteMatrix m(size);
        for (int i = 1; i < size; ++i) {
            for (int j = 0; j < i; ++j) {
                m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    Rational(rng.uniform(-10, 10));
            }
        }
        return m;
    }

    const Rational& at(int i, int j) const {
        return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    Rational& at(int i, int j) {
        return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    // Entries flattened in a grid ring's variable order: x11, x12, ..., xnn.
    std::vector<Rational> grid_point() const {
        std::vector<Rational> p;
        p.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) p.push_back(at(i, j));
        }
        return p;
    }
};

namespace detail {

// i x i upper-left corner product helpers over exact rationals.
inline std::vector<std::vector<Rational>> corner(const ConcreteMatrix& x, int i) {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(i),
                                         std::vector<Rational>(static_cast<std::size_t>(i)));
    for (int r = 0; r < i; ++r) {
        for (int c = 0; c < i; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x.at(r, c);
    }
    return m;
}

inline std::vector<std::vector<Rational>> mul(const std::vector<std::vector<Rational>>& a,
                                              const std::vector<std::vector<Rational>>& b) {
    const std::size_t m = a.size();
    std::vector<std::vector<Rational>> r(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Rational s(0);
            for (std::size_t k = 0; k < m; ++k) s = s + a[i][k] * b[k][j];
            r[i][j] = s;
        }
    }
    return r;
}

inline Rational trace(const std::vector<std::vector<Rational>>& a) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i][i];
    return s;
}

}  // namespace detail

// Characteristic coefficients of the i x i corner under det(t*Id - X_i):
// Faddeev-LeVerrier on exact rationals, c_j = coefficient of t^(i-j).
inline std::vector<Rational> char_coefficients(const ConcreteMatrix& x, int i) {
    auto xi = detail::corner(x, i);
    std::vector<std::vector<Rational>> acc(static_cast<std::size_t>(i),
                                           std::vector<Rational>(static_cast<std::size_t>(i)));
    for (int r = 0; r < i; ++r) acc[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = Rational(1);
    std::vector<Rational> cs;
    cs.reserve(static_cast<std::size_t>(i));
    for (int k = 1; k <= i; ++k) {
        acc = detail::mul(xi, acc);
        Rational ck = -(detail::trace(acc) / Rational(k));
        cs.push_back(ck);
        for (int r = 0; r < i; ++r) {
            auto& cell = acc[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
            cell = cell + ck;
        }
    }
    return cs;
}

// The last k characteristic-coefficient vectors (chi_(n-k+1), ..., chi_n).
// Equality of signatures is equality of eigenvalue multisets levelwise, so
// fiber comparisons stay exact and field-rational.
struct FiberSignature {
    int n = 0;
    int k = 0;
    std::vector<std::vector<Rational>> chi;  // chi[j] has length n-k+1+j

    bool operator==(const FiberSignature& other) const {
        return n == other.n && k == other.k && chi == other.chi;
    }

    bool is_zero() const {
        for (const auto& level : chi) {
            for (const auto& c : level) {
                if (!c.is_zero()) return false;
            }
        }
        return true;
    }
};

inline FiberSignature phi_k(const ConcreteMatrix& x, int k) {
    if (k < 1 || k > x.n) throw DomainError("phi_k: need 1 <= k <= n");
    FiberSignature sig;
    sig.n = x.n;
    sig.k = k;
    for (int i = x.n - k + 1; i <= x.n; ++i) sig.chi.push_back(char_coefficients(x, i));
    return sig;
}

inline FiberSignature phi(const ConcreteMatrix& x) { return phi_k(x, x.n); }

inline bool same_fiber(const ConcreteMatrix& x, const ConcreteMatrix& y, int k) {
    if (x.n != y.n) throw DomainError("same_fiber: size mismatch");
    return phi_k(x, k) == phi_k(y, k);
}

// A matrix is strongly nilpotent iff every upper-left corner is nilpotent,
// iff phi vanishes, iff every power trace tr(X_i^j) vanishes.  Both
// characterizations are evaluated; they must agree.
inline bool strongly_nilpotent(const ConcreteMatrix& x) {
    const bool by_phi = phi(x).is_zero();
    bool by_traces = true;
    for (int i = 1; i <= x.n && by_traces; ++i) {
        auto xi = detail::corner(x, i);
        auto p = xi;
        for (int j = 1; j <= i; ++j) {
            if (!detail::trace(p).is_zero()) {
                by_traces = false;
                break;
            }
            if (j < i) p = detail::mul(p, xi);
        }
    }
    if (by_phi != by_traces) {
        throw Error("strongly_nilpotent: characteristic and trace paths disagree");
    }
    return by_phi;
}

// Pointwise dimension probe for the level sets of phi_k: at a sample X the
// Jacobian of the nk - k(k-1)/2 defining polynomials chi_ij - chi_ij(X) has
// full rank exactly when X is a smooth point of its fiber with local
// codimension nk - k(k-1)/2.  Partials are symbolic; one sample per run is
// re-derived by exact Lagrange finite differences to guard the calculus.
struct JacobianSample {
    int rank = 0;
    bool full = false;
};

struct JacobianProbeReport {
    int n = 0;
    int k = 0;
    int expected_rank = 0;       // nk - k(k-1)/2
    int expected_fiber_dim = 0;  // n^2 - expected_rank
    std::uint64_t seed = 0;
    int trials = 0;
    int full_rank_count = 0;
    bool fd_cross_check_ok = false;
    std::vector<JacobianSample> samples;
};

namespace detail {

// Derivative at 0 from exact samples at s = 0..m via forward differences:
// h'(0) = sum_(i>=1) (-1)^(i-1) Delta^i h(0) / i.
inline Rational derivative_at_zero(std::vector<Rational> samples) {
    Rational out(0);
    int sign = 1;
    const std::size_t m = samples.size();
    for (std::size_t i = 1; i < m; ++i) {
        for (std::size_t j = 0; j + i < m; ++j) {
            samples[j] = samples[j + 1] - samples[j];
        }
        out = out + Rational(sign) * samples[0] / Rational(static_cast<long>(i));
        sign = -sign;
    }
    return out;
}

}  // namespace detail

inline JacobianProbeReport jacobian_rank_probe(int n, int k, int trials,
                                               std::uint64_t seed) {
    if (trials < 1) throw DomainError("jacobian_rank_probe: need trials >= 1");
    QField q;
    auto chi = chi_system(n, q);
    JacobianProbeReport rep;
    rep.n = n;
    rep.k = k;
    rep.expected_rank = n * k - k * (k - 1) / 2;
    rep.expected_fiber_dim = n * n - rep.expected_rank;
    rep.seed = seed;
    rep.trials = trials;

    // The defining polynomials: chi levels n-k+1..n (constant shifts by
    // chi(X) do not change partials, so the symbolic rows serve every X).
    std::vector<const Polynomial<QField>*> rows;
    {
        std::size_t idx = 0;
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= i; ++j, ++idx) {
                if (i >= n - k + 1) rows.push_back(&chi.generators[idx]);
            }
        }
    }
    const int nv = chi.ring->nvars();
    std::vector<std::vector<Polynomial<QField>>> partials;
    partials.reserve(rows.size());
    for (const auto* g : rows) {
        std::vector<Polynomial<QField>> pr;
        pr.reserve(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v) pr.push_back(derivative(*g, v));
        partials.push_back(std::move(pr));
    }

    Rng rng(seed);
    rep.fd_cross_check_ok = true;
    for (int trial = 0; trial < trials; ++trial) {
        const auto x = ConcreteMatrix::random(n, rng);
        const auto point = x.grid_point();
        DenseMatrix<QField> jac(q, rows.size(), static_cast<std::size_t>(nv));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (int v = 0; v < nv; ++v) {
                jac.at(r, static_cast<std::size_t>(v)) = evaluate(partials[r][static_cast<std::size_t>(v)], point);
            }
        }
        if (trial == 0) {
            // Exact finite-difference re-derivation of the whole Jacobian.
            for (std::size_t r = 0; r < rows.size() && rep.fd_cross_check_ok; ++r) {
                const int m = rows[r]->degree();
                for (int v = 0; v < nv; ++v) {
                    std::vector<Rational> hs;
                    hs.reserve(static_cast<std::size_t>(m) + 1);
                    for (int s = 0; s <= m; ++s) {
                        auto shifted = point;
                        shifted[static_cast<std::size_t>(v)] =
                            shifted[static_cast<std::size_t>(v)] + Rational(s);
                        hs.push_back(evaluate(*rows[r], shifted));
                    }
                    if (!(detail::derivative_at_zero(std::move(hs)) ==
                          jac.at(r, static_cast<std::size_t>(v)))) {
                        rep.fd_cross_check_ok = false;
                        break;
                    }
                }
            }
        }
        JacobianSample sample;
        sample.rank = jac.rank();
        sample.full = sample.rank == rep.expected_rank;
        if (sample.full) ++rep.full_rank_count;
        rep.samples.push_back(sample);
    }
    return rep;
}

}  // namespace gtkit
