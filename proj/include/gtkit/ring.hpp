#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fields.hpp"
#include "monomial.hpp"

namespace gtkit {

// A ring variable.  Grid variables are matrix coordinates x_{row,col} with
// 1-based indices; auxiliary (elimination) variables use row == 0 and a
// 1-based counter in col.
struct Variable {
    int row = 0;
    int col = 0;

    bool is_aux() const { return row == 0; }

    friend bool operator==(const Variable& a, const Variable& b) {
        return a.row == b.row && a.col == b.col;
    }
    friend bool operator<(const Variable& a, const Variable& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
};

// Canonical variable name.  Single-digit grids concatenate the indices
// ("x21"); larger grids separate them with an underscore ("x10_2").
inline std::string variable_name(const Variable& v, int grid_n) {
    if (v.is_aux()) return "t" + std::to_string(v.col);
    if (grid_n <= 9)
        return "x" + std::to_string(v.row) + std::to_string(v.col);
    return "x" + std::to_string(v.row) + "_" + std::to_string(v.col);
}

// A polynomial ring: a coefficient field, an ordered list of variables
// (index 0 is the order-largest variable) and an active monomial order.
// Rings are immutable and shared through RingPtr.
template <CoefficientField F>
class Ring {
public:
    Ring(F field, MonomialOrder order, int grid_n, std::vector<Variable> vars)
        : field_(std::move(field)), order_(order), grid_n_(grid_n), vars_(std::move(vars)) {
        if (vars_.empty() || vars_.size() > kMaxVars)
            throw DomainError("ring must have between 1 and " + std::to_string(kMaxVars) +
                              " variables");
        names_.reserve(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const std::string name = variable_name(vars_[i], grid_n_);
            if (!by_name_.emplace(name, static_cast<int>(i)).second)
                throw DomainError("duplicate ring variable " + name);
            by_pos_.emplace(vars_[i], static_cast<int>(i));
            names_.push_back(name);
        }
    }

    const F& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }
    int grid_n() const { return grid_n_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<Variable>& variables() const { return vars_; }
    const Variable& variable(int id) const { return vars_[static_cast<std::size_t>(id)]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int id) const { return names_[static_cast<std::size_t>(id)]; }

    // Variable id by grid position, -1 when the ring does not contain it.
    int find(int row, int col) const {
        auto it = by_pos_.find(Variable{row, col});
        return it == by_pos_.end() ? -1 : it->second;
    }

    int id(int row, int col) const {
        const int v = find(row, col);
        if (v < 0)
            throw DomainError("variable x(" + std::to_string(row) + "," + std::to_string(col) +
                              ") is not in this ring");
        return v;
    }

    int find_name(const std::string& name) const {
        auto it = by_name_.find(name);
        return it == by_name_.end() ? -1 : it->second;
    }

    int compare(const Monomial& a, const Monomial& b) const {
        return order_.compare(a, b, nvars());
    }

private:
    F field_;
    MonomialOrder order_;
    int grid_n_;
    std::vector<Variable> vars_;
    std::vector<std::string> names_;
    std::map<std::string, int> by_name_;
    std::map<Variable, int> by_pos_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const Ring<F>>;

// Structural ring equality: same field, same variables in the same order,
// same monomial order.  Pointer identity is the common fast path.
template <CoefficientField F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->field() == b->field() && a->order() == b->order() &&
           a->grid_n() == b->grid_n() && a->variables() == b->variables();
}

template <CoefficientField F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    if (!same_ring(a, b)) throw RingMismatch("operands live in different rings");
}

// The full coordinate ring of n x n matrices: variables x_{ij} in row-major
// priority order (x11 > x12 > ... > xnn).
template <CoefficientField F>
RingPtr<F> make_grid_ring(int n, const F& field, MonomialOrder order = {}) {
    if (n < 1 || n * n > kMaxVars)
        throw DomainError("grid size out of range: " + std::to_string(n));
    std::vector<Variable> vars;
    vars.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) vars.push_back(Variable{i, j});
    return std::make_shared<Ring<F>>(field, order, n, std::move(vars));
}

// A subring of the n x n grid on an explicit ordered variable list.
template <CoefficientField F>
RingPtr<F> make_sub_ring(int grid_n, std::vector<Variable> vars, const F& field,
                         MonomialOrder order = {}) {
    return std::make_shared<Ring<F>>(field, order, grid_n, std::move(vars));
}

// The same ring under another monomial order.
template <CoefficientField F>
RingPtr<F> with_order(const RingPtr<F>& ring, MonomialOrder order) {
    if (ring->order() == order) return ring;
    return std::make_shared<Ring<F>>(ring->field(), order, ring->grid_n(), ring->variables());
}

// Extends a ring by `naux` auxiliary variables prepended ahead of the
// existing ones, under the block elimination order that makes the
// auxiliaries largest.  Existing variable ids shift up by naux.
template <CoefficientField F>
RingPtr<F> extend_with_aux(const RingPtr<F>& ring, int naux) {
    std::vector<Variable> vars;
    vars.reserve(ring->variables().size() + static_cast<std::size_t>(naux));
    for (int k = 1; k <= naux; ++k) vars.push_back(Variable{0, k});
    for (const Variable& v : ring->variables()) vars.push_back(v);
    MonomialOrder order{OrderKind::Block, naux};
    return std::make_shared<Ring<F>>(ring->field(), order, ring->grid_n(), std::move(vars));
}

} // namespace gtkit
