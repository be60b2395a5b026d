#pragma once

#include <utility>
#include <vector>

#include "fields.hpp"

namespace gtkit {

// Dense exact matrix over a coefficient field, row-major.  Sized for the
// Koszul graded pieces and Jacobian evaluations this toolkit produces;
// elimination is fraction-free in spirit only (the field arithmetic is exact,
// so there is no stability concern and the first nonzero pivot works).
template <CoefficientField F>
class DenseMatrix {
public:
    using Elem = typename F::Elem;

    DenseMatrix(const F& field, std::size_t rows, std::size_t cols)
        : field_(&field), rows_(rows), cols_(cols),
          a_(rows * cols, field.zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    // Rank by Gaussian elimination with the first nonzero pivot per column.
    // Consumes a working copy; the matrix itself is left untouched.
    int rank() const {
        const F& f = *field_;
        std::vector<Elem> w = a_;
        auto at_w = [&](std::size_t r, std::size_t c) -> Elem& {
            return w[r * cols_ + c];
        };
        std::size_t row = 0;
        int rk = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pivot = rows_;
            for (std::size_t r = row; r < rows_; ++r) {
                if (!f.is_zero(at_w(r, col))) {
                    pivot = r;
                    break;
                }
            }
            if (pivot == rows_) continue;
            if (pivot != row) {
                for (std::size_t c = col; c < cols_; ++c) {
                    std::swap(at_w(pivot, c), at_w(row, c));
                }
            }
            const Elem inv_p = f.inv(at_w(row, col));
            for (std::size_t r = row + 1; r < rows_; ++r) {
                if (f.is_zero(at_w(r, col))) continue;
                const Elem factor = f.mul(at_w(r, col), inv_p);
                at_w(r, col) = f.zero();
                for (std::size_t c = col + 1; c < cols_; ++c) {
                    at_w(r, c) = f.sub(at_w(r, c), f.mul(factor, at_w(row, c)));
                }
            }
            ++row;
            ++rk;
        }
        return rk;
    }

    // True when every entry of (this * other) vanishes.
    bool product_is_zero(const DenseMatrix& other) const {
        const F& f = *field_;
        if (cols_ != other.rows_) throw DomainError("product_is_zero: shape mismatch");
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < other.cols_; ++c) {
                Elem s = f.zero();
                for (std::size_t k = 0; k < cols_; ++k) {
                    s = f.add(s, f.mul(at(r, k), other.at(k, c)));
                }
                if (!f.is_zero(s)) return false;
            }
        }
        return true;
    }

private:
    const F* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> a_;
};

}  // namespace gtkit
