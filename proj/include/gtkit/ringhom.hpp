#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace gtkit {

// A ring homomorphism fixing the coefficient field: each source variable is
// sent to a polynomial in the destination ring.  Every source variable must
// have an image, so the map is total on its domain.
template <CoefficientField F>
class RingHom {
public:
    RingHom(std::string name, RingPtr<F> src, RingPtr<F> dst,
            std::vector<Polynomial<F>> images)
        : name_(std::move(name)), src_(std::move(src)), dst_(std::move(dst)),
          images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != src_->nvars())
            throw DomainError("ring hom needs one image per source variable");
        for (const auto& im : images_) require_same_ring(im.ring(), dst_);
        var_map_.assign(images_.size(), -1);
        linear_ = true;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            const auto& im = images_[i];
            if (im.size() == 1 && im.terms()[0].m.deg == 1 &&
                dst_->field().is_zero(dst_->field().sub(im.terms()[0].c, dst_->field().one()))) {
                for (int j = 0; j < dst_->nvars(); ++j)
                    if (im.terms()[0].m[j] == 1) var_map_[i] = j;
            } else {
                linear_ = false;
            }
        }
    }

    const std::string& name() const { return name_; }
    const RingPtr<F>& source() const { return src_; }
    const RingPtr<F>& target() const { return dst_; }
    const std::vector<Polynomial<F>>& images() const { return images_; }
    const Polynomial<F>& image(int src_var) const {
        return images_[static_cast<std::size_t>(src_var)];
    }

    // True when every variable maps to a single destination variable; such
    // maps act by exponent relabelling.
    bool is_variable_map() const { return linear_; }

    Polynomial<F> apply(const Polynomial<F>& p) const {
        require_same_ring(p.ring(), src_);
        if (linear_) {
            std::vector<typename Polynomial<F>::Term> out;
            out.reserve(p.size());
            const int nv = src_->nvars();
            for (const auto& t : p.terms()) {
                Monomial m;
                for (int i = 0; i < nv; ++i) {
                    const int e = t.m[i];
                    if (e) m.set(var_map_[static_cast<std::size_t>(i)],
                                 m[var_map_[static_cast<std::size_t>(i)]] + e);
                }
                out.push_back(typename Polynomial<F>::Term{m, t.c});
            }
            return Polynomial<F>::from_terms(dst_, std::move(out));
        }
        const F& f = dst_->field();
        const int nv = src_->nvars();
        Polynomial<F> acc = Polynomial<F>::zero(dst_);
        for (const auto& t : p.terms()) {
            Polynomial<F> prod = Polynomial<F>::constant(dst_, t.c);
            for (int i = 0; i < nv; ++i) {
                const int e = t.m[i];
                if (e) prod = prod * images_[static_cast<std::size_t>(i)].pow(e);
            }
            acc = acc + prod;
        }
        (void)f;
        return acc;
    }

    // this ∘ inner : first apply `inner`, then this map.
    RingHom compose(const RingHom& inner) const {
        if (!same_ring(inner.target(), src_))
            throw RingMismatch("hom composition: inner target differs from outer source");
        std::vector<Polynomial<F>> ims;
        ims.reserve(inner.images().size());
        for (const auto& im : inner.images()) ims.push_back(apply(im));
        return RingHom(name_ + "." + inner.name_, inner.source(), dst_, std::move(ims));
    }

private:
    std::string name_;
    RingPtr<F> src_;
    RingPtr<F> dst_;
    std::vector<Polynomial<F>> images_;
    std::vector<int> var_map_;
    bool linear_ = false;
};

// Convenience builder for variable-to-variable maps given by grid positions.
template <CoefficientField F, class PosMap>
RingHom<F> variable_hom(std::string name, const RingPtr<F>& src, const RingPtr<F>& dst,
                        PosMap&& pos) {
    std::vector<Polynomial<F>> images;
    images.reserve(static_cast<std::size_t>(src->nvars()));
    for (int i = 0; i < src->nvars(); ++i) {
        const Variable v = src->variable(i);
        const auto [r, c] = pos(v.row, v.col);
        images.push_back(Polynomial<F>::variable(dst, dst->id(r, c)));
    }
    return RingHom<F>(std::move(name), src, dst, std::move(images));
}

} // namespace gtkit
