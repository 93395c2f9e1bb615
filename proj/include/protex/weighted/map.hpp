#pragma once

#include <string>
#include <utility>

#include <protex/errors.hpp>
#include <protex/weighted/space.hpp>

namespace protex {

// max_i rho(f e_i) / w_i over non-null i. Since the standard basis is
// orthogonal this is the supremum of rho(f x) / rho(x).
// Throws unbounded_map if a null direction has an image of nonzero norm.
template <typename S>
Magnitude operator_norm(const WeightedSpace<S>& dom, const WeightedSpace<S>& cod, const Mat<S>& m) {
    Magnitude out;
    for (Index i = 0; i < dom.dim(); ++i) {
        auto image = norm(cod, Vec<S>(m.col(i)));
        if (dom.weight(i).is_zero()) {
            if (!image.is_zero()) throw unbounded_map(std::size_t(i));
            continue;
        }
        out = max(out, image / dom.weight(i));
    }
    return out;
}

// A linear map between weighted spaces given by its matrix
// (codomain.dim() x domain.dim()). Construction rejects maps that send a null
// direction to something of nonzero norm.
template <typename S>
class BoundedMap {
public:
    using Scalar = S;

    BoundedMap(WeightedSpace<S> dom, WeightedSpace<S> cod, Mat<S> matrix):
        dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(matrix))
    {
        if (!(dom_.field() == cod_.field())) throw invariant_violation("domain and codomain are over different fields");
        if (m_.rows() != cod_.dim() || m_.cols() != dom_.dim()) {
            throw invariant_violation("matrix is " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) +
                ", expected " + std::to_string(cod_.dim()) + "x" + std::to_string(dom_.dim()));
        }
        for (Index i = 0; i < dom_.dim(); ++i) {
            if (dom_.weight(i).is_zero() && !norm(cod_, Vec<S>(m_.col(i))).is_zero()) {
                throw invariant_violation("null basis direction " + std::to_string(i) + " of the domain has an image of nonzero norm");
            }
        }
    }

    static BoundedMap identity(const WeightedSpace<S>& x) {
        return BoundedMap(x, x, Mat<S>::Identity(x.dim(), x.dim()));
    }

    static BoundedMap zero(const WeightedSpace<S>& x, const WeightedSpace<S>& y) {
        return BoundedMap(x, y, Mat<S>::Zero(y.dim(), x.dim()));
    }

    const WeightedSpace<S>& dom() const { return dom_; }
    const WeightedSpace<S>& cod() const { return cod_; }
    const Mat<S>& matrix() const { return m_; }

    Vec<S> operator()(const Vec<S>& x) const { return m_ * x; }

    bool is_zero() const { return exactly_zero(m_); }

    friend bool operator==(const BoundedMap& a, const BoundedMap& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.m_ == b.m_;
    }

private:
    WeightedSpace<S> dom_, cod_;
    Mat<S> m_;
};

template <typename S>
Magnitude operator_norm(const BoundedMap<S>& f) {
    return operator_norm(f.dom(), f.cod(), f.matrix());
}

template <typename S>
bool is_non_expanding(const BoundedMap<S>& f) {
    return operator_norm(f) <= Magnitude::one();
}

// g after f.
template <typename S>
BoundedMap<S> compose(const BoundedMap<S>& g, const BoundedMap<S>& f) {
    if (!(f.cod() == g.dom())) throw not_composable("codomain of the first map differs from the domain of the second");
    return BoundedMap<S>(f.dom(), g.cod(), g.matrix() * f.matrix());
}

template <typename S>
BoundedMap<S> operator*(const BoundedMap<S>& g, const BoundedMap<S>& f) { return compose(g, f); }

} // namespace protex
