#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <protex/scalars/field.hpp>
#include <protex/scalars/magnitude.hpp>
#include <protex/weighted/linalg.hpp>

namespace protex {

// A finite-dimensional module with a fixed basis e_0..e_{n-1} and norm
//   rho(x) = max_i |x_i| * weights[i].
// Zero weights are allowed and mark null directions of a semi-norm.
template <typename S>
class WeightedSpace {
public:
    using Scalar = S;

    WeightedSpace() = default;

    WeightedSpace(ValuedField<S> field, std::vector<Magnitude> weights, std::string label = {}):
        field_(field), weights_(std::move(weights)), label_(std::move(label))
    {}

    static WeightedSpace zero(ValuedField<S> field) { return WeightedSpace(field, {}); }

    // Rank-one space R_delta: the base field with |.| scaled by delta.
    static WeightedSpace r_delta(ValuedField<S> field, Magnitude delta) {
        return WeightedSpace(field, {delta});
    }

    Index dim() const { return Index(weights_.size()); }
    const ValuedField<S>& field() const { return field_; }
    const std::vector<Magnitude>& weights() const { return weights_; }
    const Magnitude& weight(Index i) const { return weights_[std::size_t(i)]; }
    const std::string& label() const { return label_; }

    bool has_null_directions() const {
        for (auto& w: weights_) if (w.is_zero()) return true;
        return false;
    }

    Vec<S> basis_vector(Index i) const {
        Vec<S> v = Vec<S>::Zero(dim());
        v(i) = S(1);
        return v;
    }

    // Presentation identity; the label is descriptive only.
    friend bool operator==(const WeightedSpace& a, const WeightedSpace& b) {
        return a.field_ == b.field_ && a.weights_ == b.weights_;
    }

private:
    ValuedField<S> field_ = ValuedField<S>::trivial();
    std::vector<Magnitude> weights_;
    std::string label_;
};

template <typename S>
Magnitude norm(const WeightedSpace<S>& space, const Vec<S>& v) {
    if (v.size() != space.dim()) {
        throw std::invalid_argument("vector of length " + std::to_string(v.size()) + " in a space of dimension " + std::to_string(space.dim()));
    }
    Magnitude out;
    for (Index i = 0; i < v.size(); ++i) {
        if (v(i) == S(0)) continue;
        out = max(out, space.field().abs(v(i)) * space.weight(i));
    }
    return out;
}

template <typename S>
WeightedSpace<S> rescale(const WeightedSpace<S>& space, const Magnitude& delta) {
    if (delta.is_zero()) throw std::invalid_argument("rescale by the zero magnitude");
    std::vector<Magnitude> w;
    w.reserve(space.weights().size());
    for (auto& x: space.weights()) w.push_back(x * delta);
    return WeightedSpace<S>(space.field(), std::move(w), space.label());
}

} // namespace protex
