#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <protex/core/category.hpp>
#include <protex/io/json_io.hpp>
#include <protex/weighted/classify.hpp>
#include <protex/weighted/random.hpp>

namespace protex {

// Weighted spaces over a valued field with non-expanding maps.
template <typename S>
class WeightedModules {
public:
    using Object = WeightedSpace<S>;
    using Morphism = BoundedMap<S>;
    using Sq = Square<Object, Morphism>;

    explicit WeightedModules(ValuedField<S> field): field_(field) {}

    const ValuedField<S>& field() const { return field_; }

    Object zero_object() const { return Object::zero(field_); }
    Morphism identity(const Object& x) const { return Morphism::identity(x); }
    Morphism zero_map(const Object& x, const Object& y) const { return Morphism::zero(x, y); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return protex::compose(g, f); }
    Object domain(const Morphism& f) const { return f.dom(); }
    Object codomain(const Morphism& f) const { return f.cod(); }
    bool same_object(const Object& a, const Object& b) const { return a == b; }
    bool equal(const Morphism& f, const Morphism& g) const { return f == g; }

    Universal<Object, Morphism> kernel(const Morphism& f) const {
        auto k = protex::kernel(f);
        return {k.object, k.inclusion};
    }
    Universal<Object, Morphism> cokernel(const Morphism& f) const {
        auto q = protex::cokernel(f);
        return {q.object, q.projection};
    }
    bool is_iso(const Morphism& f) const { return is_isomorphism(f); }

    Sq pullback(const Morphism& f, const Morphism& g) const {
        auto p = protex::pullback(f, g);
        return {p.object, p.to_first, p.to_second};
    }
    Sq pushout(const Morphism& i, const Morphism& g) const {
        auto p = protex::pushout(i, g);
        return {p.object, p.from_first, p.from_second};
    }

    std::optional<Morphism> lift_through_mono(const Morphism& m, const Morphism& f) const { return lift_through(m, f); }
    std::optional<Morphism> descend_through_epi(const Morphism& e, const Morphism& f) const { return descend_through(e, f); }
    std::optional<Morphism> pullback_mediator(const Sq& sq, const Morphism& a, const Morphism& b) const {
        return protex::pullback_mediator(Pullback<S>{sq.object, sq.first, sq.second}, a, b);
    }
    std::optional<Morphism> pushout_mediator(const Sq& sq, const Morphism& a, const Morphism& b) const {
        return protex::pushout_mediator(Pushout<S>{sq.object, sq.first, sq.second}, a, b);
    }

    bool native_strict_mono(const Morphism& f) const { return is_injective(f) && is_isometry(f); }
    bool native_strict_epi(const Morphism& f) const { return is_strict_epi_native(f); }

    std::string label() const { return "WeightedModules(" + field_.name() + ")"; }
    json object_json(const Object& x) const { return space_json(x); }
    json morphism_json(const Morphism& f) const { return map_json(f); }
    Object parse_object(const json& j) const { return check(parse_space<S>(j)); }
    Morphism parse_morphism(const json& j) const {
        auto f = parse_map<S>(j);
        check(f.dom());
        return f;
    }

private:
    const Object& check(const Object& x) const {
        if (!(x.field() == field_)) throw parse_error("space is over " + x.field().name() + ", instance is over " + field_.name());
        return x;
    }

    ValuedField<S> field_;
};

// Every weighted space over F_P of dimension at most max_dim with weights
// drawn from a finite set, up to reordering of the basis: objects carry
// their weights in increasing order. Hom-sets list every non-expanding matrix.
template <int P>
class FinWeightedVec: public WeightedModules<Fp<P>> {
public:
    using Base = WeightedModules<Fp<P>>;
    using typename Base::Object;
    using typename Base::Morphism;

    FinWeightedVec(std::vector<Magnitude> weight_set, int max_dim, std::size_t hom_budget = 1'000'000):
        Base(ValuedField<Fp<P>>::trivial()), weights_(std::move(weight_set)), max_dim_(max_dim), budget_(hom_budget)
    {
        std::sort(weights_.begin(), weights_.end());
        weights_.erase(std::unique(weights_.begin(), weights_.end()), weights_.end());
        if (max_dim_ < 0) throw invariant_violation("max_dim must be nonnegative");
    }

    const std::vector<Magnitude>& weight_set() const { return weights_; }
    int max_dim() const { return max_dim_; }

    std::vector<Object> objects() const {
        std::vector<Object> out;
        std::vector<std::size_t> idx;
        for (int d = 0; d <= (weights_.empty()? 0: max_dim_); ++d) {
            idx.assign(std::size_t(d), 0);
            for (;;) {
                std::vector<Magnitude> w;
                for (auto i: idx) w.push_back(weights_[i]);
                out.emplace_back(this->field(), std::move(w));
                // next nondecreasing index sequence
                int k = d - 1;
                while (k >= 0 && idx[std::size_t(k)] + 1 == weights_.size()) --k;
                if (k < 0 || weights_.empty()) break;
                ++idx[std::size_t(k)];
                for (int r = k + 1; r < d; ++r) idx[std::size_t(r)] = idx[std::size_t(k)];
            }
        }
        return out;
    }

    // Row-major lexicographic order of the matrix entries.
    std::vector<Morphism> morphisms(const Object& x, const Object& y) const {
        const auto entries = std::size_t(x.dim() * y.dim());
        if (double(entries) * std::log2(double(P)) > std::log2(double(budget_)) + 1e-9) {
            throw budget_exceeded("hom-set " + std::to_string(x.dim()) + " -> " + std::to_string(y.dim()) + " over F" + std::to_string(P) +
                                  " has more than " + std::to_string(budget_) + " candidate matrices");
        }
        std::vector<Morphism> out;
        std::vector<int> digit(entries, 0);
        Mat<Fp<P>> m(y.dim(), x.dim());
        for (;;) {
            for (std::size_t e = 0; e < entries; ++e) m(Index(e) / x.dim(), Index(e) % x.dim()) = Fp<P>(digit[e]);
            bool ok = true;
            for (Index i = 0; i < x.dim() && ok; ++i) {
                auto img = norm(y, Vec<Fp<P>>(m.col(i)));
                ok = x.weight(i).is_zero()? img.is_zero(): img <= x.weight(i);
            }
            if (ok) out.emplace_back(x, y, m);
            std::size_t k = entries;
            while (k > 0 && digit[k - 1] == P - 1) digit[--k] = 0;
            if (k == 0) break;
            ++digit[k - 1];
        }
        return out;
    }

    // Parsed spaces must draw their weights from the weight set. Dimension is
    // not bounded here: factorization stages may outgrow max_dim.
    Object parse_object(const json& j) const { return in_weight_set(Base::parse_object(j)); }
    Morphism parse_morphism(const json& j) const {
        auto f = Base::parse_morphism(j);
        in_weight_set(f.dom());
        in_weight_set(f.cod());
        return f;
    }

    std::string label() const {
        std::string w;
        for (auto& m: weights_) w += (w.empty()? "": ",") + m.str();
        return "FinWeightedVec(F" + std::to_string(P) + ", weights={" + w + "}, max_dim=" + std::to_string(max_dim_) + ")";
    }

    json bounds_json() const {
        json w = json::array();
        for (auto& m: weights_) w.push_back(m.str());
        return {{"instance", "weighted_vec"}, {"field", "F" + std::to_string(P)}, {"weights", w}, {"max_dim", max_dim_}, {"hom_budget", budget_}};
    }

private:
    const Object& in_weight_set(const Object& x) const {
        for (auto& w: x.weights()) {
            if (!std::binary_search(weights_.begin(), weights_.end(), w)) throw parse_error("weight " + w.str() + " is not in the weight set of " + label());
        }
        return x;
    }

    std::vector<Magnitude> weights_;
    int max_dim_;
    std::size_t budget_;
};

// Random diagrams over the p-adic rationals for sampled audits.
class WeightedSampler {
public:
    using Space = WeightedSpace<Rational>;
    using Map = BoundedMap<Rational>;

    WeightedSampler(unsigned prime, std::uint64_t seed, RandomModules::Options opt = {}): gen_(prime, seed, opt) {}

    RandomModules& generator() { return gen_; }

    Space object() { return gen_.space(gen_.uniform(0, 3)); }
    Map morphism(const Space& x, const Space& y) { return gen_.map(x, y); }
    Map morphism_into(const Space& y) { return gen_.map(object(), y); }
    Map morphism_from(const Space& x) { return gen_.map(x, object()); }
    Map strict_mono_into(const Space& y) { return gen_.strict_mono_into(y); }
    Map strict_epi_from(const Space& x) { return gen_.strict_epi_from(x); }

    // (i, j) with j o i a strict mono: i = (m, h) into C + D, j the projection
    // to C, both conjugated by an isometric automorphism of C + D.
    std::pair<Map, Map> mono_factorization() {
        auto m = gen_.strict_mono_into(object());
        const auto& a = m.dom();
        auto d = object();
        auto h = gen_.map(a, d);
        auto bp = biproduct(m.cod(), d);
        std::vector<Map> comps{m, h};
        auto i = product_mediator(bp, std::span<const Map>(comps));
        auto j = bp.projections[0];
        return twist(i, j);
    }

    // (j, e) with e o j a strict epi: q = e o j for a strict epi q: A -> C,
    // either j = (q, h) with e the projection, or j = (q, 0) with e = (id, k).
    std::pair<Map, Map> epi_factorization() {
        auto q = gen_.strict_epi_from(object());
        const auto& c = q.cod();
        auto d = object();
        auto bp = biproduct(c, d);
        Map h = Map::zero(q.dom(), d);
        Map k = Map::zero(d, c);
        if (gen_.chance(0.5)) h = gen_.map(q.dom(), d);
        else k = gen_.map(d, c);
        std::vector<Map> js{q, h};
        std::vector<Map> es{Map::identity(c), k};
        auto j = product_mediator(bp, std::span<const Map>(js));
        auto e = coproduct_mediator(bp, std::span<const Map>(es));
        return twist(j, e);
    }

private:
    // (phi o first, second o phi^-1) for an isometric automorphism phi.
    std::pair<Map, Map> twist(const Map& first, const Map& second) {
        auto phi = gen_.isometric_automorphism(first.cod());
        auto inv = inverse_map(phi);
        return {compose(phi, first), compose(second, *inv)};
    }

    RandomModules gen_;
};

} // namespace protex
