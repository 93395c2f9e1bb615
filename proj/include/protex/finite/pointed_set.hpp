#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <protex/core/category.hpp>

namespace protex {

// {0, 1, ..., size} with basepoint 0.
struct PointedSet {
    int size = 0;   // number of non-base elements

    friend bool operator==(const PointedSet&, const PointedSet&) = default;
};

// Basepoint-preserving map; images[x] is the image of x, images[0] == 0.
class PointedMap {
public:
    PointedMap(int dom, int cod, std::vector<int> images);

    int dom() const { return dom_; }
    int cod() const { return cod_; }
    const std::vector<int>& images() const { return images_; }
    int operator()(int x) const { return images_[std::size_t(x)]; }

    friend bool operator==(const PointedMap&, const PointedMap&) = default;

private:
    int dom_, cod_;
    std::vector<int> images_;
};

bool is_injective(const PointedMap& f);
bool is_surjective(const PointedMap& f);
// Surjective, and injective on the elements not sent to the basepoint.
bool is_strict_epi_closed_form(const PointedMap& f);

// Finite pointed sets with at most max_elements non-base elements.
class FinPointedSets {
public:
    using Object = PointedSet;
    using Morphism = PointedMap;

    explicit FinPointedSets(int max_elements = 4, std::size_t hom_budget = 1'000'000);

    int max_elements() const { return max_; }

    PointedSet zero_object() const { return {0}; }
    PointedMap identity(const PointedSet& x) const;
    PointedMap zero_map(const PointedSet& x, const PointedSet& y) const;
    PointedMap compose(const PointedMap& g, const PointedMap& f) const;
    PointedSet domain(const PointedMap& f) const { return {f.dom()}; }
    PointedSet codomain(const PointedMap& f) const { return {f.cod()}; }
    bool same_object(const PointedSet& a, const PointedSet& b) const { return a == b; }
    bool equal(const PointedMap& f, const PointedMap& g) const { return f == g; }

    // Ker(f) is the fibre of the basepoint; Coker(f) collapses the image.
    Universal<PointedSet, PointedMap> kernel(const PointedMap& f) const;
    Universal<PointedSet, PointedMap> cokernel(const PointedMap& f) const;
    bool is_iso(const PointedMap& f) const;

    // Pairs (x, y) with f(x) == g(y) in lexicographic order.
    Square<PointedSet, PointedMap> pullback(const PointedMap& f, const PointedMap& g) const;
    // Wedge of the two codomains modulo i(k) ~ g(k); classes numbered by first
    // appearance, first codomain before second.
    Square<PointedSet, PointedMap> pushout(const PointedMap& i, const PointedMap& g) const;

    std::optional<PointedMap> lift_through_mono(const PointedMap& m, const PointedMap& f) const;
    std::optional<PointedMap> descend_through_epi(const PointedMap& e, const PointedMap& f) const;
    std::optional<PointedMap> pullback_mediator(const Square<PointedSet, PointedMap>& sq, const PointedMap& a, const PointedMap& b) const;
    std::optional<PointedMap> pushout_mediator(const Square<PointedSet, PointedMap>& sq, const PointedMap& a, const PointedMap& b) const;

    bool native_strict_mono(const PointedMap& f) const { return is_injective(f); }
    bool native_strict_epi(const PointedMap& f) const { return is_strict_epi_closed_form(f); }

    std::vector<PointedSet> objects() const;
    // All (cod + 1)^dom maps, lexicographic in images[1..dom].
    std::vector<PointedMap> morphisms(const PointedSet& x, const PointedSet& y) const;

    std::string label() const;
    json bounds_json() const;
    json object_json(const PointedSet& x) const;
    json morphism_json(const PointedMap& f) const;
    PointedSet parse_object(const json& j) const;
    PointedMap parse_morphism(const json& j) const;

private:
    int max_;
    std::size_t budget_;
};

} // namespace protex
