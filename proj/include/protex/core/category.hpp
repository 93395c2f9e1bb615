#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace protex {

using json = nlohmann::json;

// An object with its structure map: Ker(f) -> X or Y -> Coker(f).
template <typename Object, typename Morphism>
struct Universal {
    Object object;
    Morphism map;
};

// Pullback of X -> Z <- Y, legs P -> X and P -> Y.
// Pushout of X <- K -> Y, legs X -> P and Y -> P.
template <typename Object, typename Morphism>
struct Square {
    Object object;
    Morphism first;
    Morphism second;
};

// The contract every instance satisfies. compose(g, f) is g after f.
// lift_through_mono(m, f) returns some u with m o u == f and
// descend_through_epi(e, f) some u with u o e == f; both are unique when m is
// mono (resp. e is epi). The mediators return the induced map into the
// pullback (out of the pushout) or nothing when the cone does not commute.
template <typename C>
concept PointedCategory = requires(const C& c, const typename C::Object& x, const typename C::Morphism& f, const json& j) {
    { c.zero_object() } -> std::convertible_to<typename C::Object>;
    { c.identity(x) } -> std::convertible_to<typename C::Morphism>;
    { c.zero_map(x, x) } -> std::convertible_to<typename C::Morphism>;
    { c.compose(f, f) } -> std::convertible_to<typename C::Morphism>;
    { c.domain(f) } -> std::convertible_to<typename C::Object>;
    { c.codomain(f) } -> std::convertible_to<typename C::Object>;
    { c.same_object(x, x) } -> std::convertible_to<bool>;
    { c.equal(f, f) } -> std::convertible_to<bool>;
    { c.kernel(f) } -> std::convertible_to<Universal<typename C::Object, typename C::Morphism>>;
    { c.cokernel(f) } -> std::convertible_to<Universal<typename C::Object, typename C::Morphism>>;
    { c.is_iso(f) } -> std::convertible_to<bool>;
    { c.pullback(f, f) } -> std::convertible_to<Square<typename C::Object, typename C::Morphism>>;
    { c.pushout(f, f) } -> std::convertible_to<Square<typename C::Object, typename C::Morphism>>;
    { c.label() } -> std::convertible_to<std::string>;
    { c.object_json(x) } -> std::convertible_to<json>;
    { c.morphism_json(f) } -> std::convertible_to<json>;
    { c.parse_object(j) } -> std::convertible_to<typename C::Object>;
    { c.parse_morphism(j) } -> std::convertible_to<typename C::Morphism>;
};

template <typename C>
concept SolverCategory = PointedCategory<C> && requires(const C& c, const typename C::Morphism& f,
                                                        const Square<typename C::Object, typename C::Morphism>& sq) {
    { c.lift_through_mono(f, f) } -> std::convertible_to<std::optional<typename C::Morphism>>;
    { c.descend_through_epi(f, f) } -> std::convertible_to<std::optional<typename C::Morphism>>;
    { c.pullback_mediator(sq, f, f) } -> std::convertible_to<std::optional<typename C::Morphism>>;
    { c.pushout_mediator(sq, f, f) } -> std::convertible_to<std::optional<typename C::Morphism>>;
};

// Finitely many objects within the instance's bounds, and complete,
// duplicate-free hom-sets. morphisms() throws budget_exceeded.
template <typename C>
concept EnumerableCategory = SolverCategory<C> && requires(const C& c, const typename C::Object& x) {
    { c.objects() } -> std::convertible_to<std::vector<typename C::Object>>;
    { c.morphisms(x, x) } -> std::convertible_to<std::vector<typename C::Morphism>>;
    { c.bounds_json() } -> std::convertible_to<json>;
};

// Instances that know their strict classes in closed form.
template <typename C>
concept NativeStrictness = PointedCategory<C> && requires(const C& c, const typename C::Morphism& f) {
    { c.native_strict_mono(f) } -> std::convertible_to<bool>;
    { c.native_strict_epi(f) } -> std::convertible_to<bool>;
};

// Seeded generators of random diagrams for instances too large to enumerate.
// mono_factorization() returns (i, j) with j o i a strict mono and
// epi_factorization() returns (j, e) with e o j a strict epi.
template <typename R, typename C>
concept DiagramSampler = requires(R& r, const typename C::Object& x) {
    { r.object() } -> std::convertible_to<typename C::Object>;
    { r.morphism(x, x) } -> std::convertible_to<typename C::Morphism>;
    { r.morphism_into(x) } -> std::convertible_to<typename C::Morphism>;
    { r.morphism_from(x) } -> std::convertible_to<typename C::Morphism>;
    { r.strict_mono_into(x) } -> std::convertible_to<typename C::Morphism>;
    { r.strict_epi_from(x) } -> std::convertible_to<typename C::Morphism>;
    { r.mono_factorization() } -> std::convertible_to<std::pair<typename C::Morphism, typename C::Morphism>>;
    { r.epi_factorization() } -> std::convertible_to<std::pair<typename C::Morphism, typename C::Morphism>>;
};

template <PointedCategory C>
bool is_zero_morphism(const C& c, const typename C::Morphism& f) {
    return c.equal(f, c.zero_map(c.domain(f), c.codomain(f)));
}

template <PointedCategory C>
bool composable(const C& c, const typename C::Morphism& f, const typename C::Morphism& g) {
    return c.same_object(c.codomain(f), c.domain(g));
}

} // namespace protex
