#pragma once

#include <string_view>

#include <protex/core/category.hpp>
#include <protex/errors.hpp>

namespace protex {

enum class Strictness { neither, strict_mono, strict_epi, both };

inline std::string_view to_string(Strictness s) {
    switch (s) {
    case Strictness::neither: return "neither";
    case Strictness::strict_mono: return "strict_mono";
    case Strictness::strict_epi: return "strict_epi";
    case Strictness::both: return "both";
    }
    return "?";
}

struct StrictFlags {
    bool strict_mono = false;
    bool strict_epi = false;

    Strictness kind() const {
        if (strict_mono && strict_epi) return Strictness::both;
        if (strict_mono) return Strictness::strict_mono;
        if (strict_epi) return Strictness::strict_epi;
        return Strictness::neither;
    }
    friend bool operator==(const StrictFlags&, const StrictFlags&) = default;
};

// f and e share a domain and e is epi: the unique u with u o e == f exists
// and is an isomorphism.
template <SolverCategory C>
bool isomorphic_under(const C& c, const typename C::Morphism& e, const typename C::Morphism& f) {
    auto u = c.descend_through_epi(e, f);
    return u && c.equal(c.compose(*u, e), f) && c.is_iso(*u);
}

// f and m share a codomain and m is mono: the unique u with m o u == f exists
// and is an isomorphism.
template <SolverCategory C>
bool isomorphic_over(const C& c, const typename C::Morphism& m, const typename C::Morphism& f) {
    auto u = c.lift_through_mono(m, f);
    return u && c.equal(c.compose(m, *u), f) && c.is_iso(*u);
}

// f is isomorphic to X -> Coker(Ker(f) -> X).
template <SolverCategory C>
bool strict_epi_by_kernel(const C& c, const typename C::Morphism& f) {
    auto k = c.kernel(f);
    auto q = c.cokernel(k.map);
    return isomorphic_under(c, q.map, f);
}

// f is isomorphic to Ker(Y -> Coker(f)) -> Y.
template <SolverCategory C>
bool strict_mono_by_cokernel(const C& c, const typename C::Morphism& f) {
    auto q = c.cokernel(f);
    auto k = c.kernel(q.map);
    return isomorphic_over(c, k.map, f);
}

// Strictness from kernels and cokernels alone. Instances without a solver
// for the comparison maps cannot answer.
template <PointedCategory C>
StrictFlags classify_strictness(const C& c, const typename C::Morphism& f) {
    if constexpr (SolverCategory<C>) {
        return {strict_mono_by_cokernel(c, f), strict_epi_by_kernel(c, f)};
    }
    else {
        (void)c;
        (void)f;
        throw solver_unavailable("classify_strictness: instance " + c.label() + " has no mediating-map solver");
    }
}

// The instance's own classifier when it has one, the generic one otherwise.
template <PointedCategory C>
StrictFlags strictness(const C& c, const typename C::Morphism& f) {
    if constexpr (NativeStrictness<C>) {
        return {bool(c.native_strict_mono(f)), bool(c.native_strict_epi(f))};
    }
    else {
        return classify_strictness(c, f);
    }
}

// Some g: K -> X within the enumeration bounds has f o g == 0 and f is
// isomorphic to X -> Coker(g).
template <EnumerableCategory C>
bool strict_epi_by_some_cokernel(const C& c, const typename C::Morphism& f) {
    const auto x = c.domain(f);
    for (const auto& k: c.objects()) {
        for (const auto& g: c.morphisms(k, x)) {
            if (!is_zero_morphism(c, c.compose(f, g))) continue;
            if (isomorphic_under(c, c.cokernel(g).map, f)) return true;
        }
    }
    return false;
}

template <EnumerableCategory C>
bool strict_mono_by_some_kernel(const C& c, const typename C::Morphism& f) {
    const auto y = c.codomain(f);
    for (const auto& z: c.objects()) {
        for (const auto& g: c.morphisms(y, z)) {
            if (!is_zero_morphism(c, c.compose(g, f))) continue;
            if (isomorphic_over(c, c.kernel(g).map, f)) return true;
        }
    }
    return false;
}

// (h, f) is a strict pair for some h within bounds: h is isomorphic to
// Ker(f) and f to Coker(h).
template <EnumerableCategory C>
bool strict_epi_by_pair(const C& c, const typename C::Morphism& f) {
    const auto x = c.domain(f);
    const auto k = c.kernel(f);
    for (const auto& w: c.objects()) {
        for (const auto& h: c.morphisms(w, x)) {
            if (!isomorphic_over(c, k.map, h)) continue;
            if (isomorphic_under(c, c.cokernel(h).map, f)) return true;
        }
    }
    return false;
}

template <EnumerableCategory C>
bool strict_mono_by_pair(const C& c, const typename C::Morphism& f) {
    const auto y = c.codomain(f);
    const auto q = c.cokernel(f);
    for (const auto& z: c.objects()) {
        for (const auto& g: c.morphisms(y, z)) {
            if (!isomorphic_under(c, q.map, g)) continue;
            if (isomorphic_over(c, c.kernel(g).map, f)) return true;
        }
    }
    return false;
}

} // namespace protex
