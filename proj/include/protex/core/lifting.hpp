#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <protex/core/strictness.hpp>

namespace protex {

// A commutative square f o u == v o a with a = against[generator].
template <typename Morphism>
struct LiftingProblem {
    std::size_t generator;
    Morphism u;   // A -> X
    Morphism v;   // B -> Y
};

template <typename Morphism>
struct LiftingVerdict {
    bool holds = true;
    std::size_t squares = 0;                        // commutative squares examined
    std::optional<LiftingProblem<Morphism>> unfilled;
};

// Some d: B -> X with d o a == u and f o d == v, searched by enumeration.
template <EnumerableCategory C>
std::optional<typename C::Morphism> find_filler(const C& c, const typename C::Morphism& f, const typename C::Morphism& a,
                                                const typename C::Morphism& u, const typename C::Morphism& v) {
    for (auto& d: c.morphisms(c.codomain(a), c.domain(f))) {
        if (c.equal(c.compose(d, a), u) && c.equal(c.compose(f, d), v)) return d;
    }
    return std::nullopt;
}

// Right lifting property of f: X -> Y against each a: A -> B in `against`.
// Squares are visited in order of (generator index, u, v) with u and v in
// enumeration order, so the reported unfilled square is the first one.
template <EnumerableCategory C>
LiftingVerdict<typename C::Morphism> has_rlp(const C& c, const typename C::Morphism& f, std::span<const typename C::Morphism> against,
                                             std::size_t budget = 100'000'000) {
    LiftingVerdict<typename C::Morphism> out;
    const auto x = c.domain(f);
    const auto y = c.codomain(f);
    for (std::size_t k = 0; k < against.size(); ++k) {
        const auto& a = against[k];
        const auto us = c.morphisms(c.domain(a), x);
        const auto vs = c.morphisms(c.codomain(a), y);
        const auto ds = c.morphisms(c.codomain(a), x);
        for (auto& u: us) {
            const auto fu = c.compose(f, u);
            for (auto& v: vs) {
                if (!c.equal(fu, c.compose(v, a))) continue;
                if (++out.squares > budget) throw budget_exceeded("has_rlp: more than " + std::to_string(budget) + " squares");
                bool filled = false;
                for (auto& d: ds) {
                    if (c.equal(c.compose(d, a), u) && c.equal(c.compose(f, d), v)) {
                        filled = true;
                        break;
                    }
                }
                if (!filled) {
                    out.holds = false;
                    out.unfilled = LiftingProblem<typename C::Morphism>{k, u, v};
                    return out;
                }
            }
        }
    }
    return out;
}

// Every strict mono between enumerated objects, in enumeration order.
template <EnumerableCategory C>
std::vector<typename C::Morphism> admissible_monos(const C& c) {
    std::vector<typename C::Morphism> out;
    auto objs = c.objects();
    for (auto& a: objs) {
        for (auto& b: objs) {
            for (auto& f: c.morphisms(a, b)) {
                if (strictness(c, f).strict_mono) out.push_back(f);
            }
        }
    }
    return out;
}

// I -> 0 lifts against every admissible mono within bounds: every map A -> I
// extends along every strict mono A -> B.
template <EnumerableCategory C>
LiftingVerdict<typename C::Morphism> is_injective_object(const C& c, const typename C::Object& i, std::span<const typename C::Morphism> monos,
                                                         std::size_t budget = 100'000'000) {
    return has_rlp(c, c.zero_map(i, c.zero_object()), monos, budget);
}

template <EnumerableCategory C>
LiftingVerdict<typename C::Morphism> is_injective_object(const C& c, const typename C::Object& i) {
    auto monos = admissible_monos(c);
    return is_injective_object(c, i, std::span<const typename C::Morphism>(monos));
}

} // namespace protex
