#pragma once

#include <string>

#include <protex/core/strictness.hpp>

namespace protex {

// Empty clause means the sequence is short exact.
struct SesVerdict {
    std::string failing_clause;

    bool pass() const { return failing_clause.empty(); }
};

// 0 -> X -f-> Y -g-> Z -> 0: g o f == 0, f is Ker(g) up to isomorphism and g
// is Coker(f) up to isomorphism. Clauses are checked in that order.
template <SolverCategory C>
SesVerdict validate_ses(const C& c, const typename C::Morphism& f, const typename C::Morphism& g) {
    if (!composable(c, f, g)) throw not_composable("validate_ses: codomain of f is not the domain of g");
    if (!is_zero_morphism(c, c.compose(g, f))) return {"compose_nonzero"};
    if (!isomorphic_over(c, c.kernel(g).map, f)) return {"not_kernel"};
    if (!isomorphic_under(c, c.cokernel(f).map, g)) return {"not_cokernel"};
    return {};
}

} // namespace protex
