#pragma once

#include <optional>

#include <protex/weighted/constructions.hpp>

namespace protex {

struct Classification {
    bool mono = false;
    bool epi = false;
    bool strict_mono = false;
    bool strict_epi = false;
    bool iso = false;
    bool split_mono = false;
    bool split_epi = false;

    friend bool operator==(const Classification&, const Classification&) = default;
};

template <typename S>
bool is_injective(const BoundedMap<S>& f) { return rank(f.matrix()) == f.dom().dim(); }

template <typename S>
bool is_surjective(const BoundedMap<S>& f) { return rank(f.matrix()) == f.cod().dim(); }

// rho(f x) == rho(x) for every x. Orthogonalizing the columns of f while
// tracking preimages u_j of the image basis v_j reduces this to finitely many
// checks: rho(u_j) <= rho(v_j), null image vectors and kernel relations have
// preimages of norm zero. Each failed check is itself a witness x.
template <typename S>
bool is_isometry(const BoundedMap<S>& f) {
    if (!is_non_expanding(f)) return false;
    auto cols = columns_of(f.matrix());
    auto t = orthogonalize_tracked(f.cod(), std::span<const Vec<S>>(cols));
    for (std::size_t j = 0; j < t.basis.vectors.size(); ++j) {
        if (norm(f.dom(), t.coefficients[j]) > norm(f.cod(), t.basis.vectors[j])) return false;
    }
    for (auto& u: t.null_coefficients) {
        if (!norm(f.dom(), u).is_zero()) return false;
    }
    for (auto& z: t.relations) {
        if (!norm(f.dom(), z).is_zero()) return false;
    }
    return true;
}

// Non-expanding s with f o s == id, built from minimal-norm preimages of the
// codomain basis. One exists iff f is a strict epimorphism.
template <typename S>
std::optional<BoundedMap<S>> nonexpanding_section(const BoundedMap<S>& f) {
    const auto& y = f.cod();
    auto pre = solve(f.matrix(), Mat<S>(Mat<S>::Identity(y.dim(), y.dim())));
    if (!pre) return std::nullopt;
    auto ker = orthogonalize(f.dom(), Mat<S>(nullspace(f.matrix())));
    Mat<S> s(f.dom().dim(), y.dim());
    for (Index j = 0; j < y.dim(); ++j) s.col(j) = reduce(ker, Vec<S>(pre->col(j)));
    try {
        BoundedMap<S> sec(y, f.dom(), std::move(s));
        if (!is_non_expanding(sec)) return std::nullopt;
        return sec;
    }
    catch (const invariant_violation&) {
        return std::nullopt;
    }
}

// Non-expanding r with r o f == id: undo f on the orthogonalized image and
// kill the complementary standard coordinates. One exists iff f is an
// injective isometry.
template <typename S>
std::optional<BoundedMap<S>> nonexpanding_retraction(const BoundedMap<S>& f) {
    auto cols = columns_of(f.matrix());
    auto t = orthogonalize_tracked(f.cod(), std::span<const Vec<S>>(cols));
    if (!t.relations.empty()) return std::nullopt;
    const auto& y = f.cod();
    auto piv = t.basis.all_pivots();
    Mat<S> b(y.dim(), y.dim());
    Mat<S> r = Mat<S>::Zero(f.dom().dim(), y.dim());
    Index k = 0;
    for (std::size_t j = 0; j < t.basis.vectors.size(); ++j, ++k) {
        b.col(k) = t.basis.vectors[j];
        r.col(k) = t.coefficients[j];
    }
    for (std::size_t j = 0; j < t.basis.null_vectors.size(); ++j, ++k) {
        b.col(k) = t.basis.null_vectors[j];
        r.col(k) = t.null_coefficients[j];
    }
    for (Index i = 0; i < y.dim(); ++i) {
        if (std::find(piv.begin(), piv.end(), i) == piv.end()) b.col(k++) = y.basis_vector(i);
    }
    auto binv = inverse(b);
    if (!binv) return std::nullopt;
    try {
        BoundedMap<S> ret(y, f.dom(), r * *binv);
        if (!is_non_expanding(ret)) return std::nullopt;
        return ret;
    }
    catch (const invariant_violation&) {
        return std::nullopt;
    }
    catch (const unbounded_map&) {
        return std::nullopt;
    }
}

// Surjective, and the induced X / Ker(f) -> Y is an isometric isomorphism:
// every codomain basis vector has a preimage whose coset norm is at most its weight.
template <typename S>
bool is_strict_epi_native(const BoundedMap<S>& f) {
    if (!is_surjective(f)) return false;
    const auto& y = f.cod();
    auto pre = solve(f.matrix(), Mat<S>(Mat<S>::Identity(y.dim(), y.dim())));
    auto ker = orthogonalize(f.dom(), Mat<S>(nullspace(f.matrix())));
    for (Index j = 0; j < y.dim(); ++j) {
        if (quotient_norm(ker, Vec<S>(pre->col(j))) > y.weight(j)) return false;
    }
    return true;
}

// Classification in the non-expanding category. Throws not_non_expanding.
template <typename S>
Classification classify_morphism(const BoundedMap<S>& f) {
    if (!is_non_expanding(f)) throw not_non_expanding("classify_morphism: operator norm " + operator_norm(f).str() + " exceeds g^0");
    Classification c;
    auto r = rank(f.matrix());
    c.mono = r == f.dom().dim();
    c.epi = r == f.cod().dim();
    c.strict_mono = c.mono && is_isometry(f);
    c.strict_epi = c.epi && is_strict_epi_native(f);
    c.iso = c.mono && c.epi && is_isomorphism(f);
    c.split_mono = nonexpanding_retraction(f).has_value();
    c.split_epi = nonexpanding_section(f).has_value();
    return c;
}

} // namespace protex
