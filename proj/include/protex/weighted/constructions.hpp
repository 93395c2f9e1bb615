#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <protex/errors.hpp>
#include <protex/weighted/map.hpp>
#include <protex/weighted/ortho.hpp>

namespace protex {

template <typename S>
struct Kernel {
    WeightedSpace<S> object;
    BoundedMap<S> inclusion;
};

template <typename S>
struct Cokernel {
    WeightedSpace<S> object;
    BoundedMap<S> projection;
    std::vector<Index> complement;   // codomain coordinates kept by the projection
};

template <typename S>
struct Biproduct {
    WeightedSpace<S> object;
    std::vector<BoundedMap<S>> injections;
    std::vector<BoundedMap<S>> projections;
};

// Fibre product P of f: M -> N and g: L -> N with P -> M and P -> L.
template <typename S>
struct Pullback {
    WeightedSpace<S> object;
    BoundedMap<S> to_first;
    BoundedMap<S> to_second;
};

// Pushout P of i: K -> M and g: K -> L with M -> P and L -> P.
template <typename S>
struct Pushout {
    WeightedSpace<S> object;
    BoundedMap<S> from_first;
    BoundedMap<S> from_second;
};

template <typename S>
struct Separation {
    WeightedSpace<S> object;
    BoundedMap<S> projection;
};

// Test hook: called with every biproduct biproduct() builds.
template <typename S>
inline std::function<void(const Biproduct<S>&)> biproduct_observer;

template <typename S>
OrthoBasis<S> image(const BoundedMap<S>& f) {
    return orthogonalize(f.cod(), f.matrix());
}

// Nullspace with the subspace norm, presented on an orthogonal basis so the
// inclusion is an isometry.
template <typename S>
Kernel<S> kernel(const BoundedMap<S>& f) {
    auto basis = orthogonalize(f.dom(), Mat<S>(nullspace(f.matrix())));
    std::vector<Magnitude> w;
    for (auto& v: basis.vectors) w.push_back(norm(f.dom(), v));
    w.resize(std::size_t(basis.rank()));
    WeightedSpace<S> k(f.dom().field(), std::move(w), "ker");
    return {k, BoundedMap<S>(k, f.dom(), basis.matrix())};
}

// Quotient of the codomain by the image with the quotient semi-norm, presented
// on the coordinates that are not pivots of the orthogonalized image.
template <typename S>
Cokernel<S> cokernel_of(const OrthoBasis<S>& img) {
    const auto& cod = img.ambient;
    auto piv = img.all_pivots();
    std::vector<Index> keep;
    for (Index i = 0; i < cod.dim(); ++i) {
        if (std::find(piv.begin(), piv.end(), i) == piv.end()) keep.push_back(i);
    }
    std::vector<Magnitude> w;
    for (auto i: keep) w.push_back(quotient_norm(img, cod.basis_vector(i)));
    Mat<S> p(Index(keep.size()), cod.dim());
    for (Index j = 0; j < cod.dim(); ++j) {
        Vec<S> r = reduce(img, cod.basis_vector(j));
        for (std::size_t k = 0; k < keep.size(); ++k) p(Index(k), j) = r(keep[k]);
    }
    WeightedSpace<S> q(cod.field(), std::move(w), "coker");
    return {q, BoundedMap<S>(cod, q, std::move(p)), std::move(keep)};
}

template <typename S>
Cokernel<S> cokernel(const BoundedMap<S>& f) {
    return cokernel_of(image(f));
}

template <typename S>
Biproduct<S> biproduct(const ValuedField<S>& field, std::span<const WeightedSpace<S>> spaces) {
    std::vector<Magnitude> w;
    for (auto& x: spaces) {
        if (!(x.field() == field)) throw invariant_violation("biproduct of spaces over different fields");
        w.insert(w.end(), x.weights().begin(), x.weights().end());
    }
    Biproduct<S> out{WeightedSpace<S>(field, std::move(w), "sum"), {}, {}};
    const Index total = out.object.dim();
    Index offset = 0;
    for (auto& x: spaces) {
        Mat<S> inj = Mat<S>::Zero(total, x.dim());
        inj.block(offset, 0, x.dim(), x.dim()).setIdentity();
        Mat<S> proj = inj.transpose();
        out.injections.emplace_back(x, out.object, std::move(inj));
        out.projections.emplace_back(out.object, x, std::move(proj));
        offset += x.dim();
    }
    if (biproduct_observer<S>) biproduct_observer<S>(out);
    return out;
}

template <typename S>
Biproduct<S> biproduct(const WeightedSpace<S>& a, const WeightedSpace<S>& b) {
    std::vector<WeightedSpace<S>> v{a, b};
    return biproduct(a.field(), std::span<const WeightedSpace<S>>(v));
}

// The map T -> prod X_j with components maps[j].
template <typename S>
BoundedMap<S> product_mediator(const Biproduct<S>& bp, std::span<const BoundedMap<S>> maps) {
    if (maps.size() != bp.projections.size()) throw std::invalid_argument("mediator: wrong number of component maps");
    const auto& t = maps.front().dom();
    Mat<S> m(bp.object.dim(), t.dim());
    Index offset = 0;
    for (std::size_t j = 0; j < maps.size(); ++j) {
        if (!(maps[j].dom() == t) || !(maps[j].cod() == bp.projections[j].cod())) throw not_composable("product_mediator: component has the wrong shape");
        m.middleRows(offset, maps[j].cod().dim()) = maps[j].matrix();
        offset += maps[j].cod().dim();
    }
    return BoundedMap<S>(t, bp.object, std::move(m));
}

// The map coprod X_k -> T with components maps[k].
template <typename S>
BoundedMap<S> coproduct_mediator(const Biproduct<S>& bp, std::span<const BoundedMap<S>> maps) {
    if (maps.size() != bp.injections.size()) throw std::invalid_argument("mediator: wrong number of component maps");
    const auto& t = maps.front().cod();
    Mat<S> m(t.dim(), bp.object.dim());
    Index offset = 0;
    for (std::size_t k = 0; k < maps.size(); ++k) {
        if (!(maps[k].cod() == t) || !(maps[k].dom() == bp.injections[k].dom())) throw not_composable("coproduct_mediator: component has the wrong shape");
        m.middleCols(offset, maps[k].dom().dim()) = maps[k].matrix();
        offset += maps[k].dom().dim();
    }
    return BoundedMap<S>(bp.object, t, std::move(m));
}

// Canonical comparison from the coproduct to the product: the coproduct map
// whose k-th component is the product map with components (delta_jk).
template <typename S>
BoundedMap<S> coproduct_to_product(const Biproduct<S>& bp) {
    std::vector<BoundedMap<S>> columns;
    for (std::size_t k = 0; k < bp.injections.size(); ++k) {
        std::vector<BoundedMap<S>> comps;
        const auto& xk = bp.injections[k].dom();
        for (std::size_t j = 0; j < bp.projections.size(); ++j) {
            const auto& xj = bp.projections[j].cod();
            comps.push_back(j == k? BoundedMap<S>::identity(xk): BoundedMap<S>::zero(xk, xj));
        }
        columns.push_back(product_mediator(bp, std::span<const BoundedMap<S>>(comps)));
    }
    return coproduct_mediator(bp, std::span<const BoundedMap<S>>(columns));
}

// Some u with m o u == f, when one exists and is bounded. Unique when m is injective.
template <typename S>
std::optional<BoundedMap<S>> lift_through(const BoundedMap<S>& m, const BoundedMap<S>& f) {
    if (!(m.cod() == f.cod())) throw not_composable("lift_through: maps have different codomains");
    auto x = solve(m.matrix(), f.matrix());
    if (!x) return std::nullopt;
    try {
        return BoundedMap<S>(f.dom(), m.dom(), std::move(*x));
    }
    catch (const invariant_violation&) {
        return std::nullopt;
    }
}

// Some u with u o e == f, when one exists and is bounded. Unique when e is surjective.
template <typename S>
std::optional<BoundedMap<S>> descend_through(const BoundedMap<S>& e, const BoundedMap<S>& f) {
    if (!(e.dom() == f.dom())) throw not_composable("descend_through: maps have different domains");
    auto x = solve(Mat<S>(e.matrix().transpose()), Mat<S>(f.matrix().transpose()));
    if (!x) return std::nullopt;
    try {
        return BoundedMap<S>(e.cod(), f.cod(), Mat<S>(x->transpose()));
    }
    catch (const invariant_violation&) {
        return std::nullopt;
    }
}

// Bounded two-sided inverse, if f is bijective and the inverse is bounded.
template <typename S>
std::optional<BoundedMap<S>> inverse_map(const BoundedMap<S>& f) {
    auto inv = inverse(f.matrix());
    if (!inv) return std::nullopt;
    try {
        return BoundedMap<S>(f.cod(), f.dom(), std::move(*inv));
    }
    catch (const invariant_violation&) {
        return std::nullopt;
    }
}

// Isomorphism of the non-expanding category: f and its inverse both have
// operator norm at most one.
template <typename S>
bool is_isomorphism(const BoundedMap<S>& f) {
    if (!is_non_expanding(f)) return false;
    auto inv = inverse_map(f);
    return inv && is_non_expanding(*inv);
}

// {(m, l) : f(m) = g(l)} with the max norm, as the kernel of (f, -g) on M + L.
template <typename S>
Pullback<S> pullback(const BoundedMap<S>& f, const BoundedMap<S>& g) {
    if (!(f.cod() == g.cod())) throw not_composable("pullback: maps have different codomains");
    auto bp = biproduct(f.dom(), g.dom());
    Mat<S> d(f.cod().dim(), bp.object.dim());
    d << f.matrix(), -g.matrix();
    auto k = kernel(BoundedMap<S>(bp.object, f.cod(), std::move(d)));
    return {k.object, compose(bp.projections[0], k.inclusion), compose(bp.projections[1], k.inclusion)};
}

// (M + L) / {(i(k), -g(k))} with the quotient norm.
template <typename S>
Pushout<S> pushout(const BoundedMap<S>& i, const BoundedMap<S>& g) {
    if (!(i.dom() == g.dom())) throw not_composable("pushout: maps have different domains");
    auto bp = biproduct(i.cod(), g.cod());
    Mat<S> d(bp.object.dim(), i.dom().dim());
    d << i.matrix(), -g.matrix();
    auto c = cokernel(BoundedMap<S>(i.dom(), bp.object, std::move(d)));
    return {c.object, compose(c.projection, bp.injections[0]), compose(c.projection, bp.injections[1])};
}

// The unique u: T -> P with to_first o u == a and to_second o u == b, if it exists.
template <typename S>
std::optional<BoundedMap<S>> pullback_mediator(const Pullback<S>& pb, const BoundedMap<S>& a, const BoundedMap<S>& b) {
    if (!(a.dom() == b.dom())) throw not_composable("pullback_mediator: legs have different domains");
    auto bp = biproduct(pb.to_first.cod(), pb.to_second.cod());
    Mat<S> legs(bp.object.dim(), pb.object.dim()), target(bp.object.dim(), a.dom().dim());
    legs << pb.to_first.matrix(), pb.to_second.matrix();
    target << a.matrix(), b.matrix();
    return lift_through(BoundedMap<S>(pb.object, bp.object, std::move(legs)), BoundedMap<S>(a.dom(), bp.object, std::move(target)));
}

// The unique u: P -> T with u o from_first == a and u o from_second == b, if it exists.
template <typename S>
std::optional<BoundedMap<S>> pushout_mediator(const Pushout<S>& po, const BoundedMap<S>& a, const BoundedMap<S>& b) {
    if (!(a.cod() == b.cod())) throw not_composable("pushout_mediator: legs have different codomains");
    auto bp = biproduct(po.from_first.dom(), po.from_second.dom());
    Mat<S> legs(po.object.dim(), bp.object.dim()), target(a.cod().dim(), bp.object.dim());
    legs << po.from_first.matrix(), po.from_second.matrix();
    target << a.matrix(), b.matrix();
    return descend_through(BoundedMap<S>(bp.object, po.object, std::move(legs)), BoundedMap<S>(bp.object, a.cod(), std::move(target)));
}

// M / {m : rho(m) = 0}: drops the zero-weight coordinates.
template <typename S>
Separation<S> separation(const WeightedSpace<S>& m) {
    std::vector<Magnitude> w;
    std::vector<Index> keep;
    for (Index i = 0; i < m.dim(); ++i) {
        if (!m.weight(i).is_zero()) {
            keep.push_back(i);
            w.push_back(m.weight(i));
        }
    }
    WeightedSpace<S> sep(m.field(), std::move(w), m.label());
    Mat<S> p = Mat<S>::Zero(sep.dim(), m.dim());
    for (std::size_t k = 0; k < keep.size(); ++k) p(Index(k), keep[k]) = S(1);
    return {sep, BoundedMap<S>(m, sep, std::move(p))};
}

// pi: coprod_x R_{rho(x)} -> M sending the x-th unit vector to x. The family
// must span M and generate its unit ball: every basis vector e_i needs a
// combination sum a_x x == e_i with max |a_x| rho(x) <= weight(i). Only then
// is pi a strict epimorphism; otherwise not_spanning.
template <typename S>
BoundedMap<S> free_cover(const WeightedSpace<S>& m, std::span<const Vec<S>> spanning) {
    Mat<S> cols(m.dim(), Index(spanning.size()));
    std::vector<Magnitude> w;
    for (std::size_t k = 0; k < spanning.size(); ++k) {
        if (spanning[k].size() != m.dim()) throw invariant_violation("free_cover: spanning vector " + std::to_string(k) + " has wrong length");
        cols.col(Index(k)) = spanning[k];
        w.push_back(norm(m, spanning[k]));
    }
    if (rank(cols) != m.dim()) throw not_spanning("free_cover: vectors span a subspace of dimension " + std::to_string(rank(cols)) + " < " + std::to_string(m.dim()));
    BoundedMap<S> pi(WeightedSpace<S>(m.field(), std::move(w), "free"), m, std::move(cols));
    auto pre = solve(pi.matrix(), Mat<S>(Mat<S>::Identity(m.dim(), m.dim())));
    auto ker = orthogonalize(pi.dom(), Mat<S>(nullspace(pi.matrix())));
    for (Index i = 0; i < m.dim(); ++i) {
        auto least = quotient_norm(ker, Vec<S>(pre->col(i)));
        if (least > m.weight(i)) {
            throw not_spanning("free_cover: vectors do not generate the unit ball; basis vector " + std::to_string(i) + " of weight " +
                               m.weight(i).str() + " needs coefficients of norm " + least.str());
        }
    }
    return pi;
}

template <typename S>
struct ChainColimit {
    WeightedSpace<S> object;
    std::vector<BoundedMap<S>> cocone;      // stage k -> object
    std::vector<WeightedSpace<S>> stages;
    std::vector<BoundedMap<S>> links;       // stage k -> stage k+1

    // Colimit semi-norm of x in stage k: inf over j >= k of rho_j(f_jk x).
    Magnitude norm_at(std::size_t k, const Vec<S>& x) const {
        Vec<S> y = x;
        Magnitude best = norm(stages[k], y);
        for (std::size_t j = k; j < links.size(); ++j) {
            y = links[j](y);
            best = min(best, norm(stages[j+1], y));
        }
        return best;
    }
};

// Colimit of first -> X1 -> ... -> Xn along non-expanding links. For a finite
// chain this is the last stage; cocone maps are the suffix composites.
template <typename S>
ChainColimit<S> chain_colimit(const WeightedSpace<S>& first, std::span<const BoundedMap<S>> links) {
    ChainColimit<S> out{first, {}, {first}, {}};
    for (std::size_t k = 0; k < links.size(); ++k) {
        if (!(links[k].dom() == out.stages.back())) throw not_composable("chain_colimit: link " + std::to_string(k) + " does not start where the chain ends");
        if (!is_non_expanding(links[k])) throw not_non_expanding("chain_colimit: link " + std::to_string(k) + " is expanding");
        out.stages.push_back(links[k].cod());
        out.links.push_back(links[k]);
    }
    out.object = out.stages.back();
    out.cocone.resize(out.stages.size(), BoundedMap<S>::identity(out.object));
    for (std::size_t k = out.stages.size() - 1; k-- > 0;) out.cocone[k] = compose(out.cocone[k+1], out.links[k]);
    return out;
}

} // namespace protex
