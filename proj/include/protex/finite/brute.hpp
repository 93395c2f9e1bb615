#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <vector>

#include <protex/weighted/linalg.hpp>
#include <protex/weighted/space.hpp>

namespace protex {

// Every vector of F_P^n, in lexicographic order of coordinates.
template <int P>
std::vector<Vec<Fp<P>>> all_vectors(Index n) {
    std::vector<Vec<Fp<P>>> out;
    Vec<Fp<P>> v = Vec<Fp<P>>::Zero(n);
    for (;;) {
        out.push_back(v);
        Index k = n;
        while (k > 0 && v(k - 1) == Fp<P>(P - 1)) v(--k) = Fp<P>(0);
        if (k == 0) break;
        v(k - 1) += Fp<P>(1);
    }
    return out;
}

// Every F_P-combination of the generators.
template <int P>
std::vector<Vec<Fp<P>>> span_elements(Index n, std::span<const Vec<Fp<P>>> gens) {
    std::vector<Vec<Fp<P>>> out;
    for (auto& c: all_vectors<P>(Index(gens.size()))) {
        Vec<Fp<P>> v = Vec<Fp<P>>::Zero(n);
        for (std::size_t k = 0; k < gens.size(); ++k) v += c(Index(k)) * gens[k];
        out.push_back(v);
    }
    return out;
}

// min over the coset m + span(gens) of the norm, by listing the coset.
template <int P>
Magnitude brute_quotient_norm(const WeightedSpace<Fp<P>>& space, std::span<const Vec<Fp<P>>> gens, const Vec<Fp<P>>& m) {
    bool first = true;
    Magnitude best;
    for (auto& n: span_elements<P>(space.dim(), gens)) {
        auto r = norm(space, Vec<Fp<P>>(m + n));
        if (first || r < best) best = r;
        first = false;
    }
    return best;
}

// Every subspace of F_P^n exactly once, each given by a basis.
template <int P>
std::vector<std::vector<Vec<Fp<P>>>> enumerate_subspaces(Index n) {
    using V = Vec<Fp<P>>;
    auto key = [](const V& v) {
        std::vector<int> k;
        for (Index i = 0; i < v.size(); ++i) k.push_back(v(i).value());
        return k;
    };
    std::set<std::vector<std::vector<int>>> seen;
    std::vector<std::vector<V>> out;
    auto vecs = all_vectors<P>(n);
    // Grow subspaces one generator at a time, deduplicating by their element sets.
    std::vector<std::vector<V>> frontier{{}};
    while (!frontier.empty()) {
        std::vector<std::vector<V>> next;
        for (auto& gens: frontier) {
            auto elems = span_elements<P>(n, std::span<const V>(gens));
            std::vector<std::vector<int>> keyset;
            for (auto& e: elems) keyset.push_back(key(e));
            std::sort(keyset.begin(), keyset.end());
            keyset.erase(std::unique(keyset.begin(), keyset.end()), keyset.end());
            if (!seen.insert(keyset).second) continue;
            out.push_back(gens);
            for (auto& v: vecs) {
                bool inside = std::binary_search(keyset.begin(), keyset.end(), key(v));
                if (inside) continue;
                auto g = gens;
                g.push_back(v);
                next.push_back(std::move(g));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

} // namespace protex
