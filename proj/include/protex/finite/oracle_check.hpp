#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <protex/core/category.hpp>
#include <protex/finite/brute.hpp>
#include <protex/io/json_io.hpp>
#include <protex/weighted/random.hpp>

namespace protex {

struct OracleSummary {
    std::size_t spaces = 0;
    std::size_t subspaces = 0;
    std::size_t cosets = 0;
    std::size_t mismatches = 0;
    json first_mismatch;

    json to_json() const {
        return {{"spaces", spaces}, {"subspaces", subspaces}, {"cosets", cosets}, {"mismatches", mismatches}, {"first_mismatch", first_mismatch}};
    }
};

// Every weight sequence of length <= max_dim from the set, every subspace
// and every vector: the algorithmic quotient norm against the coset minimum.
template <int P>
OracleSummary quotient_norm_oracle(std::span<const Magnitude> weight_set, int max_dim) {
    OracleSummary out;
    const auto field = ValuedField<Fp<P>>::trivial();
    for (int d = 0; d <= max_dim; ++d) {
        std::vector<std::size_t> idx(std::size_t(d), 0);
        const auto subs = enumerate_subspaces<P>(d);
        const auto vecs = all_vectors<P>(d);
        for (;;) {
            std::vector<Magnitude> w;
            for (auto i: idx) w.push_back(weight_set[i]);
            WeightedSpace<Fp<P>> x(field, w);
            ++out.spaces;
            for (auto& gens: subs) {
                ++out.subspaces;
                auto basis = orthogonalize(x, std::span<const Vec<Fp<P>>>(gens));
                for (auto& m: vecs) {
                    ++out.cosets;
                    auto fast = quotient_norm(basis, m);
                    auto slow = brute_quotient_norm<P>(x, std::span<const Vec<Fp<P>>>(gens), m);
                    if (fast != slow && out.mismatches++ == 0) {
                        json g = json::array();
                        for (auto& v: gens) g.push_back(vector_json(v));
                        out.first_mismatch = {{"space", space_json(x)}, {"generators", g}, {"vector", vector_json(m)},
                                              {"algorithm", fast.str()}, {"brute_force", slow.str()}};
                    }
                }
            }
            int k = d - 1;
            while (k >= 0 && idx[std::size_t(k)] + 1 == weight_set.size()) idx[std::size_t(k--)] = 0;
            if (k < 0 || weight_set.empty()) break;
            ++idx[std::size_t(k)];
        }
    }
    return out;
}

struct ReversalSummary {
    std::size_t instances = 0;
    std::size_t mismatches = 0;
    json first_mismatch;

    json to_json() const { return {{"instances", instances}, {"mismatches", mismatches}, {"first_mismatch", first_mismatch}}; }
};

// Random p-adic instances: the quotient norm of a random vector modulo the
// span of random generators must not depend on the order of the generators.
inline ReversalSummary reversal_invariance(unsigned prime, std::size_t samples, std::uint64_t seed) {
    ReversalSummary out;
    RandomModules gen(prime, seed);
    for (std::size_t s = 0; s < samples; ++s) {
        auto x = gen.space(gen.uniform(1, 4));
        std::vector<Vec<Rational>> gens;
        for (int k = gen.uniform(0, 4); k > 0; --k) gens.push_back(gen.vector(x.dim()));
        auto m = gen.vector(x.dim());
        std::vector<Vec<Rational>> rev(gens.rbegin(), gens.rend());
        auto a = quotient_norm(orthogonalize(x, std::span<const Vec<Rational>>(gens)), m);
        auto b = quotient_norm(orthogonalize(x, std::span<const Vec<Rational>>(rev)), m);
        ++out.instances;
        if (a != b && out.mismatches++ == 0) {
            json g = json::array();
            for (auto& v: gens) g.push_back(vector_json(v));
            out.first_mismatch = {{"space", space_json(x)}, {"generators", g}, {"vector", vector_json(m)}, {"forward", a.str()}, {"reversed", b.str()}};
        }
    }
    return out;
}

} // namespace protex
