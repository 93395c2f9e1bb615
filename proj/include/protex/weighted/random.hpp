#pragma once

#include <random>
#include <vector>

#include <protex/weighted/classify.hpp>

namespace protex {

// Seeded generators of weighted spaces and non-expanding maps over the
// rationals with a p-adic absolute value. Entries are p^k * a / b with small
// k, a, b so that valuations vary while numbers stay small.
class RandomModules {
public:
    struct Options {
        int max_dim = 4;
        int min_exponent = -2;
        int max_exponent = 2;
        double rational_weight_probability = 0.15;  // weights g^(a/2)
        double null_weight_probability = 0.0;
        double zero_entry_probability = 0.3;
    };

    RandomModules(unsigned prime, std::uint64_t seed): RandomModules(prime, seed, Options{}) {}
    RandomModules(unsigned prime, std::uint64_t seed, Options opt):
        field_(ValuedField<Rational>::padic(prime)), prime_(prime), rng_(seed), opt_(opt)
    {}

    const ValuedField<Rational>& field() const { return field_; }
    std::mt19937_64& rng() { return rng_; }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    Magnitude weight() {
        if (chance(opt_.null_weight_probability)) return Magnitude::zero();
        if (chance(opt_.rational_weight_probability)) return Magnitude::power(Exponent(uniform(2*opt_.min_exponent, 2*opt_.max_exponent), 2));
        return Magnitude::power(uniform(opt_.min_exponent, opt_.max_exponent));
    }

    WeightedSpace<Rational> space(int dim) {
        std::vector<Magnitude> w;
        for (int i = 0; i < dim; ++i) w.push_back(weight());
        return WeightedSpace<Rational>(field_, std::move(w));
    }

    WeightedSpace<Rational> space() { return space(uniform(1, opt_.max_dim)); }

    Rational scalar() {
        if (chance(opt_.zero_entry_probability)) return Rational(0);
        Rational v(uniform(-4, 4), uniform(1, 3));
        if (v == 0) v = 1;
        int k = uniform(-2, 2);
        for (; k > 0; --k) v *= prime_;
        for (; k < 0; ++k) v /= prime_;
        return v;
    }

    Vec<Rational> vector(Index n) {
        Vec<Rational> v(n);
        for (Index i = 0; i < n; ++i) v(i) = scalar();
        return v;
    }

    Mat<Rational> matrix(Index rows, Index cols) {
        Mat<Rational> m(rows, cols);
        for (Index i = 0; i < rows; ++i) {
            for (Index j = 0; j < cols; ++j) m(i, j) = scalar();
        }
        return m;
    }

    // A non-expanding map dom -> cod: random columns, each scaled by a power
    // of p until its norm fits under the domain weight. Null domain
    // directions get columns supported on null codomain directions.
    BoundedMap<Rational> map(const WeightedSpace<Rational>& dom, const WeightedSpace<Rational>& cod) {
        Mat<Rational> m = matrix(cod.dim(), dom.dim());
        for (Index j = 0; j < dom.dim(); ++j) {
            Vec<Rational> c = m.col(j);
            if (dom.weight(j).is_zero()) {
                for (Index i = 0; i < cod.dim(); ++i) {
                    if (!cod.weight(i).is_zero()) c(i) = 0;
                }
            }
            else {
                while (norm(cod, c) > dom.weight(j)) c *= Rational(prime_);
            }
            m.col(j) = c;
        }
        return BoundedMap<Rational>(dom, cod, std::move(m));
    }

    BoundedMap<Rational> map_into(const WeightedSpace<Rational>& cod) { return map(space(), cod); }
    BoundedMap<Rational> map_from(const WeightedSpace<Rational>& dom) { return map(dom, space()); }

    // Strict epimorphism out of x: projection onto the cokernel of a random map into x.
    BoundedMap<Rational> strict_epi_from(const WeightedSpace<Rational>& x) {
        return cokernel(map(space(uniform(0, opt_.max_dim - 1)), x)).projection;
    }

    // Strict monomorphism into y: inclusion of the kernel of a random map out of y.
    BoundedMap<Rational> strict_mono_into(const WeightedSpace<Rational>& y) {
        return kernel(map(y, space(uniform(0, opt_.max_dim - 1)))).inclusion;
    }

    // Isometric automorphism: a unipotent triangular matrix whose off-diagonal
    // entries are small enough to keep each column's norm at its weight.
    BoundedMap<Rational> isometric_automorphism(const WeightedSpace<Rational>& x) {
        Mat<Rational> m = Mat<Rational>::Identity(x.dim(), x.dim());
        for (Index j = 0; j < x.dim(); ++j) {
            for (Index i = 0; i < j; ++i) {
                Rational t = scalar();
                if (t == 0) continue;
                if (x.weight(j).is_zero() && !x.weight(i).is_zero()) continue;
                while (field_.abs(t) * x.weight(i) > x.weight(j)) t *= Rational(prime_);
                m(i, j) = t;
            }
        }
        BoundedMap<Rational> f(x, x, std::move(m));
        return f;
    }

private:
    ValuedField<Rational> field_;
    unsigned prime_;
    std::mt19937_64 rng_;
    Options opt_;
};

} // namespace protex
