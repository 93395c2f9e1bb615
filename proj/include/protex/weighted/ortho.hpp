#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include <protex/weighted/space.hpp>

namespace protex {

// Orthogonal presentation of a subspace. Every vector owns a pivot column on
// which all other members (null vectors included) vanish, and each non-null
// vector attains its norm at its pivot. Together these make
//   rho(sum a_j v_j) == max_j |a_j| rho(v_j)
// hold exactly. Null vectors have norm zero and pivots on zero-weight columns.
template <typename S>
struct OrthoBasis {
    WeightedSpace<S> ambient;
    std::vector<Vec<S>> vectors;
    std::vector<Index> pivots;
    std::vector<Vec<S>> null_vectors;
    std::vector<Index> null_pivots;

    Index rank() const { return Index(vectors.size() + null_vectors.size()); }
    bool empty() const { return rank() == 0; }

    // Norm-carrying vectors first, then null vectors, as columns.
    Mat<S> matrix() const {
        Mat<S> m(ambient.dim(), rank());
        Index k = 0;
        for (auto& v: vectors) m.col(k++) = v;
        for (auto& v: null_vectors) m.col(k++) = v;
        return m;
    }

    std::vector<Index> all_pivots() const {
        auto out = pivots;
        out.insert(out.end(), null_pivots.begin(), null_pivots.end());
        return out;
    }
};

// Coefficients expressing each output vector in terms of the generators, and
// the generator relations discovered along the way (a spanning set of them).
template <typename S>
struct TrackedOrtho {
    OrthoBasis<S> basis;
    std::vector<Vec<S>> coefficients;
    std::vector<Vec<S>> null_coefficients;
    std::vector<Vec<S>> relations;
};

// Test hook: called with every basis orthogonalize() produces.
template <typename S>
inline std::function<void(const OrthoBasis<S>&)> orthogonalize_observer;

// Global-max scaled-pivot elimination. Repeatedly take the unprocessed
// generator/coordinate pair maximizing |entry| * weight (ties: lowest
// coordinate, then lowest generator) and clear that column from every other
// row, processed rows included. Rows left with only null-weight support are
// then reduced by ordinary elimination on their lowest nonzero column.
template <typename S>
TrackedOrtho<S> orthogonalize_tracked(const WeightedSpace<S>& space, std::span<const Vec<S>> generators) {
    const Index n = space.dim();
    const auto g = generators.size();
    const auto& field = space.field();

    enum class State { open, main, null, dead };
    struct Row {
        Vec<S> v;
        Vec<S> coeff;
        State state = State::open;
        Index pivot = -1;
    };
    std::vector<Row> rows;
    rows.reserve(g);
    for (std::size_t k = 0; k < g; ++k) {
        if (generators[k].size() != n) {
            throw std::invalid_argument("generator " + std::to_string(k) + " does not live in the ambient space");
        }
        Vec<S> c = Vec<S>::Zero(Index(g));
        c(Index(k)) = S(1);
        rows.push_back({generators[k], std::move(c)});
    }

    TrackedOrtho<S> out;
    auto retire_zero_rows = [&] {
        for (auto& r: rows) {
            if (r.state == State::open && exactly_zero(r.v)) {
                r.state = State::dead;
                out.relations.push_back(r.coeff);
            }
        }
    };
    auto clear_column = [&](std::size_t src, Index c) {
        const S lead = rows[src].v(c);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == src || rows[k].state == State::dead || rows[k].v(c) == S(0)) continue;
            S t = rows[k].v(c) / lead;
            rows[k].v -= t * rows[src].v;
            rows[k].coeff -= t * rows[src].coeff;
        }
    };

    retire_zero_rows();
    for (;;) {
        std::size_t best_row = rows.size();
        Index best_col = -1;
        Magnitude best;
        for (Index i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < rows.size(); ++k) {
                if (rows[k].state != State::open || rows[k].v(i) == S(0)) continue;
                auto val = field.abs(rows[k].v(i)) * space.weight(i);
                if (best < val) {
                    best = val;
                    best_row = k;
                    best_col = i;
                }
            }
        }
        if (best_row == rows.size()) break;
        rows[best_row].state = State::main;
        rows[best_row].pivot = best_col;
        clear_column(best_row, best_col);
        retire_zero_rows();
    }

    // What is left is supported on zero-weight columns only.
    for (;;) {
        std::size_t best_row = rows.size();
        Index best_col = n;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (rows[k].state != State::open) continue;
            for (Index i = 0; i < best_col; ++i) {
                if (rows[k].v(i) != S(0)) {
                    best_col = i;
                    best_row = k;
                    break;
                }
            }
        }
        if (best_row == rows.size()) break;
        rows[best_row].state = State::null;
        rows[best_row].pivot = best_col;
        clear_column(best_row, best_col);
        retire_zero_rows();
    }

    out.basis.ambient = space;
    for (auto& r: rows) {
        if (r.state == State::main) {
            out.basis.vectors.push_back(r.v);
            out.basis.pivots.push_back(r.pivot);
            out.coefficients.push_back(r.coeff);
        }
        else if (r.state == State::null) {
            out.basis.null_vectors.push_back(r.v);
            out.basis.null_pivots.push_back(r.pivot);
            out.null_coefficients.push_back(r.coeff);
        }
    }
    if (orthogonalize_observer<S>) orthogonalize_observer<S>(out.basis);
    return out;
}

template <typename S>
OrthoBasis<S> orthogonalize(const WeightedSpace<S>& space, std::span<const Vec<S>> generators) {
    return orthogonalize_tracked(space, generators).basis;
}

template <typename S>
std::vector<Vec<S>> columns_of(const Mat<S>& m) {
    std::vector<Vec<S>> cols;
    cols.reserve(std::size_t(m.cols()));
    for (Index j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return cols;
}

template <typename S>
OrthoBasis<S> orthogonalize(const WeightedSpace<S>& space, const Mat<S>& columns) {
    auto cols = columns_of(columns);
    return orthogonalize(space, std::span<const Vec<S>>(cols));
}

// Residual of m after clearing every pivot column of the basis. Adding any
// element of the span can only raise the norm, so this is a minimal-norm
// representative of the coset m + span.
template <typename S>
Vec<S> reduce(const OrthoBasis<S>& basis, Vec<S> m) {
    for (std::size_t j = 0; j < basis.vectors.size(); ++j) {
        auto p = basis.pivots[j];
        if (m(p) != S(0)) m -= (m(p) / basis.vectors[j](p)) * basis.vectors[j];
    }
    for (std::size_t j = 0; j < basis.null_vectors.size(); ++j) {
        auto p = basis.null_pivots[j];
        if (m(p) != S(0)) m -= (m(p) / basis.null_vectors[j](p)) * basis.null_vectors[j];
    }
    return m;
}

// rho([m]) = inf over n in span of rho(m + n), attained by reduce().
template <typename S>
Magnitude quotient_norm(const OrthoBasis<S>& basis, const Vec<S>& m) {
    if (m.size() != basis.ambient.dim()) throw std::invalid_argument("quotient_norm: vector not in the ambient space");
    return norm(basis.ambient, reduce(basis, m));
}

template <typename S>
bool in_span(const OrthoBasis<S>& basis, const Vec<S>& m) {
    return exactly_zero(reduce(basis, m));
}

// Structural check of the exclusive-pivot certificate. Returns an empty string
// when it holds, otherwise a description of the first defect.
template <typename S>
std::string certificate_defect(const OrthoBasis<S>& b) {
    const auto& sp = b.ambient;
    if (b.pivots.size() != b.vectors.size() || b.null_pivots.size() != b.null_vectors.size()) return "pivot count mismatch";
    std::vector<const Vec<S>*> all;
    for (auto& v: b.vectors) all.push_back(&v);
    for (auto& v: b.null_vectors) all.push_back(&v);
    auto piv = b.all_pivots();
    for (std::size_t j = 0; j < all.size(); ++j) {
        if (all[j]->size() != sp.dim()) return "vector " + std::to_string(j) + " has wrong length";
        if ((*all[j])(piv[j]) == S(0)) return "vector " + std::to_string(j) + " vanishes at its pivot";
        for (std::size_t k = 0; k < all.size(); ++k) {
            if (k != j && (*all[k])(piv[j]) != S(0)) {
                return "vector " + std::to_string(k) + " is nonzero at pivot column " + std::to_string(piv[j]);
            }
        }
    }
    for (std::size_t j = 0; j < b.vectors.size(); ++j) {
        auto at_pivot = sp.field().abs(b.vectors[j](b.pivots[j])) * sp.weight(b.pivots[j]);
        if (at_pivot.is_zero()) return "vector " + std::to_string(j) + " has zero norm";
        if (at_pivot != norm(sp, b.vectors[j])) return "vector " + std::to_string(j) + " does not attain its norm at its pivot";
    }
    for (std::size_t j = 0; j < b.null_vectors.size(); ++j) {
        if (!norm(sp, b.null_vectors[j]).is_zero()) return "null vector " + std::to_string(j) + " has nonzero norm";
    }
    return {};
}

} // namespace protex
