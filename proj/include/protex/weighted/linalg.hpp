#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

namespace protex {

template <typename S> using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S> using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

// Exact test; Eigen's isZero() is a fuzzy comparison that needs an ordering.
template <typename Derived>
bool exactly_zero(const Eigen::DenseBase<Derived>& m) {
    using S = typename Derived::Scalar;
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) {
            if (!(m(i, j) == S(0))) return false;
        }
    }
    return true;
}

// Exact Gauss-Jordan elimination. Pivots are the first nonzero entry scanning
// columns left to right, so results depend only on the input, never on magnitudes.
template <typename S>
struct RowEchelon {
    Mat<S> reduced;              // reduced row echelon form, zero rows at the bottom
    Mat<S> transform;            // transform * input == reduced
    std::vector<Index> pivots;   // pivot column of row r, for r < rank
    Index rank() const { return Index(pivots.size()); }
};

template <typename S>
RowEchelon<S> row_echelon(const Mat<S>& a) {
    const Index m = a.rows(), n = a.cols();
    RowEchelon<S> e{a, Mat<S>::Identity(m, m), {}};
    Index row = 0;
    for (Index c = 0; c < n && row < m; ++c) {
        Index p = row;
        while (p < m && e.reduced(p, c) == S(0)) ++p;
        if (p == m) continue;
        e.reduced.row(p).swap(e.reduced.row(row));
        e.transform.row(p).swap(e.transform.row(row));
        S inv = S(1) / e.reduced(row, c);
        e.reduced.row(row) *= inv;
        e.transform.row(row) *= inv;
        for (Index r = 0; r < m; ++r) {
            if (r == row || e.reduced(r, c) == S(0)) continue;
            S t = e.reduced(r, c);
            e.reduced.row(r) -= t * e.reduced.row(row);
            e.transform.row(r) -= t * e.transform.row(row);
        }
        e.pivots.push_back(c);
        ++row;
    }
    return e;
}

template <typename S>
Index rank(const Mat<S>& a) { return row_echelon(a).rank(); }

// Columns form a basis of {x : a x = 0}; one column per free variable.
template <typename S>
Mat<S> nullspace(const Mat<S>& a) {
    auto e = row_echelon(a);
    const Index n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c: e.pivots) is_pivot[c] = true;
    Mat<S> basis = Mat<S>::Zero(n, n - e.rank());
    Index k = 0;
    for (Index f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis(f, k) = S(1);
        for (Index r = 0; r < e.rank(); ++r) basis(e.pivots[r], k) = -e.reduced(r, f);
        ++k;
    }
    return basis;
}

// Some x with a x = b (free variables set to zero), or nothing if inconsistent.
template <typename S>
std::optional<Mat<S>> solve(const Mat<S>& a, const Mat<S>& b) {
    const Index m = a.rows(), n = a.cols();
    Mat<S> aug(m, n + b.cols());
    aug << a, b;
    auto e = row_echelon(aug);
    Mat<S> x = Mat<S>::Zero(n, b.cols());
    for (Index r = 0; r < e.rank(); ++r) {
        if (e.pivots[r] >= n) return std::nullopt;
        x.row(e.pivots[r]) = e.reduced.row(r).tail(b.cols());
    }
    return x;
}

template <typename S>
std::optional<Mat<S>> inverse(const Mat<S>& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto e = row_echelon(a);
    if (e.rank() != a.rows()) return std::nullopt;
    return e.transform;
}

} // namespace protex
