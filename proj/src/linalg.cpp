#include "lieobs/linalg.hpp"
#include "lieobs/errors.hpp"

#include <algorithm>

namespace lieobs {

RrefResult rref(Matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const Rational lead = m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
    return {reduced, pivots};
}

Subspace Subspace::span_of_rows(Matrix rows, std::size_t ambient_dim) {
    if (rows.rows() > 0 && rows.cols() != ambient_dim)
        throw InternalCheckError("span_of_rows ambient mismatch");
    Subspace s;
    s.ambient_ = ambient_dim;
    if (rows.rows() == 0) {
        s.basis_ = Matrix(0, ambient_dim);
        return s;
    }
    auto rr = rref(std::move(rows));
    s.basis_ = std::move(rr.mat);
    s.pivots_ = std::move(rr.pivots);
    return s;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix(0, ambient_dim);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    return span_of_rows(Matrix::identity(ambient_dim), ambient_dim);
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_)
        throw InternalCheckError("membership ambient mismatch");
    Vec residual = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const Rational f = residual[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) residual[j] -= f * basis_(i, j);
    }
    return is_zero(residual);
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
    if (v.size() != ambient_)
        throw InternalCheckError("coordinates ambient mismatch");
    Vec coords(basis_.rows());
    Vec residual = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        coords[i] = residual[pivots_[i]];
        if (coords[i] == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) residual[j] -= coords[i] * basis_(i, j);
    }
    if (!is_zero(residual)) return std::nullopt;
    return coords;
}

Vec Subspace::from_coordinates(const Vec& coords) const {
    if (coords.size() != basis_.rows())
        throw InternalCheckError("from_coordinates size mismatch");
    Vec v(ambient_, Rational(0));
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        if (coords[i] != 0)
            for (std::size_t j = 0; j < ambient_; ++j) v[j] += coords[i] * basis_(i, j);
    return v;
}

bool Subspace::contains_subspace(const Subspace& other) const {
    for (std::size_t i = 0; i < other.basis().rows(); ++i)
        if (!contains(other.basis().row(i))) return false;
    return true;
}

Subspace nullspace(const Matrix& m) {
    const std::size_t n = m.cols();
    auto rr = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(free_cols.size(), n);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(k, free_cols[k]) = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            basis(k, rr.pivots[i]) = -rr.mat(i, free_cols[k]);
    }
    return Subspace::span_of_rows(std::move(basis), n);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows())
        throw InternalCheckError("solve rhs size mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto rr = rref(std::move(aug));
    Vec x(a.cols(), Rational(0));
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == a.cols()) return std::nullopt;  // 0 = 1 row
        x[rr.pivots[i]] = rr.mat(i, a.cols());
    }
    return x;
}

QuotientCoordinates quotient_coordinates(std::size_t ambient_dim, const Subspace& sub) {
    if (sub.ambient_dim() != ambient_dim)
        throw InternalCheckError("quotient ambient mismatch");
    const auto& piv = sub.pivots();
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    const std::size_t q = free_cols.size();
    // projection(v)_k = v[f_k] - sum_i v[p_i] * basis(i, f_k); kernel is sub.
    Matrix projection(q, ambient_dim);
    Matrix section(ambient_dim, q);
    for (std::size_t k = 0; k < q; ++k) {
        projection(k, free_cols[k]) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            projection(k, piv[i]) = -sub.basis()(i, free_cols[k]);
        section(free_cols[k], k) = 1;
    }
    return {projection, section};
}

} // namespace lieobs
