#ifndef LIEOBS_MATRIX_HPP
#define LIEOBS_MATRIX_HPP

#include "lieobs/rational.hpp"

#include <cstddef>

namespace lieobs {

/// Dense rational matrix, row-major. Immutable in spirit: every operation
/// returns a fresh value; nothing in the library mutates a matrix after
/// construction except local workspaces.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_row(std::size_t i, const Vec& v);

    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Rational& s) const;

    /// Matrix * vector.
    Vec apply(const Vec& v) const;
    /// vector^T * Matrix.
    Vec apply_left(const Vec& v) const;

    bool is_zero() const;
    bool operator==(const Matrix& rhs) const = default;

    /// Row-major flattening; inverse of unflatten.
    Vec flatten() const;
    static Matrix unflatten(std::size_t rows, std::size_t cols, const Vec& v);

    /// Stacks rhs below this matrix (column counts must agree).
    Matrix stacked(const Matrix& below) const;
    /// Block diagonal of two matrices.
    static Matrix block_diag(const Matrix& a, const Matrix& b);
    /// Commutator a*b - b*a.
    static Matrix commutator(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace lieobs

#endif
