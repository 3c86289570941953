#include "lieobs/matrix.hpp"
#include "lieobs/errors.hpp"

namespace lieobs {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw InternalCheckError("matrix product shape mismatch");
    Matrix r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                r(i, j) += a * rhs(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + rhs.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - rhs.data_[i];
    return r;
}

Matrix Matrix::scaled(const Rational& s) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = s * data_[i];
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_)
        throw InternalCheckError("matrix apply shape mismatch");
    Vec r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

Vec Matrix::apply_left(const Vec& v) const {
    if (v.size() != rows_)
        throw InternalCheckError("matrix apply_left shape mismatch");
    Vec r(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            r[j] += v[i] * (*this)(i, j);
    }
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

Vec Matrix::flatten() const { return data_; }

Matrix Matrix::unflatten(std::size_t rows, std::size_t cols, const Vec& v) {
    if (v.size() != rows * cols)
        throw InternalCheckError("unflatten size mismatch");
    Matrix m(rows, cols);
    m.data_ = v;
    return m;
}

Matrix Matrix::stacked(const Matrix& below) const {
    if (cols_ != below.cols_)
        throw InternalCheckError("stack column mismatch");
    Matrix r(rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = below(i, j);
    return r;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

Matrix Matrix::commutator(const Matrix& a, const Matrix& b) {
    return a * b - b * a;
}

} // namespace lieobs
