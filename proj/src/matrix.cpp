#include "oplat/matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace oplat {

Vector Vector::unit(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v[i] = Scalar(1);
    return v;
}

bool Vector::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

Vector Vector::conj() const {
    Vector v(dim());
    for (std::size_t i = 0; i < dim(); ++i) v[i] = entries_[i].conj();
    return v;
}

Vector Vector::operator-() const {
    Vector v(dim());
    for (std::size_t i = 0; i < dim(); ++i) v[i] = -entries_[i];
    return v;
}

Vector& Vector::operator+=(const Vector& o) {
    if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o[i];
    return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
    for (auto& x : entries_) x *= c;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
    os << "(";
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
    return os << ")";
}

Scalar inner(const Vector& x, const Vector& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("inner product dimension mismatch");
    Scalar s;
    for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * y[i].conj();
    return s;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
        e_.insert(e_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].dim() != cols) throw std::invalid_argument("row dimension mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    Vector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Vector Matrix::col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Scalar Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Scalar s;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Matrix Matrix::conj() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i].conj();
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
    for (auto& x : e_) x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.dim() != cols_) throw std::invalid_argument("matrix apply dimension mismatch");
    Vector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar s;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << "]";
}

Matrix outer(const Vector& x, const Vector& y) {
    Matrix m(x.dim(), y.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.dim(); ++j) m(i, j) = x[i] * y[j].conj();
    }
    return m;
}

}  // namespace oplat
