#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "oplat/scalar.hpp"

namespace oplat {

/// Element of the Hilbert space: a dense column of exact scalars.
class Vector {
  public:
    Vector() = default;
    explicit Vector(std::size_t dim) : entries_(dim) {}
    Vector(std::initializer_list<Scalar> entries) : entries_(entries) {}
    explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}

    static Vector unit(std::size_t dim, std::size_t i);

    std::size_t dim() const { return entries_.size(); }
    const Scalar& operator[](std::size_t i) const { return entries_[i]; }
    Scalar& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    bool is_zero() const;
    Vector conj() const;
    Vector operator-() const;
    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& c);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }
    friend bool operator==(const Vector& a, const Vector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Vector& v);

  private:
    std::vector<Scalar> entries_;
};

/// Standard inner product <x,y> = sum_i x_i * conj(y_i); conjugate-linear in y.
Scalar inner(const Vector& x, const Vector& y);

/// Dense row-major matrix of exact scalars; operators on C^n live here.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// Matrix unit with a single 1 at (i, j).
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;

    bool is_zero() const;
    Scalar trace() const;
    Matrix transpose() const;
    Matrix conj() const;
    /// Conjugate transpose; adjoint(adjoint(M)) == M.
    Matrix adjoint() const { return conj().transpose(); }

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& c, Matrix m) { return m *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Matrix-vector product.
    Vector apply(const Vector& x) const;

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

  private:
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

/// Rank-one operator x (x) y: z -> <z,y> x. Entry (i,j) is x_i * conj(y_j).
Matrix outer(const Vector& x, const Vector& y);

}  // namespace oplat
