#pragma once

#include <vector>

#include "oplat/linalg.hpp"
#include "oplat/matrix.hpp"

namespace oplat {

/// A linear subspace of C^n in canonical form: the basis rows are the
/// nonzero rows of a reduced row echelon form, so two Subspace values are
/// equal exactly when they describe the same set of vectors. The zero
/// subspace has an empty basis. Following the usual identification, a
/// Subspace stands for the self-adjoint projection onto it wherever the
/// operator theory asks for a projection.
class Subspace {
  public:
    Subspace() : ambient_dim_(0) {}

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Canonicalizes the row span of `rows` (rows.cols() is the ambient dim).
    static Subspace span_rows(const Matrix& rows);
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim_; }

    bool contains(const Vector& v) const;
    /// Inclusion order on subspaces (the projection order P <= Q).
    bool contains(const Subspace& other) const;
    /// True when v is orthogonal to every element of the subspace.
    bool is_orthogonal_to(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    /// Deterministic total order (by dimension, then basis entries); used
    /// only to keep collections and reports in a canonical order.
    static int cmp(const Subspace& a, const Subspace& b);

  private:
    Subspace(std::size_t ambient_dim, Matrix basis)
        : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

    std::size_t ambient_dim_;
    Matrix basis_;  // dim x ambient_dim, RREF rows
};

/// Exact kernel {x : Mx = 0} as a canonical subspace.
Subspace null_space(const Matrix& m);

/// Span of the columns of M (the range of M as an operator).
Subspace column_space(const Matrix& m);

/// The unique self-adjoint idempotent with range S, as an exact matrix:
/// B^*(BB^*)^{-1}B for a basis B of S.
Matrix projector(const Subspace& s);

/// Smallest subspace containing both (the projection join).
Subspace join(const Subspace& a, const Subspace& b);
/// Intersection (the projection meet).
Subspace meet(const Subspace& a, const Subspace& b);
/// Orthogonal complement with respect to the standard inner product.
Subspace complement(const Subspace& s);

}  // namespace oplat
