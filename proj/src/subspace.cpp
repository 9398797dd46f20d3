#include "oplat/subspace.hpp"

#include <stdexcept>

namespace oplat {

Subspace Subspace::zero(std::size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix(0, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix::identity(ambient_dim));
}

Subspace Subspace::span_rows(const Matrix& rows) {
    RrefResult rr = rref(rows);
    std::size_t r = rr.pivot_columns.size();
    Matrix basis(r, rows.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) basis(i, j) = rr.r(i, j);
    return Subspace(rows.cols(), std::move(basis));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    return span_rows(Matrix::from_rows(vectors, ambient_dim));
}

bool Subspace::contains(const Vector& v) const {
    if (v.dim() != ambient_dim_) throw std::invalid_argument("subspace/vector dimension mismatch");
    // Reduce v against the RREF basis; zero residual means membership.
    Vector res = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t piv = 0;
        while (piv < ambient_dim_ && basis_(i, piv).is_zero()) ++piv;
        if (piv == ambient_dim_ || res[piv].is_zero()) continue;
        Scalar f = res[piv];  // pivot entry of an RREF row is 1
        for (std::size_t j = piv; j < ambient_dim_; ++j) res[j] -= f * basis_(i, j);
    }
    return res.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_)
        throw std::invalid_argument("subspace dimension mismatch");
    if (other.dim() > dim()) return false;
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

bool Subspace::is_orthogonal_to(const Vector& v) const {
    if (v.dim() != ambient_dim_) throw std::invalid_argument("subspace/vector dimension mismatch");
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        if (!inner(v, basis_.row(i)).is_zero()) return false;
    return true;
}

int Subspace::cmp(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
    for (std::size_t i = 0; i < a.basis_.rows(); ++i)
        for (std::size_t j = 0; j < a.basis_.cols(); ++j) {
            int c = Scalar::cmp(a.basis_(i, j), b.basis_(i, j));
            if (c != 0) return c;
        }
    return 0;
}

Subspace null_space(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
            v[rr.pivot_columns[i]] = -rr.r(i, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), basis);
}

Subspace column_space(const Matrix& m) { return Subspace::span_rows(m.transpose()); }

Matrix projector(const Subspace& s) {
    if (s.is_zero()) return Matrix::zero(s.ambient_dim(), s.ambient_dim());
    // Basis vectors are rows; as columns they form B^T, and the projector
    // onto their span is B^T (conj(B) B^T)^{-1} conj(B).
    Matrix bt = s.basis().transpose();
    Matrix bconj = s.basis().conj();
    Matrix gram = bconj * bt;  // Hermitian positive definite, so invertible
    return bt * inverse(gram) * bconj;
}

Subspace join(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("join: ambient dimension mismatch");
    Matrix stacked(a.dim() + b.dim(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient_dim(); ++j) stacked(i, j) = a.basis()(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient_dim(); ++j) stacked(a.dim() + i, j) = b.basis()(i, j);
    return Subspace::span_rows(stacked);
}

Subspace meet(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("meet: ambient dimension mismatch");
    std::size_t n = a.ambient_dim();
    if (a.is_full()) return b;
    if (b.is_full()) return a;
    if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
    // x in both row spans iff x = u*A = v*B; solve A^T u - B^T v = 0.
    Matrix sys(n, a.dim() + b.dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < a.dim(); ++k) sys(i, k) = a.basis()(k, i);
        for (std::size_t k = 0; k < b.dim(); ++k) sys(i, a.dim() + k) = -b.basis()(k, i);
    }
    Subspace ker = null_space(sys);
    std::vector<Vector> vectors;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        Vector x(n);
        for (std::size_t k = 0; k < a.dim(); ++k) {
            const Scalar& u = ker.basis()(r, k);
            if (u.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) x[j] += u * a.basis()(k, j);
        }
        vectors.push_back(std::move(x));
    }
    return Subspace::span(n, vectors);
}

Subspace complement(const Subspace& s) {
    // y is orthogonal to the span iff conj(B) y = 0.
    return null_space(s.basis().conj());
}

}  // namespace oplat
