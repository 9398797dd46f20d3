#include "oplat/linalg.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace oplat {

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < r.rows() && r(piv, col).is_zero()) ++piv;
        if (piv == r.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(piv, j), r(lead, j));
        Scalar inv = Scalar(1) / r(lead, col);
        for (std::size_t j = col; j < r.cols(); ++j) r(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r(i, col).is_zero()) continue;
            Scalar f = r(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= f * r(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_columns.size(); }

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::domain_error("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    RrefResult rr = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (rr.pivot_columns.size() <= i || rr.pivot_columns[i] != i)
            throw std::domain_error("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.r(i, n + j);
    return inv;
}

std::vector<std::pair<Vector, Vector>> rank_factorize(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<std::pair<Vector, Vector>> terms;
    terms.reserve(rr.pivot_columns.size());
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
        Vector x = m.col(rr.pivot_columns[i]);
        Vector y = rr.r.row(i).conj();
        terms.emplace_back(std::move(x), std::move(y));
    }
    return terms;
}

std::size_t fp_rank(const Matrix& m, double rel_tol) {
    std::vector<std::complex<double>> a(m.rows() * m.cols());
    double max_abs = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::complex<double> v(m(i, j).real().get_d(), m(i, j).imag().get_d());
            a[i * m.cols() + j] = v;
            max_abs = std::max(max_abs, std::abs(v));
        }
    if (max_abs == 0.0) return 0;
    const double tol = rel_tol * max_abs;
    auto at = [&](std::size_t i, std::size_t j) -> std::complex<double>& {
        return a[i * m.cols() + j];
    };
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        for (std::size_t i = r + 1; i < m.rows(); ++i)
            if (std::abs(at(i, col)) > std::abs(at(piv, col))) piv = i;
        if (std::abs(at(piv, col)) <= tol) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(at(piv, j), at(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            std::complex<double> f = at(i, col) / at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) at(i, j) -= f * at(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace oplat
