#pragma once

#include <utility>
#include <vector>

#include "oplat/matrix.hpp"

namespace oplat {

struct RrefResult {
    Matrix r;
    std::vector<std::size_t> pivot_columns;  // increasing
};

/// Reduced row echelon form over the exact field (Gauss-Jordan with exact
/// division; no pivot growth concerns since arithmetic is rational).
RrefResult rref(const Matrix& m);

/// Exact rank over the configured field.
std::size_t rank(const Matrix& m);

/// Exact inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// Writes M as a sum of exactly rank(M) rank-one operators x_i (x) y_i.
/// Uses the pivot-column factorization M = C * R: x_i is the i-th pivot
/// column of M and y_i the conjugate of the i-th nonzero RREF row.
std::vector<std::pair<Vector, Vector>> rank_factorize(const Matrix& m);

/// Floating-point rank with relative tolerance, for large random experiments
/// only; every acceptance path uses the exact routines above.
std::size_t fp_rank(const Matrix& m, double rel_tol = 1e-9);

}  // namespace oplat
