#pragma once

#include "oplat/lattice.hpp"

// Shared desk-scale fixtures: the two 4x4 operators with equal kernel sets
// over the full coordinate nest, and small helpers for coordinate subspaces.
namespace fixtures {

using oplat::Matrix;
using oplat::Nest;
using oplat::Scalar;
using oplat::Subspace;
using oplat::Vector;

inline Matrix t1() {
    return Matrix{{0, 1, 0, 1},
                  {0, 0, 1, 1},
                  {0, 0, 1, 1},
                  {0, 0, 1, 1}};
}

inline Matrix t2() {
    return Matrix{{0, 1, 0, 1},
                  {0, 0, 1, 1},
                  {0, 0, 1, 2},
                  {0, 0, 1, 1}};
}

inline Nest n4() { return Nest::coordinate_full(4); }

/// Span of the first d standard basis vectors of C^n.
inline Subspace coord(std::size_t n, std::size_t d) {
    Matrix rows(d, n);
    for (std::size_t i = 0; i < d; ++i) rows(i, i) = Scalar(1);
    return Subspace::span_rows(rows);
}

inline Vector unit(std::size_t n, std::size_t i) { return Vector::unit(n, i); }

}  // namespace fixtures
