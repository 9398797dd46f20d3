#pragma once

#include "oplat/lattice.hpp"
#include "oplat/rng.hpp"

namespace oplat {

/// Small random rational (or Gaussian rational) with numerators in [-3, 3]
/// and denominators in {1, 2}; keeps exact arithmetic fast in bulk runs.
Scalar random_small_scalar(SplitMix64& rng, Field field = Field::Rationals);

Vector random_vector(SplitMix64& rng, std::size_t dim, Field field = Field::Rationals);

Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                     Field field = Field::Rationals);

/// Random operator with rank at most a uniformly drawn bound (a product of
/// thin random factors); low rank keeps kernel sets interesting.
Matrix random_operator(SplitMix64& rng, std::size_t dim, Field field = Field::Rationals);

/// Random nest: spans of leading rows of a random invertible matrix, over a
/// random strictly increasing dimension pattern.
Nest random_nest(SplitMix64& rng, std::size_t dim, Field field = Field::Rationals);

/// Random finite subspace lattice: up to three random generators together
/// with 0 and I, closed under join and meet. Three generators keep the
/// generated modular sublattice finite.
SubspaceLattice random_lattice(SplitMix64& rng, std::size_t dim, Field field = Field::Rationals);

Partition random_partition(SplitMix64& rng, const Nest& nest);

}  // namespace oplat
