#include "oplat/random_instances.hpp"

#include <stdexcept>

namespace oplat {

Scalar random_small_scalar(SplitMix64& rng, Field field) {
    mpq_class re(rng.range(-3, 3), rng.range(1, 2));
    re.canonicalize();
    if (field == Field::Rationals) return Scalar(re);
    mpq_class im(rng.range(-3, 3), rng.range(1, 2));
    im.canonicalize();
    return Scalar(re, im);
}

Vector random_vector(SplitMix64& rng, std::size_t dim, Field field) {
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = random_small_scalar(rng, field);
    return v;
}

Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, Field field) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_small_scalar(rng, field);
    return m;
}

Matrix random_operator(SplitMix64& rng, std::size_t dim, Field field) {
    std::size_t bound = static_cast<std::size_t>(rng.below(dim + 1));
    if (bound == 0) return Matrix::zero(dim, dim);
    return random_matrix(rng, dim, bound, field) * random_matrix(rng, bound, dim, field);
}

namespace {

Matrix random_invertible(SplitMix64& rng, std::size_t dim, Field field) {
    // Elementary row operations on the identity stay exactly invertible.
    Matrix m = Matrix::identity(dim);
    std::size_t ops = 2 * dim;
    for (std::size_t k = 0; k < ops; ++k) {
        std::size_t i = rng.below(dim), j = rng.below(dim);
        if (i == j) continue;
        if (rng.chance(1, 4)) {
            for (std::size_t c = 0; c < dim; ++c) std::swap(m(i, c), m(j, c));
        } else {
            Scalar f = random_small_scalar(rng, field);
            for (std::size_t c = 0; c < dim; ++c) m(i, c) += f * m(j, c);
        }
    }
    return m;
}

}  // namespace

Nest random_nest(SplitMix64& rng, std::size_t dim, Field field) {
    Matrix basis = random_invertible(rng, dim, field);
    std::vector<Subspace> chain;
    chain.push_back(Subspace::zero(dim));
    for (std::size_t d = 1; d < dim; ++d) {
        if (!rng.chance(1, 2)) continue;
        Matrix rows(d, dim);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < dim; ++j) rows(i, j) = basis(i, j);
        chain.push_back(Subspace::span_rows(rows));
    }
    chain.push_back(Subspace::full(dim));
    return Nest(dim, std::move(chain));
}

SubspaceLattice random_lattice(SplitMix64& rng, std::size_t dim, Field field) {
    std::vector<Subspace> elements;
    elements.push_back(Subspace::zero(dim));
    elements.push_back(Subspace::full(dim));
    std::size_t generators = 1 + rng.below(3);
    for (std::size_t g = 0; g < generators; ++g) {
        std::size_t rows = 1 + rng.below(dim);
        elements.push_back(Subspace::span_rows(random_matrix(rng, rows, dim, field)));
    }
    // Close under pairwise join and meet. Three generators of a modular
    // lattice generate a finite sublattice, so this terminates quickly.
    auto has = [&](const Subspace& s) {
        for (const auto& e : elements)
            if (e == s) return true;
        return false;
    };
    for (bool grew = true; grew;) {
        grew = false;
        std::size_t count = elements.size();
        if (count > 128) throw std::logic_error("random lattice closure ran away");
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j) {
                Subspace up = join(elements[i], elements[j]);
                if (!has(up)) {
                    elements.push_back(std::move(up));
                    grew = true;
                }
                Subspace down = meet(elements[i], elements[j]);
                if (!has(down)) {
                    elements.push_back(std::move(down));
                    grew = true;
                }
            }
    }
    return SubspaceLattice(dim, std::move(elements));
}

Partition random_partition(SplitMix64& rng, const Nest& nest) {
    std::vector<std::size_t> indices;
    indices.push_back(0);
    for (std::size_t i = 1; i + 1 < nest.size(); ++i)
        if (rng.chance(1, 2)) indices.push_back(i);
    indices.push_back(nest.size() - 1);
    return Partition(nest, std::move(indices));
}

}  // namespace oplat
