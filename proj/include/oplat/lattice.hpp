#pragma once

#include <cstddef>
#include <vector>

#include "oplat/subspace.hpp"

namespace oplat {

/// A finite lattice of subspaces containing 0 and the full space and closed
/// under pairwise join and meet. Elements are kept in a canonical order and
/// deduplicated; construction validates the closure properties and throws
/// std::invalid_argument on malformed input.
class SubspaceLattice {
  public:
    SubspaceLattice(std::size_t ambient_dim, std::vector<Subspace> elements);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Subspace>& elements() const { return elements_; }
    const Subspace& operator[](std::size_t i) const { return elements_[i]; }

    bool contains(const Subspace& s) const;
    /// Index of s in canonical order; throws std::invalid_argument if absent.
    std::size_t index_of(const Subspace& s) const;

    bool is_totally_ordered() const;

    const Subspace& bottom() const { return elements_.front(); }
    const Subspace& top() const { return elements_.back(); }

  private:
    friend class Nest;
    friend SubspaceLattice lattice_perp(const SubspaceLattice&);
    struct Unchecked {};
    SubspaceLattice(std::size_t ambient_dim, std::vector<Subspace> elements, Unchecked);

    std::size_t ambient_dim_;
    std::vector<Subspace> elements_;  // sorted by Subspace::cmp, unique
};

/// {P-perp : P in L}; again a subspace lattice.
SubspaceLattice lattice_perp(const SubspaceLattice& lattice);

/// A totally ordered subspace lattice, stored as the strictly increasing
/// chain 0 = chain[0] < ... < chain.back() = I.
class Nest {
  public:
    Nest(std::size_t ambient_dim, std::vector<Subspace> chain);

    /// Coordinate nest: each element is the span of the first d standard
    /// basis vectors for d in `dims`; 0 and the full space are implied.
    static Nest coordinate(std::size_t ambient_dim, std::vector<std::size_t> dims);
    /// Full coordinate nest 0 < e1 < (e1,e2) < ... < I.
    static Nest coordinate_full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t size() const { return chain_.size(); }
    const std::vector<Subspace>& chain() const { return chain_; }
    const Subspace& operator[](std::size_t i) const { return chain_[i]; }

    bool contains(const Subspace& s) const;
    std::size_t index_of(const Subspace& s) const;  // throws if absent

    /// P_minus: the immediate predecessor in the chain; predecessor(0) = 0.
    const Subspace& predecessor(const Subspace& p) const;
    /// P_plus: the immediate successor in the chain; successor(I) = I.
    const Subspace& successor(const Subspace& p) const;

    SubspaceLattice to_lattice() const;

  private:
    std::size_t ambient_dim_;
    std::vector<Subspace> chain_;
};

/// Finite partition of a nest: a selection of chain positions starting at 0
/// and ending at the top, used for triangular truncations.
class Partition {
  public:
    Partition(Nest nest, std::vector<std::size_t> indices);

    static Partition full(const Nest& nest);

    const Nest& nest() const { return nest_; }
    const std::vector<std::size_t>& indices() const { return indices_; }
    /// The selected subchain 0 = Q_0 < ... < Q_k = I.
    std::vector<Subspace> selected() const;

  private:
    Nest nest_;
    std::vector<std::size_t> indices_;
};

/// Smallest lattice element containing x (the meet of all elements that
/// contain it); maps 0 to the bottom element.
Subspace smallest_containing(const SubspaceLattice& lattice, const Vector& x);
Subspace smallest_containing(const Nest& nest, const Vector& x);

/// Largest lattice element annihilating x, i.e. the join of all elements
/// orthogonal to it; maps 0 to the top element.
Subspace largest_annihilating(const SubspaceLattice& lattice, const Vector& x);
Subspace largest_annihilating(const Nest& nest, const Vector& x);

/// The orthogonal difference p minus q (meet of p with the complement of q).
Subspace gap(const Subspace& p, const Subspace& q);

/// Deterministic nonzero element of a subspace: the first standard basis
/// vector it contains, else its first canonical basis row. Throws on the
/// zero subspace.
Vector first_vector(const Subspace& s);

/// A vector x whose smallest containing element is `p` and whose largest
/// annihilating element is `nn`. Requires nn < p, both in the nest, p != 0.
Vector vector_with_supports(const Nest& nest, const Subspace& p, const Subspace& nn);

struct Truncations {
    Matrix upper;     // strictly block upper part; lies in the nest algebra
    Matrix lower;     // strictly block lower part; lies in its adjoint
    Matrix diagonal;  // block diagonal remainder
};

/// Block triangular truncations of T relative to a partition; the three
/// parts sum to T exactly.
Truncations truncations(const Partition& partition, const Matrix& t);

}  // namespace oplat
