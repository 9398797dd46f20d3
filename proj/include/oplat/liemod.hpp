#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oplat/decompose.hpp"
#include "oplat/lattice.hpp"

namespace oplat {

/// A linear subspace of the n x n operator space, held canonically: the
/// basis is the RREF of the vectorized (row-major) generators, so equality
/// of spaces is syntactic and membership is exact elimination.
class OperatorSpace {
  public:
    static OperatorSpace span(std::size_t ambient_dim, const std::vector<Matrix>& generators);
    static OperatorSpace zero(std::size_t ambient_dim);
    static OperatorSpace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Matrix>& basis() const { return basis_; }
    /// Basis as RREF rows of length ambient_dim^2.
    const Matrix& vectorized_basis() const { return row_span_.basis(); }

    bool contains(const Matrix& x) const;

    friend bool operator==(const OperatorSpace& a, const OperatorSpace& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.row_span_ == b.row_span_;
    }
    friend bool operator!=(const OperatorSpace& a, const OperatorSpace& b) { return !(a == b); }

  private:
    OperatorSpace(std::size_t ambient_dim, Subspace row_span);

    std::size_t ambient_dim_;
    Subspace row_span_;           // canonical subspace of dimension ambient_dim^2
    std::vector<Matrix> basis_;   // the RREF rows reshaped to matrices
};

/// The nest algebra: all operators leaving every nest element invariant,
/// computed as the solution space of the stacked constraints
/// proj(P-perp) X proj(P) = 0.
OperatorSpace nest_algebra(const Nest& nest);

/// Membership test by the invariance constraints; rank-one inputs are also
/// run through the classical rank-one criterion (some nest element P with
/// x inside P and y annihilated by its predecessor) and the two answers are
/// cross-checked.
bool in_nest_algebra(const Matrix& x, const Nest& nest);

/// [A, B] = AB - BA.
Matrix lie_bracket(const Matrix& a, const Matrix& b);

/// Smallest subspace containing the generators that is stable under
/// bracketing with the nest algebra. Iterates span growth to a fixpoint;
/// in finite dimensions norm closure adds nothing.
OperatorSpace lie_module_closure(const std::vector<Matrix>& generators, const Nest& nest);

/// The space {y : x (x) y lies in M} for a fixed nonzero x; membership is
/// linear in conj(y), so this is an exact null-space computation.
Subspace rank1_partners(const OperatorSpace& m, const Vector& x);

enum class Decomposability { Decomposable, NotDecomposable, Undetermined };

std::string decomposability_name(Decomposability d);

struct DecomposabilityVerdict {
    Decomposability status;
    std::vector<Rank1Term> witness;  // nonempty only for Decomposable (and T != 0)
    std::string certificate;
    std::uint64_t seed = 0;
    int samples = 0;
};

/// Three-stage check whether T is a finite sum of rank-one members of M:
/// (1) try the kernel-set-aligned decomposition and test each term for
/// membership; (2) otherwise hunt for any nonzero rank-one element of M over
/// the standard basis plus seeded random vectors, concluding NotDecomposable
/// when none exists; (3) otherwise Undetermined. Requires T in M.
DecomposabilityVerdict check_decomposable(const Matrix& t, const OperatorSpace& m,
                                          const Nest& nest, std::uint64_t seed = 0,
                                          int samples = 64,
                                          Field field = Field::Rationals);

}  // namespace oplat
