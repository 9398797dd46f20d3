#pragma once

#include <cstdint>
#include <vector>

#include "oplat/lattice.hpp"

namespace oplat {

/// Pair (P, Q) with P in a lattice L and Q in L-perp, under the bilattice
/// order: (P1,Q1) <= (P2,Q2) iff P1 <= P2 and Q2 <= Q1.
struct BilatticePair {
    Subspace p;
    Subspace q;

    friend bool operator==(const BilatticePair& a, const BilatticePair& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const BilatticePair& a, const BilatticePair& b) { return !(a == b); }

    static int cmp(const BilatticePair& a, const BilatticePair& b);
};

bool pair_leq(const BilatticePair& a, const BilatticePair& b);
bool pair_lt(const BilatticePair& a, const BilatticePair& b);
BilatticePair pair_join(const BilatticePair& a, const BilatticePair& b);
BilatticePair pair_meet(const BilatticePair& a, const BilatticePair& b);

/// True when proj(Q) * T * proj(P) is the zero operator, i.e. T maps P into
/// the orthocomplement of Q. Evaluated exactly on basis vectors.
bool annihilates(const Subspace& q, const Matrix& t, const Subspace& p);

/// The annihilation bilattice BIL(T, L): all pairs (P, Q) in L x L-perp with
/// Q T P = 0, enumerated exhaustively.
class Bilattice {
  public:
    static Bilattice enumerate(const Matrix& t, const SubspaceLattice& lattice);

    const SubspaceLattice& lattice() const { return lattice_; }
    const Matrix& op() const { return op_; }
    const std::vector<BilatticePair>& pairs() const { return pairs_; }
    bool contains(const BilatticePair& pair) const;

  private:
    Bilattice(SubspaceLattice lattice, Matrix op, std::vector<BilatticePair> pairs)
        : lattice_(std::move(lattice)), op_(std::move(op)), pairs_(std::move(pairs)) {}

    SubspaceLattice lattice_;
    Matrix op_;
    std::vector<BilatticePair> pairs_;  // sorted by BilatticePair::cmp
};

/// All kernel-map data of T relative to a lattice, computed once: for every
/// lattice element P (by index) the largest element T maps into P, and the
/// largest co-lattice element annihilating the image of its level set.
struct KernelAnalysis {
    std::vector<Subspace> support;      // index-aligned with lattice.elements()
    std::vector<Subspace> annihilator;  // members of L-perp
};

KernelAnalysis analyze_kernel(const Matrix& t, const SubspaceLattice& lattice);

/// Largest lattice element that T maps into P: the join of all P' in L with
/// P-perp T P' = 0. Requires P in L.
Subspace image_support(const Matrix& t, const SubspaceLattice& lattice, const Subspace& p);

/// Join of the complements of all elements sharing the image support of P;
/// equivalently the largest Q in L-perp with Q T image_support(P) = 0.
Subspace image_annihilator(const Matrix& t, const SubspaceLattice& lattice, const Subspace& p);

/// The kernel map: P -> (image_support(P), image_annihilator(P)); always a
/// member of the annihilation bilattice.
BilatticePair kernel_pair(const Matrix& t, const SubspaceLattice& lattice, const Subspace& p);

/// The kernel set: the image of the lattice under the kernel map, with one
/// representative source element per distinct pair.
class KernelSet {
  public:
    struct Entry {
        Subspace source;  // representative P producing this pair
        BilatticePair pair;
    };

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const Entry& operator[](std::size_t i) const { return entries_[i]; }

    /// Whether the pairs form a chain under the bilattice order (always the
    /// case over a nest).
    bool is_totally_ordered() const;

  private:
    friend KernelSet kernel_set(const Matrix&, const SubspaceLattice&);
    friend KernelSet kernel_set(const Matrix&, const Nest&);
    friend KernelSet kernel_set(const KernelAnalysis&, const Nest&);
    std::vector<Entry> entries_;
};

KernelSet kernel_set(const Matrix& t, const SubspaceLattice& lattice);
/// Nest overload: entries ascend in the bilattice order and each pair keeps
/// the smallest chain element producing it.
KernelSet kernel_set(const Matrix& t, const Nest& nest);
/// As above but reusing a precomputed analysis.
KernelSet kernel_set(const KernelAnalysis& analysis, const Nest& nest);

/// Join of all nest elements sharing the image support of P (an order
/// homomorphism on the nest).
Subspace support_ceiling(const Matrix& t, const Nest& nest, const Subspace& p);
Subspace support_ceiling(const KernelAnalysis& analysis, const SubspaceLattice& lattice,
                         const Subspace& p);

struct WitnessOptions {
    std::uint64_t seed = 0;
    int random_budget = 32;
};

/// A vector x with smallest_containing(x) = image_support(P) and
/// smallest_containing(Tx) = complement of image_annihilator(P). The search
/// is deterministic (gap vectors first) with a seeded random fallback; every
/// candidate is verified exactly before being returned. Throws
/// std::runtime_error on exhaustion, which for a finite nest would indicate
/// an implementation bug rather than a mathematical failure.
Vector kernel_pair_witness(const Matrix& t, const Nest& nest, const Subspace& p,
                           const WitnessOptions& options = {});
Vector kernel_pair_witness(const Matrix& t, const Nest& nest, const Subspace& p,
                           const KernelAnalysis& analysis, const WitnessOptions& options = {});

}  // namespace oplat
