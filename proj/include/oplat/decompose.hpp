#pragma once

#include <string>
#include <vector>

#include "oplat/kernel.hpp"

namespace oplat {

/// One rank-one summand x (x) y, tagged with the slice it was carved from.
struct Rank1Term {
    Vector x;
    Vector y;
    std::size_t slice_index = 0;  // position in Decomposition::slices
};

/// One kernel-set slice: everything T does between the previous image
/// support and this one, pushed out of the annihilator's range.
struct DecompositionSlice {
    Subspace support_prev;  // Phi_{j-1}
    Subspace support;       // Phi_j
    Subspace annihilator;   // Psi_j (member of L-perp)
    Matrix matrix;          // proj(Psi_j-perp) * T * (proj(Phi_j) - proj(Phi_{j-1}))
};

/// A kernel-set-aligned rank-one decomposition: the slices reassemble T
/// exactly and every kernel pair of T annihilates every term.
struct Decomposition {
    Matrix op;
    KernelSet kernel;           // over the nest, ascending
    Subspace initial_support;   // image support of 0; T annihilates it
    std::vector<DecompositionSlice> slices;
    std::vector<Rank1Term> terms;
};

/// Splits T along its kernel set over the nest and rank-factorizes each
/// slice. The zero operator yields the empty decomposition.
Decomposition decompose(const Matrix& t, const Nest& nest);

struct VerificationCheck {
    std::string name;
    bool pass;
    bool mandatory;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool mandatory_pass() const;
};

/// Re-verifies every guarantee of a decomposition from scratch: exact
/// reassembly, slice identities, term count bound, and bilattice membership
/// of every kernel pair against every term. The ceiling identity between
/// consecutive annihilators is reported but not required (it is a
/// continuous-nest phenomenon).
VerificationReport verify_decomposition(const Decomposition& d, const Nest& nest);

}  // namespace oplat
