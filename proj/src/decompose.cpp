#include "oplat/decompose.hpp"

#include <stdexcept>

#include "oplat/linalg.hpp"

namespace oplat {

Decomposition decompose(const Matrix& t, const Nest& nest) {
    std::size_t n = nest.ambient_dim();
    if (t.rows() != n || t.cols() != n)
        throw std::invalid_argument("operator/nest dimension mismatch");

    Decomposition d;
    d.op = t;
    d.kernel = kernel_set(t, nest);
    d.initial_support = d.kernel[0].pair.p;  // the source-0 entry has annihilator I

    // Entries past the first are exactly those with annihilator < I; they
    // exist iff T != 0.
    if ((d.kernel.size() == 1) != t.is_zero())
        throw std::logic_error("kernel set collapses exactly for the zero operator");

    Matrix prev_proj = projector(d.initial_support);
    for (std::size_t j = 1; j < d.kernel.size(); ++j) {
        const BilatticePair& pair = d.kernel[j].pair;
        DecompositionSlice slice;
        slice.support_prev = d.kernel[j - 1].pair.p;
        slice.support = pair.p;
        slice.annihilator = pair.q;
        Matrix support_proj = projector(pair.p);
        slice.matrix = projector(complement(pair.q)) * t * (support_proj - prev_proj);
        prev_proj = std::move(support_proj);

        std::size_t slice_index = d.slices.size();
        for (auto& [x, y] : rank_factorize(slice.matrix))
            d.terms.push_back({std::move(x), std::move(y), slice_index});
        d.slices.push_back(std::move(slice));
    }

    Matrix sum = Matrix::zero(n, n);
    for (const auto& term : d.terms) sum += outer(term.x, term.y);
    if (sum != t) throw std::logic_error("decomposition failed to reassemble the operator");
    return d;
}

bool VerificationReport::mandatory_pass() const {
    for (const auto& c : checks)
        if (c.mandatory && !c.pass) return false;
    return true;
}

VerificationReport verify_decomposition(const Decomposition& d, const Nest& nest) {
    std::size_t n = nest.ambient_dim();
    VerificationReport report;
    auto add = [&](std::string name, bool pass, bool mandatory, std::string detail = "") {
        report.checks.push_back({std::move(name), pass, mandatory, std::move(detail)});
    };

    Matrix sum = Matrix::zero(n, n);
    for (const auto& term : d.terms) sum += outer(term.x, term.y);
    add("terms_sum_to_operator", sum == d.op, true);

    bool rank_one = true;
    for (const auto& term : d.terms)
        rank_one = rank_one && !term.x.is_zero() && !term.y.is_zero();
    add("terms_rank_one", rank_one, true);

    std::size_t k = d.slices.size();
    std::size_t bound = k * rank(d.op);
    add("term_count_bound", d.terms.size() <= bound, true,
        std::to_string(d.terms.size()) + " <= " + std::to_string(bound));

    SubspaceLattice lattice = nest.to_lattice();
    KernelAnalysis analysis = analyze_kernel(d.op, lattice);
    KernelSet ks = kernel_set(analysis, nest);
    bool slices_match = ks.size() == k + 1 && d.initial_support == ks[0].pair.p;
    for (std::size_t j = 0; slices_match && j < k; ++j) {
        const DecompositionSlice& s = d.slices[j];
        slices_match = s.support == ks[j + 1].pair.p && s.annihilator == ks[j + 1].pair.q &&
                       s.support_prev == ks[j].pair.p;
    }
    add("slices_match_kernel_set", slices_match, true);

    bool strict = true;
    for (std::size_t j = 0; j + 1 < ks.size(); ++j)
        strict = strict && pair_lt(ks[j].pair, ks[j + 1].pair);
    add("slice_ordering_strict", strict, true);

    add("initial_support_annihilated",
        annihilates(Subspace::full(n), d.op, d.initial_support), true);

    bool slice_identity = true;
    Matrix slice_sum = Matrix::zero(n, n);
    for (std::size_t j = 0; j < k; ++j) {
        const DecompositionSlice& s = d.slices[j];
        Matrix expected = projector(complement(s.annihilator)) * d.op *
                          (projector(s.support) - projector(s.support_prev));
        slice_identity = slice_identity && s.matrix == expected;
        Matrix term_sum = Matrix::zero(n, n);
        for (const auto& term : d.terms)
            if (term.slice_index == j) term_sum += outer(term.x, term.y);
        slice_identity = slice_identity && term_sum == s.matrix;
        slice_sum += s.matrix;
    }
    add("slice_identity", slice_identity && slice_sum == d.op, true);

    // Slice orthogonality: every kernel pair annihilates every slice.
    bool slice_membership = true;
    for (const auto& entry : ks.entries())
        for (const auto& s : d.slices)
            slice_membership =
                slice_membership && annihilates(entry.pair.q, s.matrix, entry.pair.p);
    add("slice_bil_membership", slice_membership, true);

    // Every kernel pair of T lies in the annihilation bilattice of every
    // term: proj(Q) (x(x)y) proj(P) = (Qx) (x) (Py).
    bool term_membership = true;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        for (const auto& term : d.terms) {
            bool ann = analysis.annihilator[i].is_orthogonal_to(term.x) ||
                       analysis.support[i].is_orthogonal_to(term.y);
            term_membership = term_membership && ann;
        }
    add("kernel_pairs_annihilate_terms", term_membership, true);

    // Informational: the ceiling identity linking consecutive annihilators
    // holds automatically only over continuous nests.
    std::string ceiling_detail;
    bool ceiling_all = true;
    for (std::size_t j = 0; j < k; ++j) {
        Subspace prev_perp =
            j == 0 ? Subspace::zero(n) : complement(d.slices[j - 1].annihilator);
        bool holds = complement(d.slices[j].annihilator) ==
                     support_ceiling(analysis, lattice, prev_perp);
        ceiling_all = ceiling_all && holds;
        ceiling_detail += (j ? "," : "") + std::string(holds ? "1" : "0");
    }
    add("annihilator_ceiling_identity", ceiling_all, false, ceiling_detail);

    return report;
}

}  // namespace oplat
