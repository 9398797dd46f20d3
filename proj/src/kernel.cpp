#include "oplat/kernel.hpp"

#include <algorithm>
#include <stdexcept>

#include "oplat/rng.hpp"

namespace oplat {

int BilatticePair::cmp(const BilatticePair& a, const BilatticePair& b) {
    int c = Subspace::cmp(a.p, b.p);
    if (c != 0) return c;
    return Subspace::cmp(a.q, b.q);
}

bool pair_leq(const BilatticePair& a, const BilatticePair& b) {
    return b.p.contains(a.p) && a.q.contains(b.q);
}

bool pair_lt(const BilatticePair& a, const BilatticePair& b) {
    return pair_leq(a, b) && !(a == b);
}

BilatticePair pair_join(const BilatticePair& a, const BilatticePair& b) {
    return {join(a.p, b.p), meet(a.q, b.q)};
}

BilatticePair pair_meet(const BilatticePair& a, const BilatticePair& b) {
    return {meet(a.p, b.p), join(a.q, b.q)};
}

namespace {

std::vector<Vector> image_of_basis(const Matrix& t, const Subspace& p) {
    std::vector<Vector> images;
    images.reserve(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) images.push_back(t.apply(p.basis().row(i)));
    return images;
}

bool all_orthogonal(const Subspace& q, const std::vector<Vector>& vectors) {
    for (const auto& v : vectors)
        if (!q.is_orthogonal_to(v)) return false;
    return true;
}

}  // namespace

bool annihilates(const Subspace& q, const Matrix& t, const Subspace& p) {
    if (t.cols() != p.ambient_dim() || t.rows() != q.ambient_dim())
        throw std::invalid_argument("annihilates: dimension mismatch");
    return all_orthogonal(q, image_of_basis(t, p));
}

Bilattice Bilattice::enumerate(const Matrix& t, const SubspaceLattice& lattice) {
    if (t.rows() != lattice.ambient_dim() || t.cols() != lattice.ambient_dim())
        throw std::invalid_argument("operator/lattice dimension mismatch");
    std::vector<std::vector<Vector>> images;
    images.reserve(lattice.size());
    for (const auto& p : lattice.elements()) images.push_back(image_of_basis(t, p));
    std::vector<BilatticePair> pairs;
    for (const auto& r : lattice.elements()) {
        Subspace q = complement(r);
        for (std::size_t i = 0; i < lattice.size(); ++i)
            if (all_orthogonal(q, images[i])) pairs.push_back({lattice[i], q});
    }
    std::sort(pairs.begin(), pairs.end(), [](const BilatticePair& a, const BilatticePair& b) {
        return BilatticePair::cmp(a, b) < 0;
    });
    return Bilattice(lattice, t, std::move(pairs));
}

bool Bilattice::contains(const BilatticePair& pair) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), pair,
                               [](const BilatticePair& a, const BilatticePair& b) {
                                   return BilatticePair::cmp(a, b) < 0;
                               });
    return it != pairs_.end() && *it == pair;
}

KernelAnalysis analyze_kernel(const Matrix& t, const SubspaceLattice& lattice) {
    if (t.rows() != lattice.ambient_dim() || t.cols() != lattice.ambient_dim())
        throw std::invalid_argument("operator/lattice dimension mismatch");
    const std::size_t m = lattice.size();
    std::vector<Subspace> complements;
    std::vector<std::vector<Vector>> images;
    complements.reserve(m);
    images.reserve(m);
    for (const auto& p : lattice.elements()) {
        complements.push_back(complement(p));
        images.push_back(image_of_basis(t, p));
    }

    KernelAnalysis out;
    out.support.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Subspace acc = lattice.bottom();
        for (std::size_t j = 0; j < m; ++j)
            if (!acc.contains(lattice[j]) && all_orthogonal(complements[i], images[j]))
                acc = join(acc, lattice[j]);
        out.support.push_back(std::move(acc));
    }
    out.annihilator.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Subspace acc = Subspace::zero(lattice.ambient_dim());
        for (std::size_t j = 0; j < m; ++j)
            if (out.support[j] == out.support[i] && !acc.contains(complements[j]))
                acc = join(acc, complements[j]);
        out.annihilator.push_back(std::move(acc));
    }
    return out;
}

Subspace image_support(const Matrix& t, const SubspaceLattice& lattice, const Subspace& p) {
    lattice.index_of(p);  // membership check
    Subspace pperp = complement(p);
    Subspace acc = lattice.bottom();
    for (const auto& candidate : lattice.elements())
        if (annihilates(pperp, t, candidate)) acc = join(acc, candidate);
    return acc;
}

Subspace image_annihilator(const Matrix& t, const SubspaceLattice& lattice, const Subspace& p) {
    KernelAnalysis analysis = analyze_kernel(t, lattice);
    return analysis.annihilator[lattice.index_of(p)];
}

BilatticePair kernel_pair(const Matrix& t, const SubspaceLattice& lattice, const Subspace& p) {
    KernelAnalysis analysis = analyze_kernel(t, lattice);
    std::size_t i = lattice.index_of(p);
    return {analysis.support[i], analysis.annihilator[i]};
}

bool KernelSet::is_totally_ordered() const {
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (!pair_leq(entries_[i].pair, entries_[i + 1].pair)) return false;
    return true;
}

KernelSet kernel_set(const Matrix& t, const SubspaceLattice& lattice) {
    KernelAnalysis analysis = analyze_kernel(t, lattice);
    KernelSet out;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        BilatticePair pair{analysis.support[i], analysis.annihilator[i]};
        bool seen = false;
        for (const auto& e : out.entries_)
            if (e.pair == pair) {
                seen = true;
                break;
            }
        // Elements are scanned in canonical order, so the first source wins.
        if (!seen) out.entries_.push_back({lattice[i], std::move(pair)});
    }
    std::sort(out.entries_.begin(), out.entries_.end(),
              [](const KernelSet::Entry& a, const KernelSet::Entry& b) {
                  return BilatticePair::cmp(a.pair, b.pair) < 0;
              });
    return out;
}

KernelSet kernel_set(const Matrix& t, const Nest& nest) {
    return kernel_set(analyze_kernel(t, nest.to_lattice()), nest);
}

KernelSet kernel_set(const KernelAnalysis& analysis, const Nest& nest) {
    SubspaceLattice lattice = nest.to_lattice();
    KernelSet out;
    // Walk the chain upward; the kernel map is an order homomorphism, so
    // entries come out ascending with the smallest source representative.
    for (const auto& p : nest.chain()) {
        std::size_t i = lattice.index_of(p);
        BilatticePair pair{analysis.support[i], analysis.annihilator[i]};
        if (out.entries_.empty() || !(out.entries_.back().pair == pair))
            out.entries_.push_back({p, std::move(pair)});
    }
    return out;
}

Subspace support_ceiling(const Matrix& t, const Nest& nest, const Subspace& p) {
    SubspaceLattice lattice = nest.to_lattice();
    return support_ceiling(analyze_kernel(t, lattice), lattice, p);
}

Subspace support_ceiling(const KernelAnalysis& analysis, const SubspaceLattice& lattice,
                         const Subspace& p) {
    std::size_t i = lattice.index_of(p);
    Subspace acc = Subspace::zero(lattice.ambient_dim());
    for (std::size_t j = 0; j < lattice.size(); ++j)
        if (analysis.support[j] == analysis.support[i] && !acc.contains(lattice[j]))
            acc = join(acc, lattice[j]);
    return acc;
}

namespace {

Vector random_member(SplitMix64& rng, const Subspace& s) {
    Vector x(s.ambient_dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Scalar c(rng.range(-8, 8), rng.range(1, 3));
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < s.ambient_dim(); ++j) x[j] += c * s.basis()(i, j);
    }
    return x;
}

}  // namespace

Vector kernel_pair_witness(const Matrix& t, const Nest& nest, const Subspace& p,
                           const WitnessOptions& options) {
    return kernel_pair_witness(t, nest, p, analyze_kernel(t, nest.to_lattice()), options);
}

Vector kernel_pair_witness(const Matrix& t, const Nest& nest, const Subspace& p,
                           const KernelAnalysis& analysis, const WitnessOptions& options) {
    SubspaceLattice lattice = nest.to_lattice();
    std::size_t idx = lattice.index_of(p);
    const Subspace& phi = analysis.support[idx];
    Subspace target_image = complement(analysis.annihilator[idx]);

    auto verified = [&](const Vector& x) {
        return smallest_containing(nest, x) == phi &&
               smallest_containing(nest, t.apply(x)) == target_image;
    };

    if (phi.is_zero()) {
        Vector zero(nest.ambient_dim());
        if (verified(zero)) return zero;
    } else {
        Vector u = first_vector(gap(phi, nest.predecessor(phi)));
        if (verified(u)) return u;
        if (!target_image.is_zero()) {
            // A basis vector of phi whose image sticks out of the chain
            // element below the target pins the image support; mixing in the
            // gap vector u then pins the support itself.
            Subspace g = gap(target_image, nest.predecessor(target_image));
            for (std::size_t i = 0; i < phi.dim(); ++i) {
                Vector b = phi.basis().row(i);
                if (g.is_orthogonal_to(t.apply(b))) continue;
                if (verified(b)) return b;
                Vector xb = u + b;
                if (verified(xb)) return xb;
                xb += b;
                if (verified(xb)) return xb;
            }
        }
        SplitMix64 rng(options.seed);
        for (int attempt = 0; attempt < options.random_budget; ++attempt) {
            Vector x = u + random_member(rng, phi);
            if (verified(x)) return x;
        }
    }
    throw std::runtime_error("kernel_pair_witness: search budget exhausted");
}

}  // namespace oplat
