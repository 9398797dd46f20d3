#include "oplat/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace oplat {

namespace {

void sort_unique(std::vector<Subspace>& elements) {
    std::sort(elements.begin(), elements.end(),
              [](const Subspace& a, const Subspace& b) { return Subspace::cmp(a, b) < 0; });
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
}

}  // namespace

SubspaceLattice::SubspaceLattice(std::size_t ambient_dim, std::vector<Subspace> elements)
    : ambient_dim_(ambient_dim), elements_(std::move(elements)) {
    for (const auto& s : elements_)
        if (s.ambient_dim() != ambient_dim_)
            throw std::invalid_argument("lattice element with wrong ambient dimension");
    sort_unique(elements_);
    if (elements_.empty() || !elements_.front().is_zero() || !elements_.back().is_full())
        throw std::invalid_argument("subspace lattice must contain 0 and I");
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (std::size_t j = i + 1; j < elements_.size(); ++j) {
            if (!contains(join(elements_[i], elements_[j])))
                throw std::invalid_argument("subspace lattice not closed under join");
            if (!contains(meet(elements_[i], elements_[j])))
                throw std::invalid_argument("subspace lattice not closed under meet");
        }
}

SubspaceLattice::SubspaceLattice(std::size_t ambient_dim, std::vector<Subspace> elements,
                                 Unchecked)
    : ambient_dim_(ambient_dim), elements_(std::move(elements)) {
    sort_unique(elements_);
}

bool SubspaceLattice::contains(const Subspace& s) const {
    auto it = std::lower_bound(
        elements_.begin(), elements_.end(), s,
        [](const Subspace& a, const Subspace& b) { return Subspace::cmp(a, b) < 0; });
    return it != elements_.end() && *it == s;
}

std::size_t SubspaceLattice::index_of(const Subspace& s) const {
    auto it = std::lower_bound(
        elements_.begin(), elements_.end(), s,
        [](const Subspace& a, const Subspace& b) { return Subspace::cmp(a, b) < 0; });
    if (it == elements_.end() || !(*it == s))
        throw std::invalid_argument("subspace is not a lattice element");
    return static_cast<std::size_t>(it - elements_.begin());
}

bool SubspaceLattice::is_totally_ordered() const {
    // Elements are sorted by dimension first, so comparability reduces to
    // successive inclusions.
    for (std::size_t i = 0; i + 1 < elements_.size(); ++i)
        if (!elements_[i + 1].contains(elements_[i])) return false;
    return true;
}

SubspaceLattice lattice_perp(const SubspaceLattice& lattice) {
    std::vector<Subspace> elements;
    elements.reserve(lattice.size());
    for (const auto& s : lattice.elements()) elements.push_back(complement(s));
    // Complements of a closed family are closed (De Morgan), so skip the
    // quadratic validation.
    return SubspaceLattice(lattice.ambient_dim(), std::move(elements),
                           SubspaceLattice::Unchecked{});
}

Nest::Nest(std::size_t ambient_dim, std::vector<Subspace> chain)
    : ambient_dim_(ambient_dim), chain_(std::move(chain)) {
    for (const auto& s : chain_)
        if (s.ambient_dim() != ambient_dim_)
            throw std::invalid_argument("nest element with wrong ambient dimension");
    sort_unique(chain_);
    if (chain_.empty() || !chain_.front().is_zero() || !chain_.back().is_full())
        throw std::invalid_argument("nest must run from 0 to I");
    for (std::size_t i = 0; i + 1 < chain_.size(); ++i)
        if (!chain_[i + 1].contains(chain_[i]) || chain_[i + 1] == chain_[i])
            throw std::invalid_argument("nest chain is not strictly increasing");
}

Nest Nest::coordinate(std::size_t ambient_dim, std::vector<std::size_t> dims) {
    std::vector<Subspace> chain;
    chain.push_back(Subspace::zero(ambient_dim));
    for (std::size_t d : dims) {
        if (d > ambient_dim) throw std::invalid_argument("coordinate nest dimension out of range");
        Matrix rows(d, ambient_dim);
        for (std::size_t i = 0; i < d; ++i) rows(i, i) = Scalar(1);
        chain.push_back(Subspace::span_rows(rows));
    }
    chain.push_back(Subspace::full(ambient_dim));
    return Nest(ambient_dim, std::move(chain));
}

Nest Nest::coordinate_full(std::size_t ambient_dim) {
    std::vector<std::size_t> dims(ambient_dim ? ambient_dim - 1 : 0);
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = i + 1;
    return coordinate(ambient_dim, std::move(dims));
}

bool Nest::contains(const Subspace& s) const {
    for (const auto& c : chain_)
        if (c == s) return true;
    return false;
}

std::size_t Nest::index_of(const Subspace& s) const {
    for (std::size_t i = 0; i < chain_.size(); ++i)
        if (chain_[i] == s) return i;
    throw std::invalid_argument("subspace is not a nest element");
}

const Subspace& Nest::predecessor(const Subspace& p) const {
    std::size_t i = index_of(p);
    return chain_[i == 0 ? 0 : i - 1];
}

const Subspace& Nest::successor(const Subspace& p) const {
    std::size_t i = index_of(p);
    return chain_[i + 1 == chain_.size() ? i : i + 1];
}

SubspaceLattice Nest::to_lattice() const {
    // A chain is trivially closed under join and meet.
    return SubspaceLattice(ambient_dim_, chain_, SubspaceLattice::Unchecked{});
}

Partition::Partition(Nest nest, std::vector<std::size_t> indices)
    : nest_(std::move(nest)), indices_(std::move(indices)) {
    if (indices_.empty() || indices_.front() != 0 || indices_.back() + 1 != nest_.size())
        throw std::invalid_argument("partition must start at 0 and end at I");
    for (std::size_t i = 0; i + 1 < indices_.size(); ++i)
        if (indices_[i] >= indices_[i + 1])
            throw std::invalid_argument("partition indices must be strictly increasing");
}

Partition Partition::full(const Nest& nest) {
    std::vector<std::size_t> indices(nest.size());
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
    return Partition(nest, std::move(indices));
}

std::vector<Subspace> Partition::selected() const {
    std::vector<Subspace> out;
    out.reserve(indices_.size());
    for (std::size_t i : indices_) out.push_back(nest_[i]);
    return out;
}

Subspace smallest_containing(const SubspaceLattice& lattice, const Vector& x) {
    Subspace acc = lattice.top();
    for (const auto& p : lattice.elements())
        if (p.contains(x)) acc = meet(acc, p);
    return acc;
}

Subspace smallest_containing(const Nest& nest, const Vector& x) {
    for (const auto& p : nest.chain())
        if (p.contains(x)) return p;  // chain order makes the first hit smallest
    throw std::logic_error("nest top must contain every vector");
}

Subspace largest_annihilating(const SubspaceLattice& lattice, const Vector& x) {
    Subspace acc = lattice.bottom();
    for (const auto& p : lattice.elements())
        if (p.is_orthogonal_to(x)) acc = join(acc, p);
    return acc;
}

Subspace largest_annihilating(const Nest& nest, const Vector& x) {
    for (std::size_t i = nest.size(); i-- > 0;)
        if (nest[i].is_orthogonal_to(x)) return nest[i];
    throw std::logic_error("nest bottom annihilates every vector");
}

Subspace gap(const Subspace& p, const Subspace& q) { return meet(p, complement(q)); }

Vector first_vector(const Subspace& s) {
    if (s.is_zero()) throw std::invalid_argument("no nonzero vector in the zero subspace");
    for (std::size_t i = 0; i < s.ambient_dim(); ++i) {
        Vector e = Vector::unit(s.ambient_dim(), i);
        if (s.contains(e)) return e;
    }
    return s.basis().row(0);
}

Vector vector_with_supports(const Nest& nest, const Subspace& p, const Subspace& nn) {
    if (!nest.contains(p) || !nest.contains(nn))
        throw std::invalid_argument("support targets must be nest elements");
    if (p.is_zero() || !p.contains(nn) || p == nn)
        throw std::invalid_argument("vector_with_supports requires nn < p with p != 0");
    const Subspace& p_minus = nest.predecessor(p);
    Vector x = first_vector(gap(p, p_minus));
    if (!(nn == p_minus)) {
        // Lower the annihilator: add a vector sitting just above nn.
        const Subspace& nn_plus = nest.successor(nn);
        x += first_vector(gap(nn_plus, nn));
    }
    return x;
}

Truncations truncations(const Partition& partition, const Matrix& t) {
    std::size_t n = partition.nest().ambient_dim();
    if (t.rows() != n || t.cols() != n)
        throw std::invalid_argument("operator dimension does not match the partition");
    std::vector<Subspace> chain = partition.selected();
    std::vector<Matrix> projs;
    projs.reserve(chain.size());
    for (const auto& s : chain) projs.push_back(projector(s));
    Matrix upper = Matrix::zero(n, n), lower = Matrix::zero(n, n), diag = Matrix::zero(n, n);
    for (std::size_t i = 1; i < chain.size(); ++i) {
        Matrix delta = projs[i] - projs[i - 1];
        Matrix t_delta = t * delta;
        upper += projs[i - 1] * t_delta;
        lower += (Matrix::identity(n) - projs[i]) * t_delta;
        diag += delta * t_delta;
    }
    return {std::move(upper), std::move(lower), std::move(diag)};
}

}  // namespace oplat
