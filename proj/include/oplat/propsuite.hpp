#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oplat/scalar.hpp"

namespace oplat {

/// Outcome of one seeded property run. `cases` counts generated instances,
/// `violations` the instances falsifying the property, `skipped` the
/// instances where a side condition made the check inapplicable.
struct PropertyResult {
    std::string name;
    long cases = 0;
    long violations = 0;
    long skipped = 0;
    std::string detail;

    bool pass() const { return violations == 0; }
};

// Lattice and support-map layer.
PropertyResult prop_lattice_laws(std::uint64_t seed, int cases);
PropertyResult prop_containment_maps(std::uint64_t seed, int cases);
PropertyResult prop_support_vectors_roundtrip(std::uint64_t seed, int cases);
PropertyResult prop_distinct_support_independence(std::uint64_t seed, int cases);
PropertyResult prop_truncation_identity(std::uint64_t seed, int cases);

// Kernel-map layer.
PropertyResult prop_order_homomorphism(std::uint64_t seed, int cases);
PropertyResult prop_kernel_pair_in_bilattice(std::uint64_t seed, int cases);
PropertyResult prop_kernel_pair_idempotent_nest(std::uint64_t seed, int cases);
PropertyResult prop_kernel_pair_idempotent_lattice(std::uint64_t seed, int cases);
PropertyResult prop_kernel_pair_strict_monotonicity(std::uint64_t seed, int cases);
PropertyResult prop_kernel_set_cardinality_bound(std::uint64_t seed, int cases);
PropertyResult prop_kernel_set_totally_ordered(std::uint64_t seed, int cases);
PropertyResult prop_bilattice_closure(std::uint64_t seed, int cases);
PropertyResult prop_kernel_pair_witness(std::uint64_t seed, int cases);

// Decomposition and module layer.
PropertyResult prop_decomposition_pipeline(std::uint64_t seed, int cases);
PropertyResult prop_rank_one_nest_membership(std::uint64_t seed, int cases);
PropertyResult prop_rank_factorization(std::uint64_t seed, int cases);

/// Runs every property above with the given per-property case count.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed, int cases);

}  // namespace oplat
