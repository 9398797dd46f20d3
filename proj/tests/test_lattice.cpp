#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oplat/propsuite.hpp"
#include "oplat/random_instances.hpp"

using namespace oplat;
using fixtures::coord;

TEST_CASE("join and meet fixtures") {
    Subspace e1 = Subspace::span(3, {Vector::unit(3, 0)});
    Subspace e2 = Subspace::span(3, {Vector::unit(3, 1)});
    CHECK(join(e1, e2) == coord(3, 2));
    CHECK(join(e1, Subspace::zero(3)) == e1);
    Subspace a = Subspace::span(3, {Vector{Scalar(1), Scalar(1), Scalar(0)}});
    Subspace b = Subspace::span(3, {Vector{Scalar(1), Scalar(-1), Scalar(0)}});
    CHECK(join(a, b) == coord(3, 2));

    CHECK(meet(a, Subspace::full(3)) == a);
    CHECK(meet(e1, e2).is_zero());
    Subspace e12 = coord(3, 2);
    Subspace e23 = Subspace::span(3, {Vector::unit(3, 1), Vector::unit(3, 2)});
    CHECK(meet(e12, e23) == e2);
}

TEST_CASE("complement fixtures") {
    CHECK(complement(Subspace::zero(3)) == Subspace::full(3));
    CHECK(complement(coord(3, 1)) ==
          Subspace::span(3, {Vector::unit(3, 1), Vector::unit(3, 2)}));
    Subspace diag = Subspace::span(2, {Vector{Scalar(1), Scalar(1)}});
    CHECK(complement(diag) == Subspace::span(2, {Vector{Scalar(1), Scalar(-1)}}));
    SplitMix64 rng(3);
    for (int c = 0; c < 40; ++c) {
        Field field = c % 2 ? Field::GaussianRationals : Field::Rationals;
        Subspace s = Subspace::span_rows(random_matrix(rng, 1 + rng.below(4), 4, field));
        CHECK(complement(complement(s)) == s);
        CHECK(s.dim() + complement(s).dim() == 4);
    }
}

TEST_CASE("lattice construction validates") {
    std::vector<Subspace> missing_top{Subspace::zero(2)};
    CHECK_THROWS_AS(SubspaceLattice(2, missing_top), std::invalid_argument);

    // Two incomparable lines without their join/meet closure.
    std::vector<Subspace> open{Subspace::zero(2), Subspace::full(2),
                               Subspace::span(2, {Vector::unit(2, 0)}),
                               Subspace::span(2, {Vector{Scalar(1), Scalar(1)}})};
    CHECK_NOTHROW(SubspaceLattice(2, open));  // join = I, meet = 0: closed
    std::vector<Subspace> bad{Subspace::zero(3), Subspace::full(3),
                              coord(3, 2),
                              Subspace::span(3, {Vector::unit(3, 1), Vector::unit(3, 2)})};
    CHECK_THROWS_AS(SubspaceLattice(3, bad), std::invalid_argument);  // missing meet
}

TEST_CASE("nest construction validates") {
    CHECK_THROWS_AS(Nest(2, {Subspace::zero(2)}), std::invalid_argument);
    std::vector<Subspace> not_chain{Subspace::zero(3), Subspace::full(3),
                                    Subspace::span(3, {Vector::unit(3, 0)}),
                                    Subspace::span(3, {Vector::unit(3, 1)})};
    CHECK_THROWS_AS(Nest(3, not_chain), std::invalid_argument);
    CHECK(Nest::coordinate_full(4).size() == 5);
    CHECK(Nest::coordinate(4, {2}).size() == 3);
}

TEST_CASE("lattice perp") {
    SubspaceLattice trivial(2, {Subspace::zero(2), Subspace::full(2)});
    CHECK(lattice_perp(trivial).elements() == trivial.elements());

    Nest n2 = Nest::coordinate_full(2);
    SubspaceLattice perp = lattice_perp(n2.to_lattice());
    CHECK(perp.contains(Subspace::span(2, {Vector::unit(2, 1)})));
    CHECK(perp.size() == 3);

    SplitMix64 rng(5);
    for (int c = 0; c < 10; ++c) {
        SubspaceLattice lattice = random_lattice(rng, 3);
        SubspaceLattice once = lattice_perp(lattice);
        // The complemented family is again a valid lattice.
        CHECK_NOTHROW(SubspaceLattice(3, once.elements()));
        SubspaceLattice twice = lattice_perp(once);
        CHECK(twice.elements() == lattice.elements());
    }
}

TEST_CASE("smallest containing element over the coordinate nest") {
    Nest n4 = fixtures::n4();
    CHECK(smallest_containing(n4, Vector::unit(4, 0)) == coord(4, 1));
    CHECK(smallest_containing(n4, Vector(4)) == Subspace::zero(4));
    Vector x = Vector::unit(4, 0) + Vector::unit(4, 2);
    CHECK(smallest_containing(n4, x) == coord(4, 3));
    // Generic lattice route agrees with the chain scan.
    CHECK(smallest_containing(n4.to_lattice(), x) == coord(4, 3));
}

TEST_CASE("largest annihilating element over the coordinate nest") {
    Nest n4 = fixtures::n4();
    CHECK(largest_annihilating(n4, Vector::unit(4, 0)) == Subspace::zero(4));
    CHECK(largest_annihilating(n4, Vector(4)) == Subspace::full(4));
    CHECK(largest_annihilating(n4, Vector::unit(4, 2)) == coord(4, 2));
    CHECK(largest_annihilating(n4.to_lattice(), Vector::unit(4, 2)) == coord(4, 2));
}

TEST_CASE("predecessor and successor") {
    Nest n4 = fixtures::n4();
    CHECK(n4.predecessor(coord(4, 2)) == coord(4, 1));
    CHECK(n4.successor(coord(4, 2)) == coord(4, 3));
    CHECK(n4.predecessor(Subspace::zero(4)) == Subspace::zero(4));
    CHECK(n4.successor(Subspace::full(4)) == Subspace::full(4));
    Subspace alien = Subspace::span(4, {Vector{Scalar(1), Scalar(1), Scalar(0), Scalar(0)}});
    CHECK_THROWS_AS(n4.predecessor(alien), std::invalid_argument);
}

TEST_CASE("support vector construction fixtures") {
    Nest n4 = fixtures::n4();
    CHECK(vector_with_supports(n4, coord(4, 1), Subspace::zero(4)) == Vector::unit(4, 0));
    CHECK(vector_with_supports(n4, coord(4, 3), coord(4, 1)) ==
          Vector::unit(4, 1) + Vector::unit(4, 2));
    CHECK(vector_with_supports(n4, coord(4, 2), coord(4, 1)) == Vector::unit(4, 1));
    CHECK_THROWS_AS(vector_with_supports(n4, Subspace::zero(4), Subspace::zero(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(vector_with_supports(n4, coord(4, 1), coord(4, 2)),
                    std::invalid_argument);
}

TEST_CASE("support vector round trip and independence properties") {
    CHECK(prop_support_vectors_roundtrip(17, 40).pass());
    CHECK(prop_distinct_support_independence(18, 40).pass());
    CHECK(prop_containment_maps(19, 60).pass());
    CHECK(prop_lattice_laws(20, 25).pass());
}

TEST_CASE("truncation fixtures") {
    Nest n4 = fixtures::n4();
    Matrix upper{{1, 2, 3, 4}, {0, 5, 6, 7}, {0, 0, 8, 9}, {0, 0, 0, 10}};
    Truncations full = truncations(Partition::full(n4), upper);
    Matrix diag(4, 4);
    for (std::size_t i = 0; i < 4; ++i) diag(i, i) = upper(i, i);
    CHECK(full.diagonal == diag);
    CHECK(full.lower.is_zero());

    Matrix t1 = fixtures::t1();
    Truncations trivial = truncations(Partition(n4, {0, 4}), t1);
    CHECK(trivial.upper.is_zero());
    CHECK(trivial.lower.is_zero());
    CHECK(trivial.diagonal == t1);

    Truncations mid = truncations(Partition(n4, {0, 2, 4}), t1);
    Matrix block(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 2; j < 4; ++j) block(i, j) = t1(i, j);
    CHECK(mid.upper == block);
    CHECK(mid.upper + mid.lower + mid.diagonal == t1);
}

TEST_CASE("truncation identity property") {
    CHECK(prop_truncation_identity(21, 40).pass());
}

TEST_CASE("partition validation") {
    Nest n4 = fixtures::n4();
    CHECK_THROWS_AS(Partition(n4, {0, 1}), std::invalid_argument);      // must end at I
    CHECK_THROWS_AS(Partition(n4, {1, 4}), std::invalid_argument);      // must start at 0
    CHECK_THROWS_AS(Partition(n4, {0, 2, 2, 4}), std::invalid_argument);
    CHECK(Partition(n4, {0, 2, 4}).selected().size() == 3);
}
