#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oplat/linalg.hpp"
#include "oplat/random_instances.hpp"
#include "oplat/subspace.hpp"

using namespace oplat;

TEST_CASE("scalars are canonical and exact") {
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    CHECK(Scalar(-2, -4) == Scalar(1, 2));
    CHECK(Scalar(3, -6) == Scalar(-1, 2));
    CHECK(Scalar(0, 5).is_zero());
    CHECK((Scalar(1, 3) + Scalar(1, 6)) == Scalar(1, 2));
    CHECK((Scalar(2, 3) * Scalar(3, 4)) == Scalar(1, 2));
    CHECK((Scalar(1) / Scalar(3)) == Scalar(1, 3));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
    CHECK_THROWS_AS(Scalar(1, 0), std::domain_error);
}

TEST_CASE("gaussian rational arithmetic") {
    Scalar i = Scalar::imaginary_unit();
    CHECK(i * i == Scalar(-1));
    CHECK(i.conj() == -i);
    Scalar z(mpq_class(1, 2), mpq_class(-3, 4));
    CHECK((z * z.conj()).is_real());
    CHECK((z / z) == Scalar(1));
    CHECK(z.norm2() == mpq_class(13, 16));
}

TEST_CASE("scalar string round trips") {
    for (const char* text : {"0", "7", "-3/4", "1/2+3/4i", "1/2-3/4i", "0+1i", "-5"}) {
        Scalar s = Scalar::parse(text);
        CHECK(Scalar::parse(s.str()) == s);
        CHECK(s.str() == text);
    }
    CHECK(Scalar::parse("i") == Scalar::imaginary_unit());
    CHECK(Scalar::parse("-i") == -Scalar::imaginary_unit());
    CHECK(Scalar::parse("2/4") == Scalar(1, 2));
    CHECK(Scalar::parse("3+i").str() == "3+1i");
    CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1..2"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("2i", Field::Rationals), std::invalid_argument);
    CHECK_NOTHROW(Scalar::parse("2", Field::Rationals));
}

TEST_CASE("matrix basics and adjoint involution") {
    Matrix m{{1, 2}, {3, 4}};
    CHECK(m.adjoint().adjoint() == m);
    CHECK((m - m).is_zero());
    CHECK(m * Matrix::identity(2) == m);
    CHECK(m.trace() == Scalar(5));

    Scalar i = Scalar::imaginary_unit();
    Matrix c{{i, Scalar(0)}, {Scalar(0), Scalar(1)}};
    CHECK(c.adjoint()(0, 0) == -i);
    CHECK(c.adjoint().adjoint() == c);
}

TEST_CASE("outer products") {
    Vector e1 = Vector::unit(2, 0), e2 = Vector::unit(2, 1);
    CHECK(outer(e1, e2) == Matrix{{0, 1}, {0, 0}});
    CHECK(outer(Vector(2), e2).is_zero());

    // Oracle: evaluate z -> <z,y>x on the standard basis.
    Vector x{Scalar(1), Scalar(1)}, y{Scalar(1), Scalar(-1)};
    Matrix expected(2, 2);
    for (std::size_t j = 0; j < 2; ++j) {
        Vector image = inner(Vector::unit(2, j), y) * x;
        for (std::size_t i = 0; i < 2; ++i) expected(i, j) = image[i];
    }
    CHECK(expected == Matrix{{1, -1}, {1, -1}});
    CHECK(outer(x, y) == expected);

    // Applying the matrix agrees with the defining formula.
    Vector z{Scalar(2), Scalar(3, 2)};
    CHECK(outer(x, y).apply(z) == inner(z, y) * x);
}

TEST_CASE("outer is linear in x and conjugate-linear in y") {
    SplitMix64 rng(7);
    for (int c = 0; c < 50; ++c) {
        Vector x = random_vector(rng, 3, Field::GaussianRationals);
        Vector y = random_vector(rng, 3, Field::GaussianRationals);
        Scalar a = random_small_scalar(rng, Field::GaussianRationals);
        CHECK(outer(a * x, y) == a * outer(x, y));
        CHECK(outer(x, a * y) == a.conj() * outer(x, y));
        if (!x.is_zero() && !y.is_zero()) CHECK(rank(outer(x, y)) == 1);
    }
}

TEST_CASE("rref fixtures") {
    RrefResult id3 = rref(Matrix::identity(3));
    CHECK(id3.r == Matrix::identity(3));
    CHECK(id3.pivot_columns == std::vector<std::size_t>{0, 1, 2});

    RrefResult z = rref(Matrix::zero(2, 2));
    CHECK(z.r == Matrix::zero(2, 2));
    CHECK(z.pivot_columns.empty());

    CHECK(rref(fixtures::t1()).pivot_columns.size() == 2);
}

TEST_CASE("rank fixtures") {
    CHECK(rank(fixtures::t1()) == 2);
    CHECK(rank(fixtures::t2()) == 3);
    CHECK(rank(Matrix::zero(3, 3)) == 0);
}

TEST_CASE("rank factorization fixtures") {
    auto single = rank_factorize(Matrix::unit(4, 0, 1));
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == Vector::unit(4, 0));
    CHECK(single[0].second == Vector::unit(4, 1));

    auto terms = rank_factorize(fixtures::t1());
    REQUIRE(terms.size() == 2);
    Matrix sum = Matrix::zero(4, 4);
    for (const auto& [x, y] : terms) sum += outer(x, y);
    CHECK(sum == fixtures::t1());

    CHECK(rank_factorize(Matrix::zero(2, 2)).empty());
}

TEST_CASE("null space fixtures") {
    CHECK(null_space(Matrix::identity(3)).is_zero());
    CHECK(null_space(Matrix::zero(3, 3)) == Subspace::full(3));
    Subspace k = null_space(fixtures::t1());
    CHECK(k.dim() == 2);  // rank-nullity with rank 2
    for (std::size_t i = 0; i < k.dim(); ++i)
        CHECK(fixtures::t1().apply(k.basis().row(i)).is_zero());
}

TEST_CASE("projector fixtures") {
    CHECK(projector(fixtures::coord(2, 1)) == Matrix{{1, 0}, {0, 0}});
    CHECK(projector(Subspace::full(3)) == Matrix::identity(3));
    CHECK(projector(Subspace::zero(3)) == Matrix::zero(3, 3));

    Subspace diag = Subspace::span(2, {Vector{Scalar(1), Scalar(1)}});
    Matrix p = projector(diag);
    CHECK(p == Matrix{{Scalar(1, 2), Scalar(1, 2)}, {Scalar(1, 2), Scalar(1, 2)}});
    CHECK(p * p == p);
    CHECK(p.adjoint() == p);
    CHECK(column_space(p) == diag);
}

TEST_CASE("projector and factorization invariants on random input") {
    SplitMix64 rng(11);
    for (int c = 0; c < 60; ++c) {
        Field field = c % 3 == 2 ? Field::GaussianRationals : Field::Rationals;
        Matrix m = random_matrix(rng, 1 + rng.below(5), 1 + rng.below(5), field);
        RrefResult rr = rref(m);
        auto terms = rank_factorize(m);
        CHECK(rr.pivot_columns.size() == rank(m));
        CHECK(terms.size() == rank(m));

        Subspace s = column_space(m);
        Matrix p = projector(s);
        CHECK(p * p == p);
        CHECK(p.adjoint() == p);
        CHECK(column_space(p) == s);  // subspace round trip
        for (std::size_t i = 0; i < s.dim(); ++i) {
            Vector b = s.basis().row(i);
            CHECK(p.apply(b) == b);
        }
    }
}

TEST_CASE("floating point rank backend agrees at desk scale") {
    SplitMix64 rng(13);
    for (int c = 0; c < 100; ++c) {
        Matrix m = random_operator(rng, 2 + rng.below(5));
        CHECK(fp_rank(m) == rank(m));
    }
    CHECK(fp_rank(Matrix::zero(3, 3)) == 0);
    CHECK(fp_rank(fixtures::t1()) == 2);
    CHECK(fp_rank(fixtures::t2()) == 3);
}
