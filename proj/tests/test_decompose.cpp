#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oplat/decompose.hpp"
#include "oplat/propsuite.hpp"

using namespace oplat;
using fixtures::coord;

namespace {

Matrix term_sum(const std::vector<Rank1Term>& terms, std::size_t n) {
    Matrix sum = Matrix::zero(n, n);
    for (const auto& t : terms) sum += outer(t.x, t.y);
    return sum;
}

bool check_named(const VerificationReport& report, const std::string& name) {
    for (const auto& c : report.checks)
        if (c.name == name) return c.pass;
    return false;
}

}  // namespace

TEST_CASE("zero operator decomposes to nothing") {
    Decomposition d = decompose(Matrix::zero(4, 4), fixtures::n4());
    CHECK(d.terms.empty());
    CHECK(d.slices.empty());
    CHECK(d.initial_support == Subspace::full(4));
    CHECK(verify_decomposition(d, fixtures::n4()).mandatory_pass());
}

TEST_CASE("decomposition of t1 matches the block structure") {
    Nest n4 = fixtures::n4();
    Matrix t1 = fixtures::t1();
    Decomposition d = decompose(t1, n4);

    REQUIRE(d.slices.size() == 2);  // two kernel-set entries below the top pair
    CHECK(d.initial_support == coord(4, 1));

    // First slice: P1 T1 (P2 - P1) = E12.
    CHECK(d.slices[0].matrix == Matrix::unit(4, 0, 1));
    CHECK(d.slices[0].support_prev == coord(4, 1));
    CHECK(d.slices[0].support == coord(4, 2));
    CHECK(d.slices[0].annihilator == complement(coord(4, 1)));

    // Second slice: T1 (I - P2), the last two columns.
    Matrix tail(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 2; j < 4; ++j) tail(i, j) = t1(i, j);
    CHECK(d.slices[1].matrix == tail);

    REQUIRE(d.terms.size() == 3);  // 1 + rank(tail)
    CHECK(d.terms.size() <= d.slices.size() * rank(t1));
    CHECK(term_sum(d.terms, 4) == t1);
    CHECK(verify_decomposition(d, n4).mandatory_pass());
}

TEST_CASE("rank one operator yields a single term") {
    Nest n2 = Nest::coordinate_full(2);
    Decomposition d = decompose(Matrix::unit(2, 0, 1), n2);
    REQUIRE(d.terms.size() == 1);
    CHECK(term_sum(d.terms, 2) == Matrix::unit(2, 0, 1));
}

TEST_CASE("decomposition of t2 verifies with the rank bound") {
    Nest n4 = fixtures::n4();
    Decomposition d = decompose(fixtures::t2(), n4);
    CHECK(d.terms.size() <= 2 * 3);  // k * rank
    VerificationReport report = verify_decomposition(d, n4);
    CHECK(report.mandatory_pass());
    CHECK(check_named(report, "terms_sum_to_operator"));
    CHECK(check_named(report, "kernel_pairs_annihilate_terms"));
}

TEST_CASE("tampered decomposition is rejected") {
    Nest n4 = fixtures::n4();
    Decomposition d = decompose(fixtures::t1(), n4);
    d.terms[0].x *= Scalar(2);
    VerificationReport report = verify_decomposition(d, n4);
    CHECK_FALSE(report.mandatory_pass());
    CHECK_FALSE(check_named(report, "terms_sum_to_operator"));
}

TEST_CASE("kernel pairs annihilate terms via full matrix products") {
    // Heavier independent route than the orthogonality shortcut used in
    // verify_decomposition: proj(Q) * term * proj(P) must vanish.
    Nest n4 = fixtures::n4();
    for (const Matrix& t : {fixtures::t1(), fixtures::t2()}) {
        Decomposition d = decompose(t, n4);
        for (const auto& entry : d.kernel.entries()) {
            Matrix q = projector(entry.pair.q);
            Matrix p = projector(entry.pair.p);
            for (const auto& term : d.terms)
                CHECK((q * outer(term.x, term.y) * p).is_zero());
        }
    }
}

TEST_CASE("slice matrices absorb the operator against each kernel pair") {
    Nest n4 = fixtures::n4();
    Decomposition d = decompose(fixtures::t2(), n4);
    for (const auto& entry : d.kernel.entries())
        for (const auto& s : d.slices)
            CHECK((projector(entry.pair.q) * s.matrix * projector(entry.pair.p)).is_zero());
}

TEST_CASE("pipeline property at small scale") {
    CHECK(prop_decomposition_pipeline(41, 50).pass());
}
