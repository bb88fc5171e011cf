#include "cartanforge/tanaka.hpp"

#include <doctest.h>

using namespace cartanforge;

namespace {

// Number of monomials x^a y^b z^c with a + b + 2c = w.
int weighted_monomials(int w) {
    int n = 0;
    for (int c = 0; 2 * c <= w; ++c) n += w - 2 * c + 1;
    return n;
}

GradedLieAlgebra abelian_line() { return GradedLieAlgebra(LieAlgebra({"x"}), {-1}); }

}  // namespace

TEST_SUITE("tanaka") {

TEST_CASE("Heisenberg with J prolongs to dims 1,2,2,2,1 and terminates") {
    Prolongation P = prolong(heisenberg_negative_part(), true);
    CHECK(P.graded_dims() == std::vector<int>{1, 2, 2, 2, 1});
    CHECK(P.terminated);
    CHECK(validate(P.algebra).ok());
    for (const auto& level : P.levels) CHECK(is_derivation_level(P.algebra, level));
}

TEST_CASE("echelon basis of the prolongation relative to the bundled algebra") {
    Prolongation P = prolong(heisenberg_negative_part(), true);
    GradedLieAlgebra g = heisenberg_prolonged();
    IsomorphismResult iso = check_isomorphic_to(P.algebra, g);
    REQUIRE(iso.found());
    CHECK(is_graded_isomorphism(P.algebra, g, iso.map));
    const LieAlgebra& B = g.base();
    Matrix expected(8, 8);
    expected(B.index("t"), 0) = 1;
    expected(B.index("h1"), 1) = 1;
    expected(B.index("h2"), 2) = 1;
    expected(B.index("r"), 3) = 1;
    expected(B.index("d"), 4) = -1;
    expected(B.index("i2"), 5) = Rational(-1, 6);
    expected(B.index("i1"), 6) = Rational(-1, 2);
    expected(B.index("j"), 7) = Rational(1, 6);
    CHECK(iso.map == expected);
    CHECK(is_graded_isomorphism(P.algebra, g, expected));
}

TEST_CASE("Heisenberg without J gives the contact algebra dimensions") {
    Prolongation P = prolong(heisenberg_negative_part(), false, 4);
    CHECK_FALSE(P.terminated);
    auto dims = P.graded_dims();
    REQUIRE(dims.size() == 7);
    for (int k = -2; k <= 4; ++k) CHECK(dims[k + 2] == weighted_monomials(k + 2));
    for (const auto& level : P.levels) CHECK(is_derivation_level(P.algebra, level));
}

TEST_CASE("abelian line: every level is all of Hom(m, g_{k-1})") {
    Prolongation P = prolong(abelian_line(), false, 5);
    CHECK_FALSE(P.terminated);
    CHECK(P.graded_dims() == std::vector<int>{1, 1, 1, 1, 1, 1, 1});
    for (const auto& level : P.levels) {
        REQUIRE(level.basis.size() == 1);
        CHECK_FALSE(level.basis[0].is_zero());
    }
}

TEST_CASE("invalid input") {
    LieAlgebra L({"a", "b"});
    CHECK_THROWS_AS(prolong(GradedLieAlgebra(L, {-1, 0})), InvalidInput);
    GradedLieAlgebra m = heisenberg_negative_part();
    ComplexStructure bad{{1, 2}, Matrix::identity(2)};
    CHECK_THROWS_AS(prolong(GradedLieAlgebra(m.base(), m.degrees(), bad), true), InvalidInput);
}

TEST_CASE("non-isomorphic algebras of equal graded dimension") {
    Prolongation P = prolong(heisenberg_negative_part(), true);
    GradedLieAlgebra flat(LieAlgebra::abelian(8), P.algebra.degrees());
    IsomorphismResult r = check_isomorphic_to(P.algebra, flat);
    CHECK(r.status == IsomorphismResult::Status::NotIsomorphic);
    CHECK_FALSE(is_graded_isomorphism(P.algebra, flat, Matrix::identity(8)));
}

TEST_CASE("isomorphism of an algebra to itself") {
    GradedLieAlgebra g = heisenberg_prolonged();
    IsomorphismResult r = check_isomorphic_to(g, g);
    REQUIRE(r.found());
    CHECK(r.map == Matrix::identity(8));
}

}
