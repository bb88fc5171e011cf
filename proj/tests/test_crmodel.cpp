#include "cartanforge/crmodel.hpp"

#include <doctest.h>

using namespace cartanforge;

TEST_SUITE("crmodel") {

TEST_CASE("Gaussian rationals") {
    GaussRational a(1, 2), b(3, -1);
    CHECK(a * b == GaussRational(5, 5));
    CHECK((a * b) / b == a);
    CHECK(GaussRational::i() * GaussRational::i() == GaussRational(-1));
    CHECK_THROWS_AS(a / GaussRational(0), std::domain_error);
    CHECK(GaussRational(0, -1).to_string() == "-i");
}

TEST_CASE("all eight fields are tangent to the sphere") {
    for (const auto& X : hol_basis()) {
        CAPTURE(X.name);
        CHECK(tangency_defect(X).is_zero());
    }
}

TEST_CASE("tangency expression of I1 factors through the sphere equation") {
    const GaussPoly z = GaussPoly::variable(CRVariables::z), zb = GaussPoly::variable(CRVariables::zb);
    const GaussPoly two_i(GaussRational(0, 2));
    HoloField I1 = hol_basis()[5];
    CHECK(tangency_expression(I1) == sphere_equation() * (two_i * z - two_i * zb));
}

TEST_CASE("d/dz alone is not tangent") {
    HoloField X{"Z", GaussPoly(1), GaussPoly()};
    const GaussPoly z = GaussPoly::variable(CRVariables::z), zb = GaussPoly::variable(CRVariables::zb);
    CHECK(tangency_defect(X) == GaussPoly(GaussRational(0, -2)) * (z + zb));
}

TEST_CASE("commutator table equals the graded algebra") {
    LieAlgebra table = commutator_table(hol_basis());
    CHECK(table.table() == heisenberg_prolonged().base().table());
    HolReport rep = verify_hol_heisenberg();
    CHECK(rep.ok());
    CHECK(rep.table_mismatches.empty());
}

TEST_CASE("field homogeneities match the grading") {
    auto basis = hol_basis();
    auto degrees = heisenberg_prolonged().degrees();
    for (std::size_t k = 0; k < basis.size(); ++k) CHECK(basis[k].homogeneity() == degrees[k]);
}

TEST_CASE("bracket of fields is antisymmetric and satisfies Jacobi") {
    auto b = hol_basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            HoloField xy = lie_bracket(b[i], b[j]), yx = lie_bracket(b[j], b[i]);
            CHECK(xy.Z == -yx.Z);
            CHECK(xy.W == -yx.W);
        }
    HoloField j1 = lie_bracket(b[1], lie_bracket(b[5], b[7]));
    HoloField j2 = lie_bracket(b[5], lie_bracket(b[7], b[1]));
    HoloField j3 = lie_bracket(b[7], lie_bracket(b[1], b[5]));
    CHECK((j1.Z + j2.Z + j3.Z).is_zero());
    CHECK((j1.W + j2.W + j3.W).is_zero());
}

TEST_CASE("dependent or non-closed families are rejected") {
    auto b = hol_basis();
    CHECK_THROWS_AS(commutator_table({b[0], b[0]}), std::invalid_argument);
    CHECK_THROWS_AS(commutator_table({b[1], b[2]}), NotInSpan);
}

}
