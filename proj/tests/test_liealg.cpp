#include "cartanforge/liealg.hpp"

#include <doctest.h>

#include <fstream>

using namespace cartanforge;

TEST_SUITE("liealg") {

TEST_CASE("bundled algebras satisfy Jacobi, grading and J") {
    for (const auto& g : {heisenberg_prolonged(), heisenberg_negative_part()}) {
        ValidationReport rep = validate(g);
        CHECK(rep.jacobi_violations.empty());
        CHECK(rep.grading_violations.empty());
        CHECK(rep.complex_structure_ok);
    }
    for (const char* file : {"g.json", "heisenberg_m.json"}) {
        CAPTURE(file);
        CHECK(validate(load_algebra(std::string(CARTANFORGE_DATA_DIR) + "/" + file)).ok());
    }
}

TEST_CASE("bracket table of the prolonged Heisenberg algebra") {
    GradedLieAlgebra g = heisenberg_prolonged();
    const LieAlgebra& L = g.base();
    auto br = [&](const char* a, const char* b) { return L.basis_bracket(L.index(a), L.index(b)); };
    auto vec = [&](std::vector<std::pair<const char*, Rational>> terms) {
        Vec v(L.dim());
        for (auto& [n, c] : terms) v[L.index(n)] = c;
        return v;
    };
    CHECK(br("h1", "h2") == vec({{"t", 4}}));
    CHECK(br("t", "d") == vec({{"t", 2}}));
    CHECK(br("h1", "d") == vec({{"h1", 1}}));
    CHECK(br("d", "j") == vec({{"j", 2}}));
    CHECK(g.degrees() == std::vector<int>{-2, -1, -1, 0, 0, 1, 1, 2});
    CHECK(br("h2", "h1") == vec({{"t", -4}}));
}

TEST_CASE("Jacobi violation is detected") {
    LieAlgebra L({"a", "b", "c"});
    L.set_bracket(0, 1, Vec{0, 1, 0});
    L.set_bracket(1, 2, Vec{1, 0, 0});
    CHECK_FALSE(validate(L).jacobi_violations.empty());
}

TEST_CASE("grading violation is detected") {
    LieAlgebra L({"a", "b", "c"});
    L.set_bracket(0, 1, Vec{0, 0, 1});
    GradedLieAlgebra g(L, {-1, -1, -1});
    CHECK_FALSE(validate(g).grading_violations.empty());
}

TEST_CASE("Killing form") {
    CHECK(killing_nondegenerate(heisenberg_prolonged().base()));
    CHECK_FALSE(killing_nondegenerate(heisenberg_negative_part().base()));
    CHECK_THROWS_AS(killing_dual_basis(heisenberg_negative_part().base(), {0, 1, 2}), SingularKillingForm);
    const GradedLieAlgebra G = heisenberg_prolonged();
    const LieAlgebra& g = G.base();
    std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7};
    auto dual = killing_dual_basis(g, all);
    Matrix B = killing_form(g);
    CHECK(B == B.transpose());
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK((B * dual[i])[j] == (i == j ? 1 : 0));
}

TEST_CASE("ad is a Lie algebra homomorphism") {
    const GradedLieAlgebra G = heisenberg_prolonged();
    const LieAlgebra& g = G.base();
    RationalSampler s(17, 9);
    for (int trial = 0; trial < 10; ++trial) {
        Vec x(8), y(8);
        for (int k = 0; k < 8; ++k) {
            x[k] = s.next();
            y[k] = s.next();
        }
        CHECK(g.ad(g.bracket(x, y)) == g.ad(x) * g.ad(y) - g.ad(y) * g.ad(x));
    }
}

TEST_CASE("JSON round trip preserves the algebra") {
    GradedLieAlgebra g = heisenberg_prolonged();
    GradedLieAlgebra h = graded_algebra_from_json(to_json(g));
    CHECK(h.base().names() == g.base().names());
    CHECK(h.degrees() == g.degrees());
    CHECK(h.base().table() == g.base().table());
    REQUIRE(h.complex_structure().has_value());
    CHECK(h.complex_structure()->J == g.complex_structure()->J);
    CHECK(to_json(h) == to_json(g));
}

TEST_CASE("malformed algebra JSON is rejected") {
    nlohmann::json j = to_json(heisenberg_negative_part());
    j["grading"] = {-2, -1};
    CHECK_THROWS(graded_algebra_from_json(j));
}

}
