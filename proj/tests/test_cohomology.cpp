#include "cartanforge/cohomology.hpp"

#include <doctest.h>

using namespace cartanforge;

namespace {

Cochain random_cochain(const GradedLieAlgebra& g, int level, RationalSampler& s) {
    Cochain phi(level);
    auto [lo, hi] = homogeneity_range(g, level);
    for (int h = lo; h <= hi; ++h)
        for (const auto& key : cochain_basis(g, level, h))
            if (s.small(2, 1) != 0) phi.add(key.args, key.value, s.next());
    return phi;
}

Cochain parse_terms(const GradedLieAlgebra& g, std::vector<std::tuple<Rational, std::vector<const char*>, const char*>> terms) {
    Cochain phi(2);
    for (auto& [c, args, value] : terms) {
        std::vector<int> idx;
        for (auto a : args) idx.push_back(g.base().index(a));
        phi.add(idx, g.base().index(value), c);
    }
    return phi;
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("dimension table of C2, Z2, B2, H2 on g") {
    GradedLieAlgebra g = heisenberg_prolonged();
    const std::vector<SpaceDims> expected{{1, 1, 1, 0}, {4, 4, 4, 0}, {6, 5, 5, 0},
                                          {6, 4, 4, 0}, {5, 3, 1, 2}, {2, 0, 0, 0}};
    CHECK(homogeneity_range(g, 2) == std::pair<int, int>{0, 5});
    for (int h = 0; h <= 5; ++h) {
        CAPTURE(h);
        CHECK(space_dims(g, 2, h) == expected[h]);
    }
}

TEST_CASE("cocycle system through structure constants matches the differential") {
    GradedLieAlgebra g = heisenberg_prolonged();
    for (int h = 0; h <= 5; ++h) {
        CHECK(rank(cocycle_system(g, h)) == rank(differential_matrix(g, 2, h)));
        CHECK(rank(coboundary_system(g, h)) == static_cast<std::size_t>(space_dims(g, 2, h).B));
    }
}

TEST_CASE("d o d = 0 and d* o d* = 0 on 100 random cochains") {
    GradedLieAlgebra g = heisenberg_prolonged();
    RationalSampler s(default_seed());
    for (int trial = 0; trial < 100; ++trial) {
        Cochain a = random_cochain(g, 1 + trial % 2, s);
        CHECK(differential(g, differential(g, a)).is_zero());
        Cochain b = random_cochain(g, 3, s);
        CHECK(codifferential(g, codifferential(g, b)).is_zero());
    }
}

TEST_CASE("differential and codifferential are linear") {
    GradedLieAlgebra g = heisenberg_prolonged();
    RationalSampler s(29);
    Cochain a = random_cochain(g, 2, s), b = random_cochain(g, 2, s);
    Rational k = s.next();
    CHECK(differential(g, a + b * k) == differential(g, a) + differential(g, b) * k);
    CHECK(codifferential(g, a + b * k) == codifferential(g, a) + codifferential(g, b) * k);
}

TEST_CASE("splitting C2 = B2 + ker d* for every homogeneity") {
    GradedLieAlgebra g = heisenberg_prolonged();
    for (int h = 0; h <= 5; ++h) {
        Matrix cod = codifferential_matrix(g, 2, h);
        int C = space_dims(g, 2, h).C;
        int ker = C - static_cast<int>(rank(cod));
        CAPTURE(h);
        CHECK(C == space_dims(g, 2, h).B + ker);
    }
}

TEST_CASE("homogeneous components reassemble the cochain") {
    GradedLieAlgebra g = heisenberg_prolonged();
    RationalSampler s(31);
    Cochain a = random_cochain(g, 2, s);
    Cochain sum(2);
    for (int h = 0; h <= 5; ++h) {
        Cochain part = homogeneous_component(g, a, h);
        CHECK(from_coordinates(g, 2, h, coordinates(g, part, h)) == part);
        sum = sum + part;
    }
    CHECK(sum == a);
}

TEST_CASE("H2 representatives at homogeneity 4") {
    GradedLieAlgebra g = heisenberg_prolonged();
    auto basis = h2_basis(g, 4);
    REQUIRE(basis.size() == 2);
    for (const auto& c : basis) CHECK(differential(g, c).is_zero());
    auto r1 = parse_terms(g, {{1, {"t", "h1"}, "i2"}, {1, {"t", "h2"}, "i1"}});
    auto r2 = parse_terms(g, {{1, {"t", "h2"}, "i2"}, {2, {"h1", "h2"}, "j"}});
    CHECK(differential(g, r1).is_zero());
    CHECK(differential(g, r2).is_zero());
    CHECK(same_span_modulo_coboundaries(g, 4, basis, {r1, r2}));
    CHECK(h2_basis(g, 1).empty());
}

TEST_CASE("generators with the opposite relative signs are not cocycles") {
    GradedLieAlgebra g = heisenberg_prolonged();
    auto p1 = parse_terms(g, {{1, {"t", "h2"}, "i2"}, {-2, {"h1", "h2"}, "j"}});
    auto p2 = parse_terms(g, {{1, {"t", "h2"}, "i1"}, {-1, {"t", "h1"}, "i2"}});
    CHECK_FALSE(differential(g, p1).is_zero());
    CHECK_FALSE(differential(g, p2).is_zero());
}

TEST_CASE("cochain printing and JSON round trip") {
    GradedLieAlgebra g = heisenberg_prolonged();
    auto r2 = parse_terms(g, {{1, {"t", "h2"}, "i2"}, {2, {"h1", "h2"}, "j"}});
    CHECK(cochain_from_json(cochain_to_json(r2)) == r2);
    Cochain swapped(2);
    swapped.add({g.base().index("h2"), g.base().index("t")}, g.base().index("i2"), 1);
    CHECK(swapped == r2 * 0 - parse_terms(g, {{1, {"t", "h2"}, "i2"}}));
    Cochain repeated(2);
    repeated.add({1, 1}, 0, 5);
    CHECK(repeated.is_zero());
}

TEST_CASE("codifferential needs a nondegenerate Killing form") {
    GradedLieAlgebra m = heisenberg_negative_part();
    Cochain c(2);
    c.add({1, 2}, 0, 1);
    CHECK_THROWS_AS(codifferential(m, c), SingularKillingForm);
}

}
