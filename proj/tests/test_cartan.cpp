#include "cartanforge/cartan.hpp"
#include "cartanforge/cli.hpp"

#include <doctest.h>

#include <fstream>

using namespace cartanforge;

namespace {

nlohmann::json witness_fixture() {
    std::ifstream in(std::string(CARTANFORGE_TEST_FIXTURES) + "/witness.json");
    return nlohmann::json::parse(in);
}

std::array<Rational, 3> point3(const nlohmann::json& j) {
    return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()),
            parse_rational(j[2].get<std::string>())};
}

CartanConnection& connection() {
    static CartanConnection C(build_alpha());
    return C;
}

}  // namespace

TEST_SUITE("cartan") {

TEST_CASE("basis names and degrees") {
    CHECK(basis_name(kI2) == "i2");
    CHECK(basis_index("j") == kJ);
    CHECK(basis_degree(kT) == -2);
    CHECK(curvature_homogeneity(kH1, kT, kI1) == 4);
    CHECK(curvature_homogeneity(kH1, kH2, kT) == 0);
}

TEST_CASE("fiber rationals cancel powers of rho") {
    FiberRational f(FiberRational::rho() * fiber_var(Fiber::a), 2);
    FiberRational n = f.normalized();
    CHECK(n.rho_power() == 1);
    CHECK(n.numerator() == fiber_var(Fiber::a));
    CHECK_FALSE(n.is_polynomial());
    CHECK(FiberRational(FiberRational::rho(), 1).is_polynomial());
}

TEST_CASE("vertical fields close under brackets") {
    const std::array<Vertical, 5> v{Vertical::D, Vertical::R, Vertical::I1, Vertical::I2, Vertical::J};
    auto table = vertical_bracket_table();
    PhiPoly f = fiber_var(Fiber::a) * fiber_var(Fiber::c) * fiber_var(Fiber::e) + fiber_var(Fiber::b).pow(3);
    for (int k = 0; k < 5; ++k)
        for (int l = 0; l < 5; ++l) {
            PhiPoly lhs = vertical_apply(v[k], vertical_apply(v[l], f)) - vertical_apply(v[l], vertical_apply(v[k], f));
            PhiPoly rhs;
            for (int m = 0; m < 5; ++m) rhs = rhs + vertical_apply(v[m], f) * table[k][l][m];
            CHECK(lhs == rhs);
        }
}

TEST_CASE("equivariance system holds for the closed-form coefficients") {
    C1Report rep = check_c1_system(build_alpha(), 3, default_seed());
    CHECK(rep.equations.size() == 110);
    CHECK(rep.all_hold());
}

TEST_CASE("determinant of the connection matrix is rho squared") {
    CHECK(connection_matrix_det(build_alpha()) == FiberRational::rho() * FiberRational::rho());
}

TEST_CASE("closed forms agree with the general solution at the determined deltas") {
    ConnectionCoefficients general = alpha_from_deltas(determined_deltas());
    for (auto [row, col] : ConnectionCoefficients::entries()) {
        CAPTURE(ConnectionCoefficients::entry_name(row, col));
        CHECK(general(row, col) == build_alpha()(row, col));
    }
}

TEST_CASE("curvature vanishes below homogeneity 4 and matches the closed forms at 4") {
    RationalSampler s(default_seed() + 1);
    auto h4 = homogeneity4_closed_forms();
    for (int trial = 0; trial < 3; ++trial) {
        SamplePoint p(s, 7);
        for (const auto& k : connection().all_curvatures()) {
            CAPTURE(k.name());
            if (k.homogeneity <= 3 || (k.p1 == kH1 && k.p2 == kH2 && k.target == kJ)) CHECK(p(k.value) == 0);
        }
        CHECK(p(connection().curvature(kH1, kT, kI1).value) == p(FiberRational(h4[0])));
        CHECK(p(connection().curvature(kH1, kT, kI2).value) == p(FiberRational(h4[1])));
        CHECK(p(connection().curvature(kH2, kT, kI1).value) == p(connection().curvature(kH1, kT, kI2).value));
        CHECK(p(connection().curvature(kH2, kT, kI2).value) == -p(connection().curvature(kH1, kT, kI1).value));
    }
}

TEST_CASE("Heisenberg sphere has zero curvature") {
    SamplePoint p(std::make_unique<SeriesFrame>(parse_phi("x^2 + y^2").to_poly(), std::array<Rational, 3>{0, 0, 0}, 7),
                  {Rational(1, 3), -2, 1, 2, 5});
    for (const auto& k : connection().all_curvatures()) {
        CAPTURE(k.name());
        CHECK(p(k.value) == 0);
    }
    EssentialCurvatures E = essential_curvatures();
    CHECK(evaluate(E.delta1, p.atoms()) == 0);
    CHECK(evaluate(E.delta4, p.atoms()) == 0);
}

TEST_CASE("non-spherical witness through the curvature of the connection") {
    nlohmann::json fx = witness_fixture();
    Poly3 phi = parse_phi(fx["phi"].get<std::string>()).to_poly();
    for (const auto& rec : fx["points"]) {
        auto at = point3(rec["at"]);
        SamplePoint p(std::make_unique<SeriesFrame>(phi, at, 7), {0, 0, 1, 0, 0});
        Rational d1 = parse_rational(rec["Delta1"].get<std::string>());
        Rational d4 = parse_rational(rec["Delta4"].get<std::string>());
        CHECK(p(connection().curvature(kH1, kT, kI1).value) == d1);
        CHECK(p(connection().curvature(kH1, kT, kI2).value) == d4);
        EssentialCurvatures E = essential_curvatures();
        CHECK(evaluate(E.delta1, p.atoms()) == d1);
        CHECK(evaluate(E.delta4, p.atoms()) == d4);
    }
}

TEST_CASE("witness values are invariant under translating the point to the origin") {
    nlohmann::json fx = witness_fixture();
    PhiExpression e = parse_phi(fx["phi"].get<std::string>());
    Poly3 shifted = parse_phi("(x+1)^2 + (y+2)^2 + (x+1)^3*(u+3)").to_poly();
    SamplePoint p(std::make_unique<SeriesFrame>(shifted, std::array<Rational, 3>{0, 0, 0}, 7), {0, 0, 1, 0, 0});
    EssentialCurvatures E = essential_curvatures();
    CHECK(to_string(evaluate(E.delta1, p.atoms())) == fx["points"][2]["Delta1"].get<std::string>());
    CHECK(to_string(evaluate(E.delta4, p.atoms())) == fx["points"][2]["Delta4"].get<std::string>());
    CHECK(e.to_poly() == parse_phi("x^2 + y^2 + x^3*u").to_poly());
}

}
