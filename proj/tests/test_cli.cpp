#include "cartanforge/cli.hpp"

#include <doctest.h>

#include <functional>

using namespace cartanforge;

namespace {

PhiExpression random_expression(RationalSampler& s, int depth) {
    long pick = Rational(s.small(6, 1)).get_num().get_si() + 6;
    if (depth == 0 || pick < 3) {
        if (pick % 2 == 0) return PhiExpression::variable(static_cast<int>(pick % 3));
        return PhiExpression::number(s.small(7, 3));
    }
    switch (pick % 5) {
        case 0: return PhiExpression::binary(PhiExpression::Kind::add, random_expression(s, depth - 1), random_expression(s, depth - 1));
        case 1: return PhiExpression::binary(PhiExpression::Kind::sub, random_expression(s, depth - 1), random_expression(s, depth - 1));
        case 2: return PhiExpression::binary(PhiExpression::Kind::mul, random_expression(s, depth - 1), random_expression(s, depth - 1));
        case 3: return PhiExpression::negate(random_expression(s, depth - 1));
        default: return PhiExpression::power(random_expression(s, depth - 1), static_cast<unsigned>(pick % 3));
    }
}

std::size_t error_position(const std::string& text) {
    try {
        parse_phi(text);
    } catch (const ParseError& e) {
        return e.position;
    }
    return std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parser round trip on random expressions") {
    RationalSampler s(default_seed());
    std::array<Rational, 3> pt{Rational(2, 3), -1, Rational(5, 2)};
    for (int trial = 0; trial < 200; ++trial) {
        PhiExpression e = random_expression(s, 4);
        std::string text = e.to_string();
        CAPTURE(text);
        PhiExpression back = parse_phi(text);
        CHECK(back.to_string() == text);
        CHECK(back.to_poly() == e.to_poly());
        CHECK(back.evaluate(pt) == e.evaluate(pt));
    }
}

TEST_CASE("precedence and associativity") {
    std::array<Rational, 3> pt{2, 3, 5};
    CHECK(parse_phi("x + y*u").evaluate(pt) == 17);
    CHECK(parse_phi("x - y - u").evaluate(pt) == -6);
    CHECK(parse_phi("-x^2").evaluate(pt) == -4);
    CHECK(parse_phi("(2^3)^2").evaluate(pt) == 64);
    CHECK(parse_phi("(x+y)^2").evaluate(pt) == 25);
    CHECK(parse_phi("1/2*x").evaluate(pt) == 1);
    CHECK(parse_phi("x^(3)").evaluate(pt) == 8);
}

TEST_CASE("evaluation agrees with the polynomial") {
    PhiExpression e = parse_phi("x^2 + y^2 + x^3*u - 3/4*(y - u)^3");
    std::array<Rational, 3> pt{Rational(1, 2), -2, 7};
    Rational direct = e.evaluate(pt);
    Poly3 p = e.to_poly();
    CHECK(p.derivative_at(0, 0, 0, pt) == direct);
    CHECK(p.degree() == 4);
}

TEST_CASE("parse errors report a position") {
    CHECK(error_position("x^(-1)") == 3);
    CHECK(error_position("x + ") == 4);
    CHECK(error_position("2*z") == 2);
    CHECK(error_position("(x+y") == 4);
    CHECK(error_position("x y") == 2);
    CHECK(error_position("") == 0);
    CHECK(error_position("x^1001") == 2);
    CHECK(error_position("2^3^2") == 3);
    try {
        parse_phi("x^(-1)");
    } catch (const ParseError& e) {
        CHECK(e.expected == std::vector<std::string>{"non-negative integer exponent"});
    }
}

TEST_CASE("rational lists") {
    auto v = parse_rational_list("1, -2/3,0", 3);
    CHECK(v == std::vector<Rational>{1, Rational(-2, 3), 0});
    CHECK_THROWS_AS(parse_rational_list("1,2", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational_list("1,a,2", 3), std::invalid_argument);
}

TEST_CASE("curvature command") {
    auto r = run_curvature("x^2 + y^2", {0, 0, 0}, {0, 0, 1, 0, 0});
    CHECK(r.exit_code == 0);
    CHECK(r.report["verdict"] == "spherical at point");
    CHECK(r.report["Upsilon"] == "-4");
    CHECK(r.report["Delta1"] == "0");
    auto w = run_curvature("x^2 + y^2 + x^3*u", {1, 0, 0}, {0, 0, 1, 0, 0});
    CHECK(w.report["verdict"] == "not spherical at point");
    CHECK(w.report["Delta1"] == "-27489/128");
    auto d = run_curvature("x", {0, 0, 0}, {0, 0, 1, 0, 0});
    CHECK(d.exit_code == 2);
    CHECK(d.report["error"]["kind"] == "DegeneratePoint");
    auto f = run_curvature("x^2 + y^2", {0, 0, 0}, {1, 1, 0, 0, 1});
    CHECK(f.exit_code == 2);
}

TEST_CASE("structural commands succeed") {
    CHECK(run_free_lie(6).exit_code == 0);
    CHECK(run_hol_heisenberg().exit_code == 0);
    auto t = run_tanaka(heisenberg_negative_part(), 10);
    CHECK(t.exit_code == 0);
    CHECK(t.report["isomorphism_to_heisenberg_prolonged"]["status"] == "found");
    auto c = run_cohomology(heisenberg_prolonged(), 2, std::nullopt);
    CHECK(c.exit_code == 0);
    auto bad = run_tanaka(heisenberg_prolonged(), 3);
    CHECK(bad.exit_code == 2);
}

TEST_CASE("pretty printer is line oriented") {
    nlohmann::json j = {{"b", 1}, {"a", {{"c", "x"}}}};
    std::string p = pretty(j);
    CHECK(p.find("a:") != std::string::npos);
    CHECK(p.find("c: x") != std::string::npos);
    CHECK(p.back() == '\n');
}

}
