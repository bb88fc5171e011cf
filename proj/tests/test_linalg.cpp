#include "cartanforge/linalg.hpp"
#include "cartanforge/sparse_poly.hpp"
#include "cartanforge/jetcalc.hpp"

#include <doctest.h>

using namespace cartanforge;

TEST_SUITE("linalg") {

TEST_CASE("rational parsing and printing are canonical") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(Rational(8) / 4) == "2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("seeded sampler is deterministic") {
    RationalSampler a(7), b(7);
    for (int k = 0; k < 50; ++k) CHECK(a.next() == b.next());
}

TEST_CASE("rank, determinant and rref agree on a singular matrix") {
    Matrix m = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 3);
    CHECK(rank(m) == 2);
    CHECK(determinant(m) == 0);
    CHECK(rref(m).pivots == std::vector<std::size_t>{0, 1});
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(is_zero(m * ns[0]));
    CHECK_FALSE(inverse(m).has_value());
}

TEST_CASE("inverse and solve on random invertible matrices") {
    RationalSampler s(11, 20);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = s.next();
        if (determinant(m) == 0) continue;
        auto inv = inverse(m);
        REQUIRE(inv.has_value());
        CHECK(m * *inv == Matrix::identity(5));
        Vec b{s.next(), s.next(), s.next(), s.next(), s.next()};
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m * *x == b);
        CHECK(rank(m) == 5);
        CHECK(determinant(m) * determinant(*inv) == 1);
    }
}

TEST_CASE("determinant is multiplicative") {
    RationalSampler s(3, 9);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a(4, 4), b(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                a(i, j) = s.next();
                b(i, j) = s.next();
            }
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("inconsistent system has no solution") {
    Matrix m = Matrix::from_rows({{1, 1}, {2, 2}}, 2);
    CHECK_FALSE(solve(m, Vec{1, 3}).has_value());
}

TEST_CASE("polynomial ring axioms on random sparse polynomials") {
    RationalSampler s(5, 12);
    auto random_poly = [&]() {
        DiffPoly p;
        for (int t = 0; t < 4; ++t) {
            DiffPoly m(s.next());
            for (int f = 0; f < 2; ++f) m = m * jet_var(jet_variable(static_cast<int>(Rational(s.small(4, 1) + 4).get_num().get_si())));
            p = p + m;
        }
        return p;
    };
    for (int trial = 0; trial < 30; ++trial) {
        DiffPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * DiffPoly(Rational(1)) == a);
        CHECK((a * DiffPoly()).is_zero());
        if (!b.is_zero()) {
            auto q = (a * b).exact_divide(b);
            REQUIRE(q.has_value());
            CHECK(*q == a);
        }
    }
}

}
