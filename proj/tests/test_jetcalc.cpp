#include "cartanforge/cli.hpp"
#include "cartanforge/identities.hpp"
#include "cartanforge/jetcalc.hpp"
#include "cartanforge/jetseries.hpp"
#include "cartanforge/phiword.hpp"

#include <doctest.h>

using namespace cartanforge;

namespace {

Poly3 random_poly3(RationalSampler& s, int degree) {
    Poly3 p;
    for (int a = 0; a <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b)
            for (int c = 0; a + b + c <= degree; ++c) p.terms[{a, b, c}] = s.small(9, 5);
    p.terms[{2, 0, 0}] = 1;
    p.terms[{0, 2, 0}] = 1;
    p.prune();
    return p;
}

}  // namespace

TEST_SUITE("jetcalc") {

TEST_CASE("jet variable indexing is a bijection") {
    for (int k = 0; k < kJetVariableCount; ++k) CHECK(jet_index(jet_variable(k)) == k);
    CHECK(jet_name(jet_index({2, 0, 1})) == "phi_xxu");
    CHECK(jet_variable(0).order() == 1);
    CHECK(jet_variable(kJetVariableCount - 1).order() == kMaxJetOrder);
}

TEST_CASE("total derivatives raise jet order and overflow past six") {
    DiffPoly f = jet_var({1, 0, 0}) * jet_var({0, 0, 1});
    DiffPoly fx = total_derivative(f, Direction::x);
    CHECK(fx == jet_var({2, 0, 0}) * jet_var({0, 0, 1}) + jet_var({1, 0, 0}) * jet_var({1, 0, 1}));
    CHECK(max_jet_order(fx) == 2);
    CHECK_THROWS_AS(total_derivative(jet_var({0, 0, 6}), Direction::u), JetOrderOverflow);
    CHECK(total_derivative(DiffPoly(Rational(5)), Direction::y).is_zero());
}

TEST_CASE("total derivatives commute") {
    DiffPoly f = build_basics().Upsilon;
    CHECK(total_derivative(total_derivative(f, Direction::x), Direction::u) ==
          total_derivative(total_derivative(f, Direction::u), Direction::x));
}

TEST_CASE("jets of a polynomial") {
    Poly3 phi = parse_phi("x^2 + y^2 + 3*x*y*u").to_poly();
    JetPoint jp = jets_of_polynomial(phi, {1, 2, 0});
    CHECK(jp.at({1, 0, 0}) == 2);
    CHECK(jp.at({0, 1, 0}) == 4);
    CHECK(jp.at({0, 0, 1}) == 6);
    CHECK(jp.at({1, 1, 1}) == 3);
    CHECK(jp.at({0, 0, 2}) == 0);
}

TEST_CASE("Heisenberg sphere: Upsilon(0) = -4 and Phi_1 = Phi_2 = 0") {
    SeriesFrame F(parse_phi("x^2 + y^2").to_poly(), {0, 0, 0}, 6);
    CHECK(F.Upsilon().constant_term() == -4);
    CHECK(F.phi_value({}, 1) == 0);
    CHECK(F.phi_value({}, 2) == 0);
    CHECK(F.phi_value({1, 2}, 1) == 0);
    CHECK(F.nondegenerate());
    JetPoint jp = jets_of_polynomial(parse_phi("x^2 + y^2").to_poly(), {0, 0, 0});
    CHECK(RationalJetExpr(build_basics().Upsilon, 0, 0).evaluate(jp) == -4);
}

TEST_CASE("flat graph is Levi degenerate") {
    SeriesFrame F(parse_phi("x + 2*y").to_poly(), {0, 0, 0}, 6);
    CHECK_FALSE(F.nondegenerate());
    JetPoint jp = jets_of_polynomial(parse_phi("x + 2*y").to_poly(), {0, 0, 0});
    CHECK_THROWS_AS(build_phi({}, 1).evaluate(jp), DegeneratePoint);
}

TEST_CASE("jet route and series route agree on Phi-words of depth <= 1") {
    RationalSampler s(41);
    for (int trial = 0; trial < 5; ++trial) {
        Poly3 phi = random_poly3(s, 5);
        std::array<Rational, 3> pt{s.small(3, 2), s.small(3, 2), s.small(3, 2)};
        SeriesFrame F(phi, pt, 6);
        if (!F.nondegenerate()) continue;
        JetPoint jp = jets_of_polynomial(phi, pt);
        CHECK(F.jet_point() == jp);
        for (int i = 1; i <= 2; ++i) {
            CHECK(build_phi({}, i).evaluate(jp) == F.phi_value({}, i));
            for (int k = 1; k <= 2; ++k) CHECK(build_phi({k}, i).evaluate(jp) == F.phi_value({k}, i));
        }
    }
}

TEST_CASE("series inverse") {
    RationalSampler s(43);
    Series3 f(5);
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b)
            for (int c = 0; a + b + c <= 5; ++c) f.set_coeff(a, b, c, s.next());
    f.set_coeff(0, 0, 0, 3);
    Series3 one = f * f.inverse();
    CHECK(one.constant_term() == 1);
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b)
            for (int c = 0; a + b + c <= 5; ++c)
                if (a + b + c > 0) CHECK(one.coeff(a, b, c) == 0);
}

TEST_CASE("commutation identity vanishes under full expansion") {
    auto rep = verify_identity(to_rational_jet_expr(commutation_identity().expr), VerificationMode::full_expansion());
    CHECK(rep.all_zero);
}

TEST_CASE("T acts as a quarter of the commutator of H_1 and H_2") {
    RationalSampler s(47);
    SeriesFrame F = SeriesFrame::random(s, 6);
    REQUIRE(F.nondegenerate());
    const Series3& f = F.phi();
    Series3 lhs = F.H(1, F.H(2, f)) - F.H(2, F.H(1, f));
    Series3 rhs = F.T(f) * Rational(4);
    CHECK(lhs.constant_term() == rhs.constant_term());
}

TEST_CASE("third-order relations, corollaries and Delta_2 vanish at random points") {
    RationalSampler s(default_seed());
    for (int k = 0; k < 5; ++k) {
        SeriesFrame F = SeriesFrame::random(s, 6);
        AtomValues a(F);
        for (const auto& id : third_order_relations()) CHECK(evaluate(id.expr, a) == 0);
        for (const auto& id : corollary_identities()) CHECK(evaluate(id.expr, a) == 0);
        CHECK(evaluate(delta2().expr, a) == 0);
        CHECK(evaluate(delta3().expr + delta4_raw().expr * Rational(2), a) == 0);
        CHECK(evaluate(delta1_symmetric().expr - delta1_raw().expr, a) == 0);
        CHECK(evaluate(delta4_symmetric().expr - delta4_raw().expr, a) == 0);
    }
}

TEST_CASE("uncorrected forms are not identities") {
    RationalSampler s(53);
    SeriesFrame F = SeriesFrame::random(s, 6);
    AtomValues a(F);
    CHECK(evaluate(delta3_uncorrected().expr + delta4_raw().expr * Rational(2), a) != 0);
    CHECK(evaluate(delta1_symmetric_uncorrected().expr - delta1_symmetric().expr, a) != 0);
}

TEST_CASE("Phi-word parser") {
    PhiPoly p = parse_phipoly("2*H1(Phi2) - T(Phi1) + a^2*c");
    CHECK(has_fiber_variables(p));
    CHECK(max_word_length(p) == 2);
    CHECK_THROWS_AS(parse_phipoly("H3(Phi1)"), PhiParseError);
    CHECK(h_derivative(1, phi_atom({}, 2)) == phi_atom({1}, 2));
    CHECK_THROWS_AS(h_derivative(1, phi_atom({1, 1, 1, 1}, 2)), JetOrderOverflow);
}

}
