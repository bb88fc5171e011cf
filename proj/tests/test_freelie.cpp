#include "cartanforge/freelie.hpp"

#include <doctest.h>

using namespace cartanforge;

TEST_SUITE("freelie") {

TEST_CASE("Mobius function") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
}

TEST_CASE("graded dimensions from the necklace formula") {
    const std::vector<long> expected{2, 1, 2, 3, 6, 9, 18, 30};
    for (int l = 1; l <= 8; ++l) CHECK(graded_dimension(l) == expected[l - 1]);
}

TEST_CASE("graded dimensions equal tensor-expansion ranks") {
    for (int l = 2; l <= 8; ++l) {
        CAPTURE(l);
        CHECK(relation_rank(simple_words(l)).rank == static_cast<std::size_t>(graded_dimension(l)));
        CHECK(relation_rank(lyndon_basis(l)).rank == static_cast<std::size_t>(graded_dimension(l)));
        CHECK(lyndon_basis(l).size() == static_cast<std::size_t>(graded_dimension(l)));
    }
}

TEST_CASE("listed simple words span each graded piece") {
    for (int l = 2; l <= 6; ++l)
        CHECK(relation_rank(listed_simple_words(l)).rank == static_cast<std::size_t>(graded_dimension(l)));
    CHECK(listed_simple_words(4).size() == 4);
    CHECK(listed_simple_words(5).size() == 6);
    CHECK(listed_simple_words(6).size() == 12);
}

TEST_CASE("expansion of short brackets") {
    auto e = expand_word(BracketWord::parse("[h1,h2]"));
    CHECK(e == TensorElement::generator(1) * TensorElement::generator(2) -
                   TensorElement::generator(2) * TensorElement::generator(1));
    CHECK(expand_word(BracketWord::parse("[h1,h1]")).is_zero());
    CHECK(expand_word(BracketWord::parse("[h1,[h1,h2]]")).terms().size() == 3);
}

TEST_CASE("Jacobi identity holds in the free associative algebra") {
    auto a = BracketWord::parse("h1"), b = BracketWord::parse("h2"), c = BracketWord::parse("[h1,h2]");
    auto br = [](const BracketWord& x, const BracketWord& y) { return BracketWord::bracket(x, y); };
    TensorElement j = expand_word(br(a, br(b, c))) + expand_word(br(b, br(c, a))) + expand_word(br(c, br(a, b)));
    CHECK(j.is_zero());
}

TEST_CASE("word parser and printer") {
    auto w = BracketWord::parse(" [h2, [h1 ,[h1,h2]]] ");
    CHECK(w.to_string() == "[h2,[h1,[h1,h2]]]");
    CHECK(w.length() == 4);
    CHECK(BracketWord::right_normed({2, 1}).to_string() == "[h2,[h1,[h1,h2]]]");
    CHECK_THROWS_AS(BracketWord::parse("[h1,h3]"), WordParseError);
    CHECK_THROWS_AS(BracketWord::parse("[h1,h2"), WordParseError);
    CHECK_THROWS_AS(BracketWord::parse(""), WordParseError);
}

TEST_CASE("named relations vanish") {
    for (const auto& r : known_relations()) {
        CAPTURE(r.name);
        CHECK(r.expand().is_zero());
    }
}

TEST_CASE("length-6 kernel equals the named relations up to scaling") {
    auto words = listed_simple_words(6);
    RelationReport rep = relation_rank(words);
    CHECK(rep.relations.size() == 3);
    auto named = length6_relations();
    REQUIRE(named.size() == 3);
    Matrix kernel = Matrix::from_rows(rep.relations, words.size());
    Matrix both = kernel;
    for (const auto& v : named) {
        TensorElement sum;
        for (std::size_t i = 0; i < words.size(); ++i) sum = sum + expand_word(words[i]) * v[i];
        CHECK(sum.is_zero());
        both.append_row(v);
    }
    CHECK(rank(Matrix::from_rows(named, words.size())) == 3);
    CHECK(rank(both) == 3);
}

}
