// The free Lie algebra on two generators h1, h2: bracket words, their
// expansion into the free associative algebra, graded dimensions and the
// linear relations between simple words.
#ifndef CARTANFORGE_FREELIE_HPP
#define CARTANFORGE_FREELIE_HPP

#include "cartanforge/linalg.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cartanforge {

struct WordParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binary bracket tree with leaves h1, h2.
class BracketWord {
public:
    static BracketWord leaf(int generator);  ///< generator 1 or 2
    static BracketWord bracket(const BracketWord& a, const BracketWord& b);
    /// [h_{p1},[h_{p2},...,[h_{pk},[h1,h2]]...]]
    static BracketWord right_normed(const std::vector<int>& prefix);
    /// Parses "h1", "[h1,[h1,h2]]", with optional spaces.
    static BracketWord parse(std::string_view text);

    bool is_leaf() const { return generator_ != 0; }
    int generator() const { return generator_; }
    const BracketWord& left() const { return *left_; }
    const BracketWord& right() const { return *right_; }
    int length() const { return length_; }
    std::string to_string() const;

private:
    int generator_ = 0;
    int length_ = 0;
    std::shared_ptr<const BracketWord> left_, right_;
};

/// Element of the free associative algebra; keys are words over '1', '2'.
class TensorElement {
public:
    TensorElement() = default;
    static TensorElement generator(int g);

    const std::map<std::string, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const;  ///< concatenation product
    TensorElement operator*(const Rational& s) const;
    bool operator==(const TensorElement& o) const = default;
    std::string to_string() const;

private:
    void add(const std::string& w, const Rational& c);
    std::map<std::string, Rational> terms_;
};

/// n_l - n_{l-1} = (1/l) sum_{d | l} mu(d) 2^{l/d}.
long graded_dimension(int length);
int mobius(int n);

TensorElement expand_word(const BracketWord& w);

struct RelationReport {
    std::size_t rank = 0;
    /// Coefficient vectors c (one per relation) with sum_i c_i w_i = 0, in reduced echelon form.
    std::vector<Vec> relations;
};
RelationReport relation_rank(const std::vector<BracketWord>& words);

/// Lyndon words over h1 < h2 with standard-factorization bracketing.
std::vector<BracketWord> lyndon_basis(int length);
/// All 2^(l-2) right-normed words [h_{p1},[...,[h1,h2]]] of length l >= 2.
std::vector<BracketWord> simple_words(int length);
/// Spanning lists of simple words: length 4 gives four words, length 5 the six words
/// built on the length-4 basis (prefixes 11, 12, 22), length 6 the twelve built on those.
std::vector<BracketWord> listed_simple_words(int length);

struct NamedRelation {
    std::string name;
    std::vector<std::pair<Rational, BracketWord>> terms;
    TensorElement expand() const;
};
/// The length-4 relation, the two length-5 identities with non-simple words and the three
/// length-6 relations between simple words.
std::vector<NamedRelation> known_relations();
/// Coefficients of the three length-6 relations on listed_simple_words(6).
std::vector<Vec> length6_relations();

}  // namespace cartanforge

#endif
