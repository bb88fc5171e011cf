#include "cartanforge/freelie.hpp"

#include <cctype>

namespace cartanforge {

// ---------------------------------------------------------------------------
// BracketWord

BracketWord BracketWord::leaf(int generator) {
    if (generator != 1 && generator != 2) throw std::invalid_argument("generator must be 1 or 2");
    BracketWord w;
    w.generator_ = generator;
    w.length_ = 1;
    return w;
}

BracketWord BracketWord::bracket(const BracketWord& a, const BracketWord& b) {
    BracketWord w;
    w.left_ = std::make_shared<const BracketWord>(a);
    w.right_ = std::make_shared<const BracketWord>(b);
    w.length_ = a.length_ + b.length_;
    return w;
}

BracketWord BracketWord::right_normed(const std::vector<int>& prefix) {
    BracketWord w = bracket(leaf(1), leaf(2));
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) w = bracket(leaf(*it), w);
    return w;
}

namespace {

struct WordParser {
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    void expect(char c) {
        skip();
        if (pos >= s.size() || s[pos] != c)
            throw WordParseError("expected '" + std::string(1, c) + "' at position " + std::to_string(pos));
        ++pos;
    }
    BracketWord word() {
        skip();
        if (pos < s.size() && s[pos] == '[') {
            ++pos;
            BracketWord a = word();
            expect(',');
            BracketWord b = word();
            expect(']');
            return BracketWord::bracket(a, b);
        }
        if (pos + 1 < s.size() && s[pos] == 'h' && (s[pos + 1] == '1' || s[pos + 1] == '2')) {
            int g = s[pos + 1] - '0';
            pos += 2;
            return BracketWord::leaf(g);
        }
        throw WordParseError("expected 'h1', 'h2' or '[' at position " + std::to_string(pos));
    }
};

}  // namespace

BracketWord BracketWord::parse(std::string_view text) {
    WordParser p{text};
    BracketWord w = p.word();
    p.skip();
    if (p.pos != text.size()) throw WordParseError("trailing input at position " + std::to_string(p.pos));
    return w;
}

std::string BracketWord::to_string() const {
    if (is_leaf()) return "h" + std::to_string(generator_);
    return "[" + left_->to_string() + "," + right_->to_string() + "]";
}

// ---------------------------------------------------------------------------
// TensorElement

TensorElement TensorElement::generator(int g) {
    TensorElement t;
    t.add(std::string(1, static_cast<char>('0' + g)), Rational(1));
    return t;
}

void TensorElement::add(const std::string& w, const Rational& c) {
    if (c == 0) return;
    Rational& slot = terms_[w];
    slot += c;
    if (slot == 0) terms_.erase(w);
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const { return *this + o * Rational(-1); }

TensorElement TensorElement::operator*(const TensorElement& o) const {
    TensorElement r;
    for (const auto& [u, a] : terms_)
        for (const auto& [v, b] : o.terms_) r.add(u + v, a * b);
    return r;
}

TensorElement TensorElement::operator*(const Rational& s) const {
    TensorElement r;
    for (const auto& [w, c] : terms_) r.add(w, c * s);
    return r;
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational a = abs(c);
        if (c < 0) s += first ? "-" : " - ";
        else if (!first) s += " + ";
        if (a != 1) s += cartanforge::to_string(a) + "*";
        for (std::size_t i = 0; i < w.size(); ++i) s += std::string("h") + w[i];
        first = false;
    }
    return s;
}

// ---------------------------------------------------------------------------

int mobius(int n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

long graded_dimension(int length) {
    if (length < 1) throw std::invalid_argument("graded_dimension: length must be at least 1");
    long sum = 0;
    for (int d = 1; d <= length; ++d)
        if (length % d == 0) sum += mobius(d) * (1L << (length / d));
    return sum / length;
}

TensorElement expand_word(const BracketWord& w) {
    if (w.is_leaf()) return TensorElement::generator(w.generator());
    TensorElement a = expand_word(w.left()), b = expand_word(w.right());
    return a * b - b * a;
}

RelationReport relation_rank(const std::vector<BracketWord>& words) {
    std::vector<TensorElement> expanded;
    std::map<std::string, std::size_t> row_of;
    for (const auto& w : words) {
        expanded.push_back(expand_word(w));
        for (const auto& [m, c] : expanded.back().terms()) row_of.try_emplace(m, row_of.size());
    }
    Matrix M(row_of.size(), words.size());
    for (std::size_t j = 0; j < words.size(); ++j)
        for (const auto& [m, c] : expanded[j].terms()) M(row_of.at(m), j) = c;
    RelationReport report;
    report.rank = rank(M);
    auto kernel = nullspace(M);
    if (!kernel.empty()) {
        RrefResult R = rref(Matrix::from_rows(kernel, words.size()));
        for (std::size_t i = 0; i < R.reduced.rows(); ++i) report.relations.push_back(R.reduced.row(i));
    }
    return report;
}

namespace {

std::vector<std::string> lyndon_words(int n) {
    // Duval's generation over the alphabet {'1','2'}.
    std::vector<std::string> out;
    std::string w = "1";
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == n) out.push_back(w);
        std::string next;
        while (static_cast<int>(next.size()) < n) next += w;
        next.resize(n);
        while (!next.empty() && next.back() == '2') next.pop_back();
        if (!next.empty()) ++next.back();
        w = next;
    }
    return out;
}

BracketWord standard_bracketing(const std::string& w) {
    if (w.size() == 1) return BracketWord::leaf(w[0] - '0');
    // Longest proper suffix that is a Lyndon word = lexicographically smallest proper suffix.
    std::size_t best = 1;
    for (std::size_t i = 2; i < w.size(); ++i)
        if (w.substr(i) < w.substr(best)) best = i;
    return BracketWord::bracket(standard_bracketing(w.substr(0, best)), standard_bracketing(w.substr(best)));
}

std::vector<std::vector<int>> all_prefixes(int k) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < k; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& p : out)
            for (int g : {1, 2}) {
                auto q = p;
                q.push_back(g);
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<std::vector<int>> listed_prefixes(int length) {
    if (length == 2) return {{}};
    if (length == 3) return {{1}, {2}};
    if (length == 4) return {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    // From length 5 on: h1 and h2 applied to the basis of the previous length,
    // where the length-4 basis drops [h2,[h1,[h1,h2]]].
    std::vector<std::vector<int>> base = {{1, 1}, {1, 2}, {2, 2}};
    for (int l = 5; l <= length; ++l) {
        std::vector<std::vector<int>> next;
        for (int g : {1, 2})
            for (const auto& p : base) {
                std::vector<int> q{g};
                q.insert(q.end(), p.begin(), p.end());
                next.push_back(std::move(q));
            }
        base = std::move(next);
    }
    return base;
}

BracketWord rn(std::vector<int> prefix) { return BracketWord::right_normed(prefix); }

}  // namespace

std::vector<BracketWord> lyndon_basis(int length) {
    std::vector<BracketWord> out;
    for (const auto& w : lyndon_words(length)) out.push_back(standard_bracketing(w));
    return out;
}

std::vector<BracketWord> simple_words(int length) {
    if (length < 2) throw std::invalid_argument("simple words have length at least 2");
    std::vector<BracketWord> out;
    for (const auto& p : all_prefixes(length - 2)) out.push_back(BracketWord::right_normed(p));
    return out;
}

std::vector<BracketWord> listed_simple_words(int length) {
    if (length < 2 || length > 6) throw std::invalid_argument("listed simple words exist for lengths 2..6");
    std::vector<BracketWord> out;
    for (const auto& p : listed_prefixes(length)) out.push_back(BracketWord::right_normed(p));
    return out;
}

TensorElement NamedRelation::expand() const {
    TensorElement t;
    for (const auto& [c, w] : terms) t = t + expand_word(w) * c;
    return t;
}

std::vector<NamedRelation> known_relations() {
    BracketWord c = BracketWord::bracket(BracketWord::leaf(1), BracketWord::leaf(2));
    auto br = [](const BracketWord& a, const BracketWord& b) { return BracketWord::bracket(a, b); };
    std::vector<NamedRelation> out;
    out.push_back({"length 4", {{Rational(1), rn({2, 1})}, {Rational(-1), rn({1, 2})}}});
    out.push_back({"length 5, first",
                   {{Rational(1), br(c, rn({1}))}, {Rational(1), rn({2, 1, 1})}, {Rational(-1), rn({1, 1, 2})}}});
    out.push_back({"length 5, second",
                   {{Rational(1), br(c, rn({2}))}, {Rational(1), rn({2, 1, 2})}, {Rational(-1), rn({1, 2, 2})}}});
    out.push_back({"length 6, first", {{Rational(1), rn({1, 1, 1, 2})}, {Rational(-2), rn({1, 2, 1, 1})}, {Rational(1), rn({2, 1, 1, 1})}}});
    out.push_back({"length 6, second", {{Rational(1), rn({2, 2, 1, 2})}, {Rational(-2), rn({2, 1, 2, 2})}, {Rational(1), rn({1, 2, 2, 2})}}});
    out.push_back({"length 6, third",
                   {{Rational(1), rn({1, 1, 2, 2})},
                    {Rational(-3), rn({1, 2, 1, 2})},
                    {Rational(3), rn({2, 1, 1, 2})},
                    {Rational(-1), rn({2, 2, 1, 1})}}});
    return out;
}

std::vector<Vec> length6_relations() {
    auto prefixes = listed_prefixes(6);
    auto index = [&](const std::vector<int>& p) {
        for (std::size_t i = 0; i < prefixes.size(); ++i)
            if (prefixes[i] == p) return i;
        throw std::logic_error("prefix not in the listed words");
    };
    std::vector<Vec> out;
    for (const auto& rel : known_relations()) {
        if (rel.name.rfind("length 6", 0) != 0) continue;
        Vec v(prefixes.size());
        for (const auto& [c, w] : rel.terms) {
            std::vector<int> p;
            const BracketWord* cur = &w;
            while (!cur->right().is_leaf()) {
                p.push_back(cur->left().generator());
                cur = &cur->right();
            }
            v[index(p)] += c;
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace cartanforge
