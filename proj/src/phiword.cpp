#include "cartanforge/phiword.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cartanforge {

int atom_index(const PhiAtom& atom) {
    if (atom.base != 1 && atom.base != 2) throw std::invalid_argument("Phi base must be 1 or 2");
    const int len = static_cast<int>(atom.word.size());
    if (len > kMaxWordLength) throw JetOrderOverflow("Phi-word longer than the supported maximum");
    int bits = 0;
    for (int k = 0; k < len; ++k) {
        if (atom.word[k] != 1 && atom.word[k] != 2) throw std::invalid_argument("word letters must be 1 or 2");
        bits |= (atom.word[k] - 1) << k;
    }
    return (atom.base - 1) + 2 * (((1 << len) - 1) + bits);
}

PhiAtom atom_of(int index) {
    if (!is_atom_index(index)) throw std::out_of_range("not an atom index");
    PhiAtom a;
    a.base = index % 2 + 1;
    int code = index / 2;
    int len = 0;
    while (code >= (1 << (len + 1)) - 1) ++len;
    int bits = code - ((1 << len) - 1);
    for (int k = 0; k < len; ++k) a.word.push_back(((bits >> k) & 1) + 1);
    return a;
}

bool is_atom_index(int index) { return index >= 0 && index < kAtomCount; }
bool is_fiber_index(int index) { return index >= kFiberBase && index < kFiberBase + 5; }

int atom_weight(int index) { return 1 + static_cast<int>(atom_of(index).word.size()); }

std::string PhiNames::name(int index) {
    if (is_fiber_index(index)) return std::string(1, static_cast<char>('a' + (index - kFiberBase)));
    PhiAtom a = atom_of(index);
    std::string s = "Phi" + std::to_string(a.base);
    for (int k : a.word) s = "H" + std::to_string(k) + "(" + s + ")";
    return s;
}

PhiPoly phi_atom(const std::vector<int>& word, int base) { return PhiPoly::variable(atom_index({base, word})); }

PhiPoly fiber_var(Fiber v) { return PhiPoly::variable(kFiberBase + static_cast<int>(v)); }

PhiPoly h_derivative(int k, const PhiPoly& f, int max_word) {
    if (k != 1 && k != 2) throw std::invalid_argument("horizontal index must be 1 or 2");
    std::vector<PhiPoly> images(kFiberBase + 5);
    std::vector<bool> done(kFiberBase + 5, false);
    return f.derivation([&](int v) -> const PhiPoly& {
        if (!done[v]) {
            done[v] = true;
            if (is_atom_index(v)) {
                PhiAtom a = atom_of(v);
                a.word.push_back(k);
                if (static_cast<int>(a.word.size()) > max_word)
                    throw JetOrderOverflow("H-derivative of " + PhiNames::name(v) + " exceeds the jet order budget");
                images[v] = PhiPoly::variable(atom_index(a));
            }
        }
        return images[v];
    });
}

PhiPoly t_derivative(const PhiPoly& f, int max_word) {
    std::vector<PhiPoly> images(kFiberBase + 5);
    std::vector<bool> done(kFiberBase + 5, false);
    return f.derivation([&](int v) -> const PhiPoly& {
        if (!done[v]) {
            done[v] = true;
            if (is_atom_index(v)) {
                PhiAtom a = atom_of(v);
                if (static_cast<int>(a.word.size()) + 2 > max_word)
                    throw JetOrderOverflow("T-derivative of " + PhiNames::name(v) + " exceeds the jet order budget");
                PhiAtom a21 = a, a12 = a;
                a21.word.insert(a21.word.end(), {2, 1});
                a12.word.insert(a12.word.end(), {1, 2});
                images[v] = (PhiPoly::variable(atom_index(a21)) - PhiPoly::variable(atom_index(a12))) * Rational(1, 4);
            }
        }
        return images[v];
    });
}

PhiPoly fiber_partial(Fiber var, const PhiPoly& f) {
    const int target = kFiberBase + static_cast<int>(var);
    static const PhiPoly one(Rational(1)), zero;
    return f.derivation([&](int v) -> const PhiPoly& { return v == target ? one : zero; });
}

int max_word_length(const PhiPoly& f) {
    int m = 0;
    for (const auto& [mono, c] : f.terms())
        for (char ch : mono) {
            int v = static_cast<unsigned char>(ch);
            if (is_atom_index(v)) m = std::max(m, static_cast<int>(atom_of(v).word.size()));
        }
    return m;
}

std::vector<int> weights(const PhiPoly& f) {
    std::set<int> w;
    for (const auto& [mono, c] : f.terms()) {
        int s = 0;
        for (char ch : mono) {
            int v = static_cast<unsigned char>(ch);
            if (is_atom_index(v)) s += atom_weight(v);
        }
        w.insert(s);
    }
    return {w.begin(), w.end()};
}

bool has_fiber_variables(const PhiPoly& f) {
    for (const auto& [mono, c] : f.terms())
        for (char ch : mono)
            if (is_fiber_index(static_cast<unsigned char>(ch))) return true;
    return false;
}

const Rational& AtomValues::operator[](int index) {
    if (!is_atom_index(index)) throw std::out_of_range("AtomValues: not an atom index");
    if (!known_[index]) {
        PhiAtom a = atom_of(index);
        values_[index] = frame_->phi_value(a.word, a.base);
        known_[index] = true;
    }
    return values_[index];
}

namespace {

struct MixedValues {
    AtomValues& atoms;
    const std::array<Rational, 5>& fiber;
    const Rational& operator[](int v) const {
        return is_fiber_index(v) ? fiber[v - kFiberBase] : atoms[v];
    }
};

}  // namespace

Rational evaluate(const PhiPoly& f, AtomValues& atoms, const std::array<Rational, 5>& fiber) {
    return f.evaluate(MixedValues{atoms, fiber});
}

PhiPoly evaluate_atoms(const PhiPoly& f, AtomValues& atoms) {
    PhiPoly::Accumulator acc;
    for (const auto& [mono, c] : f.terms()) {
        Monomial rest;
        Rational v = c;
        for (char ch : mono) {
            int idx = static_cast<unsigned char>(ch);
            if (is_fiber_index(idx))
                rest.push_back(ch);
            else
                v *= atoms[idx];
        }
        if (v != 0) PhiPoly::accumulate(acc, rest, v);
    }
    return PhiPoly::from_accumulator(std::move(acc));
}

RationalJetExpr to_rational_jet_expr(const PhiPoly& f) {
    if (has_fiber_variables(f)) throw std::invalid_argument("to_rational_jet_expr: fiber variables present");
    RationalJetExpr sum;
    for (const auto& [mono, c] : f.terms()) {
        RationalJetExpr prod(c);
        for (char ch : mono) {
            PhiAtom a = atom_of(static_cast<unsigned char>(ch));
            prod = prod * build_phi(a.word, a.base);
        }
        sum = sum + prod;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    PhiPoly parse() {
        PhiPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw PhiParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char ch) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char ch) {
        if (!accept(ch)) fail(std::string("expected '") + ch + "'");
    }

    PhiPoly expr() {
        PhiPoly r;
        bool first = true;
        for (;;) {
            skip();
            bool neg = false;
            if (accept('-'))
                neg = true;
            else if (!accept('+') && !first)
                break;
            PhiPoly t = term();
            r = neg ? r - t : r + t;
            first = false;
        }
        return r;
    }

    PhiPoly term() {
        PhiPoly r = power();
        for (;;) {
            if (accept('*'))
                r = r * power();
            else if (accept('/')) {
                PhiPoly d = power();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero numbers");
                r = r * Rational(1 / d.constant_term());
            } else
                break;
        }
        return r;
    }

    PhiPoly power() {
        PhiPoly base = primary();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    PhiPoly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            PhiPoly r = expr();
            expect(')');
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return PhiPoly(Rational(std::string(s_.substr(start, pos_ - start))));
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string id(s_.substr(start, pos_ - start));
        if (id == "Phi1") return phi_atom({}, 1);
        if (id == "Phi2") return phi_atom({}, 2);
        if (id.size() == 1 && id[0] >= 'a' && id[0] <= 'e') return fiber_var(static_cast<Fiber>(id[0] - 'a'));
        if (id == "H1" || id == "H2" || id == "T") {
            expect('(');
            PhiPoly inner = expr();
            expect(')');
            if (id == "T") return t_derivative(inner);
            return h_derivative(id == "H1" ? 1 : 2, inner);
        }
        pos_ = start;
        fail("unknown identifier '" + id + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

PhiPoly parse_phipoly(std::string_view text) { return Parser(text).parse(); }

}  // namespace cartanforge
