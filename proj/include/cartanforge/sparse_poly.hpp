// Sparse multivariate polynomials with exact rational coefficients.
//
// A monomial is the sorted byte string of its variable indices (with
// repetition), so a variable index must fit in 0..127.  The variable set is
// supplied by a naming policy `Names` providing `static std::string name(int)`.
#ifndef CARTANFORGE_SPARSE_POLY_HPP
#define CARTANFORGE_SPARSE_POLY_HPP

#include "cartanforge/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cartanforge {

using Monomial = std::string;

/// Graded lexicographic order: total degree first, then the sorted index sequences.
struct MonomialLess {
    bool operator()(const Monomial& l, const Monomial& r) const {
        return l.size() != r.size() ? l.size() < r.size() : l < r;
    }
};

inline Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.resize(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), r.begin());
    return r;
}

/// a / b as sorted multisets, or nullopt when b is not contained in a.
inline std::optional<Monomial> monomial_quotient(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t j = 0;
    for (char ch : a) {
        if (j < b.size() && b[j] == ch)
            ++j;
        else
            r.push_back(ch);
    }
    if (j != b.size()) return std::nullopt;
    return r;
}

template <class Names>
class SparsePoly {
public:
    using Term = std::pair<Monomial, Rational>;
    using Accumulator = std::unordered_map<Monomial, Rational>;

    SparsePoly() = default;
    SparsePoly(const Rational& constant) {  // NOLINT: implicit scalar embedding
        if (constant != 0) terms_.emplace_back(Monomial(), constant);
    }
    SparsePoly(long constant) : SparsePoly(Rational(constant)) {}  // NOLINT

    static SparsePoly variable(int index) {
        if (index < 0 || index > 127) throw std::out_of_range("variable index out of range");
        SparsePoly p;
        p.terms_.emplace_back(Monomial(1, static_cast<char>(index)), Rational(1));
        return p;
    }

    static SparsePoly from_terms(std::vector<Term> terms) {
        for (auto& t : terms) std::sort(t.first.begin(), t.first.end());
        std::sort(terms.begin(), terms.end(),
                  [](const Term& l, const Term& r) { return MonomialLess{}(l.first, r.first); });
        SparsePoly p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first)
                p.terms_.back().second += t.second;
            else
                p.terms_.push_back(std::move(t));
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        }
        return p;
    }

    static void accumulate(Accumulator& acc, const Monomial& m, const Rational& c) {
        auto [it, inserted] = acc.try_emplace(m, c);
        if (!inserted) it->second += c;
    }

    static SparsePoly from_accumulator(Accumulator&& acc) {
        std::vector<Term> terms;
        terms.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) terms.emplace_back(m, std::move(c));
        std::sort(terms.begin(), terms.end(),
                  [](const Term& l, const Term& r) { return MonomialLess{}(l.first, r.first); });
        SparsePoly p;
        p.terms_ = std::move(terms);
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? 0 : static_cast<int>(terms_.back().first.size()); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }
    Rational constant_term() const {
        return (!terms_.empty() && terms_[0].first.empty()) ? terms_[0].second : Rational(0);
    }

    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    SparsePoly operator+(const SparsePoly& o) const {
        SparsePoly r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        auto i = terms_.begin(), j = o.terms_.begin();
        MonomialLess less;
        while (i != terms_.end() || j != o.terms_.end()) {
            if (j == o.terms_.end() || (i != terms_.end() && less(i->first, j->first))) {
                r.terms_.push_back(*i++);
            } else if (i == terms_.end() || less(j->first, i->first)) {
                r.terms_.push_back(*j++);
            } else {
                Rational s = i->second + j->second;
                if (s != 0) r.terms_.emplace_back(i->first, std::move(s));
                ++i;
                ++j;
            }
        }
        return r;
    }

    SparsePoly operator-(const SparsePoly& o) const { return *this + (-o); }

    SparsePoly operator*(const SparsePoly& o) const {
        if (terms_.empty() || o.terms_.empty()) return {};
        if (o.is_constant()) return *this * o.terms_[0].second;
        if (is_constant()) return o * terms_[0].second;
        Accumulator acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) accumulate(acc, merge_monomials(m1, m2), c1 * c2);
        return from_accumulator(std::move(acc));
    }

    SparsePoly operator*(const Rational& s) const {
        if (s == 0) return {};
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.second *= s;
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
    SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

    friend SparsePoly operator*(const Rational& s, const SparsePoly& p) { return p * s; }

    SparsePoly pow(unsigned n) const {
        SparsePoly r(Rational(1));
        for (unsigned k = 0; k < n; ++k) r = r * *this;
        return r;
    }

    /// Value under an assignment of rationals to variable indices.
    template <class Values>
    Rational evaluate(const Values& values) const {
        // Consecutive monomials share prefixes, so prefix products are reused.
        Rational sum = 0;
        std::vector<Rational> prefix(1, Rational(1));
        Monomial prev;
        for (const auto& [m, c] : terms_) {
            std::size_t common = 0;
            while (common < m.size() && common < prev.size() && m[common] == prev[common]) ++common;
            prefix.resize(common + 1);
            for (std::size_t k = common; k < m.size(); ++k)
                prefix.push_back(prefix.back() * values[static_cast<unsigned char>(m[k])]);
            sum += c * prefix[m.size()];
            prev = m;
        }
        return sum;
    }

    /// Applies the derivation determined by the images of the variables (Leibniz rule).
    SparsePoly derivation(const std::function<const SparsePoly&(int)>& image) const {
        Accumulator acc;
        for (const auto& [m, c] : terms_) {
            std::size_t k = 0;
            while (k < m.size()) {
                std::size_t e = k;
                while (e < m.size() && m[e] == m[k]) ++e;
                const SparsePoly& img = image(static_cast<unsigned char>(m[k]));
                if (!img.is_zero()) {
                    Monomial rest = m;
                    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
                    Rational f = c * static_cast<long>(e - k);
                    for (const auto& [im, ic] : img.terms_) accumulate(acc, merge_monomials(rest, im), f * ic);
                }
                k = e;
            }
        }
        return from_accumulator(std::move(acc));
    }

    /// Substitutes polynomials of another ring for the variables.
    template <class Target, class Image>
    Target substitute(const Image& image) const {
        Target sum;
        for (const auto& [m, c] : terms_) {
            Target prod(c);
            for (char ch : m) prod = prod * image(static_cast<unsigned char>(ch));
            sum = sum + prod;
        }
        return sum;
    }

    /// Quotient when `divisor` divides this polynomial exactly.
    std::optional<SparsePoly> exact_divide(const SparsePoly& divisor) const {
        if (divisor.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
        std::map<Monomial, Rational, MonomialLess> rem;
        for (const auto& t : terms_) rem.emplace(t.first, t.second);
        const Term& lead = divisor.terms_.back();
        std::vector<Term> quotient;
        while (!rem.empty()) {
            auto top = std::prev(rem.end());
            auto qm = monomial_quotient(top->first, lead.first);
            if (!qm) return std::nullopt;
            Rational qc = top->second / lead.second;
            for (const auto& [dm, dc] : divisor.terms_) {
                Monomial m = merge_monomials(*qm, dm);
                auto [it, inserted] = rem.try_emplace(m, -qc * dc);
                if (!inserted) {
                    it->second -= qc * dc;
                    if (it->second == 0) rem.erase(it);
                }
            }
            quotient.emplace_back(std::move(*qm), std::move(qc));
        }
        return from_terms(std::move(quotient));
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = abs(c);
            os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            bool coef = m.empty() || a != 1;
            if (coef) os << cartanforge::to_string(a);
            std::size_t k = 0;
            while (k < m.size()) {
                std::size_t e = k;
                while (e < m.size() && m[e] == m[k]) ++e;
                if (coef || k > 0) os << "*";
                os << Names::name(static_cast<unsigned char>(m[k]));
                if (e - k > 1) os << "^" << (e - k);
                k = e;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::vector<Term> terms_;  // sorted by MonomialLess, no zero coefficients
};

}  // namespace cartanforge

#endif
