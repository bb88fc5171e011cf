#include "cartanforge/jetseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace cartanforge {

namespace {

struct SeriesTables {
    // Monomials X^a Y^b U^c ordered by total degree, then by (a, b) descending.
    std::vector<std::array<int, 3>> exps;
    int index[kMaxSeriesOrder + 1][kMaxSeriesOrder + 1][kMaxSeriesOrder + 1];
    std::vector<int> offset;  // offset[n] = first index of degree n; offset[n+1] = count up to degree n

    SeriesTables() {
        for (auto& p : index)
            for (auto& q : p)
                for (auto& r : q) r = -1;
        for (int n = 0; n <= kMaxSeriesOrder; ++n) {
            offset.push_back(static_cast<int>(exps.size()));
            for (int a = n; a >= 0; --a)
                for (int b = n - a; b >= 0; --b) {
                    index[a][b][n - a - b] = static_cast<int>(exps.size());
                    exps.push_back({a, b, n - a - b});
                }
        }
        offset.push_back(static_cast<int>(exps.size()));
    }
    int count(int order) const { return order < 0 ? 0 : offset[order + 1]; }
};

const SeriesTables& st() {
    static const SeriesTables t;
    return t;
}

void check_order(int order) {
    if (order > kMaxSeriesOrder) throw std::invalid_argument("series order exceeds the supported maximum");
}

const Rational kZero(0);

}  // namespace

Series3::Series3(int order) : order_(order), c_(st().count(order)) { check_order(order); }

Series3 Series3::constant(const Rational& c, int order) {
    Series3 s(order);
    if (order >= 0) s.c_[0] = c;
    return s;
}

const Rational& Series3::coeff(int a, int b, int c) const {
    if (a + b + c > order_) throw JetOrderOverflow("series coefficient beyond the exact order");
    return c_[st().index[a][b][c]];
}

void Series3::set_coeff(int a, int b, int c, const Rational& v) {
    if (a + b + c > order_) throw JetOrderOverflow("series coefficient beyond the exact order");
    c_[st().index[a][b][c]] = v;
}

const Rational& Series3::constant_term() const {
    if (order_ < 0) throw JetOrderOverflow("series has no exact terms left");
    return c_[0];
}

Series3 Series3::operator+(const Series3& o) const {
    Series3 r(std::min(order_, o.order_));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

Series3 Series3::operator-(const Series3& o) const {
    Series3 r(std::min(order_, o.order_));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

Series3 Series3::operator-() const {
    Series3 r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Series3 Series3::operator*(const Series3& o) const {
    const int n = std::min(order_, o.order_);
    Series3 r(n);
    if (n < 0) return r;
    const auto& t = st();
    const int cnt = t.count(n);
    Rational prod;
    for (int i = 0; i < cnt; ++i) {
        if (c_[i] == 0) continue;
        const auto& ei = t.exps[i];
        const int rem = n - (ei[0] + ei[1] + ei[2]);
        const int cj = t.count(rem);
        for (int j = 0; j < cj; ++j) {
            if (o.c_[j] == 0) continue;
            const auto& ej = t.exps[j];
            prod = c_[i] * o.c_[j];
            r.c_[t.index[ei[0] + ej[0]][ei[1] + ej[1]][ei[2] + ej[2]]] += prod;
        }
    }
    return r;
}

Series3 Series3::operator*(const Rational& s) const {
    Series3 r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

Series3 Series3::operator+(const Rational& s) const {
    Series3 r = *this;
    if (order_ >= 0) r.c_[0] += s;
    return r;
}

Series3 Series3::inverse() const {
    if (order_ < 0) return Series3(order_);
    if (c_[0] == 0) throw DegeneratePoint("series inverse of a function vanishing at the point");
    // g = 1/f degree by degree: g_n = -(1/f_0) sum_{k=1..n} f_k g_{n-k}.
    const auto& t = st();
    Series3 g(order_);
    const Rational inv0 = 1 / c_[0];
    g.c_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
        for (int gi = t.offset[n]; gi < t.offset[n + 1]; ++gi) {
            const auto& eg = t.exps[gi];
            Rational acc = 0;
            for (int fi = 1; fi < t.count(n); ++fi) {
                const auto& ef = t.exps[fi];
                if (ef[0] > eg[0] || ef[1] > eg[1] || ef[2] > eg[2] || c_[fi] == 0) continue;
                const int hi = t.index[eg[0] - ef[0]][eg[1] - ef[1]][eg[2] - ef[2]];
                acc += c_[fi] * g.c_[hi];
            }
            g.c_[gi] = -inv0 * acc;
        }
    }
    return g;
}

Series3 Series3::derivative(Direction dir) const {
    const int d = static_cast<int>(dir);
    Series3 r(order_ - 1);
    const auto& t = st();
    for (int k = 0; k < t.count(order_ - 1); ++k) {
        auto e = t.exps[k];
        ++e[d];
        r.c_[k] = c_[t.index[e[0]][e[1]][e[2]]] * e[d];
    }
    return r;
}

Series3 Series3::truncated(int order) const {
    if (order > order_) throw std::invalid_argument("cannot raise the order of a series");
    Series3 r(order);
    std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(r.c_.size()), r.c_.begin());
    return r;
}

// ---------------------------------------------------------------------------

namespace {

Rational factorial(int n) {
    Rational f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

SeriesFrame::SeriesFrame(const Poly3& phi, const std::array<Rational, 3>& point, int order)
    : order_(order), phi_(order) {
    for (int n = 1; n <= order; ++n)
        for (int a = n; a >= 0; --a)
            for (int b = n - a; b >= 0; --b) {
                int c = n - a - b;
                Rational v = phi.derivative_at(a, b, c, point);
                if (v != 0) phi_.set_coeff(a, b, c, v / (factorial(a) * factorial(b) * factorial(c)));
            }
    build();
}

SeriesFrame::SeriesFrame(const JetPoint& jets, int order, const std::map<std::array<int, 3>, Rational>& higher)
    : order_(order), phi_(order) {
    for (int n = 1; n <= order; ++n)
        for (int a = n; a >= 0; --a)
            for (int b = n - a; b >= 0; --b) {
                int c = n - a - b;
                Rational v;
                if (n <= kMaxJetOrder) {
                    v = jets.at(JetVariable{a, b, c});
                } else {
                    auto it = higher.find({a, b, c});
                    if (it != higher.end()) v = it->second;
                }
                if (v != 0) phi_.set_coeff(a, b, c, v / (factorial(a) * factorial(b) * factorial(c)));
            }
    build();
}

SeriesFrame SeriesFrame::random(RationalSampler& sampler, int order) {
    JetPoint jets = random_jet_point(sampler);
    std::map<std::array<int, 3>, Rational> higher;
    for (int n = kMaxJetOrder + 1; n <= order; ++n)
        for (int a = n; a >= 0; --a)
            for (int b = n - a; b >= 0; --b) higher[{a, b, n - a - b}] = sampler.next();
    return SeriesFrame(jets, order, higher);
}

void SeriesFrame::build() {
    Series3 px = phi_.derivative(Direction::x), py = phi_.derivative(Direction::y), pu = phi_.derivative(Direction::u);
    delta_ = pu * pu + Rational(1);
    lambda_[0] = py - px * pu;
    lambda_[1] = -px - py * pu;
    Series3 inv_delta = delta_.inverse();
    lam_over_delta_[0] = lambda_[0] * inv_delta;
    lam_over_delta_[1] = lambda_[1] * inv_delta;
    // [H_1, H_2] = (H_1(Lambda_2/Delta) - H_2(Lambda_1/Delta)) d/du = 4T = (Upsilon / Delta^2) d/du.
    Series3 bracket = H(1, lam_over_delta_[1]) - H(2, lam_over_delta_[0]);
    upsilon_ = bracket * delta_ * delta_;
    tau_ = bracket * Rational(1, 4);
}

Series3 SeriesFrame::H(int i, const Series3& f) const {
    if (i != 1 && i != 2) throw std::invalid_argument("horizontal index must be 1 or 2");
    return f.derivative(static_cast<Direction>(i - 1)) + lam_over_delta_[i - 1] * f.derivative(Direction::u);
}

Series3 SeriesFrame::T(const Series3& f) const { return tau_ * f.derivative(Direction::u); }

const Series3& SeriesFrame::phi_word(const std::vector<int>& word, int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("Phi index must be 1 or 2");
    auto key = std::make_pair(word, i);
    auto it = words_.find(key);
    if (it != words_.end()) return it->second;
    Series3 s;
    if (word.empty()) {
        // [H_i, T] = (H_i(tau) - T(Lambda_i/Delta)) d/du = Phi_i tau d/du.
        if (!nondegenerate()) throw DegeneratePoint("Upsilon vanishes at the point (Levi degenerate)");
        s = (H(i, tau_) - T(lam_over_delta_[i - 1])) / tau_;
    } else {
        std::vector<int> prefix(word.begin(), word.end() - 1);
        s = H(word.back(), phi_word(prefix, i));
    }
    if (s.order() < 0) throw JetOrderOverflow("Phi-word needs jets beyond the series order");
    return words_.emplace(std::move(key), std::move(s)).first->second;
}

Rational SeriesFrame::phi_value(const std::vector<int>& word, int i) { return phi_word(word, i).constant_term(); }

JetPoint SeriesFrame::jet_point() const {
    JetPoint pt;
    for (int k = 0; k < kJetVariableCount; ++k) {
        JetVariable v = jet_variable(k);
        if (v.order() <= order_) pt[k] = phi_.coeff(v.a, v.b, v.c) * factorial(v.a) * factorial(v.b) * factorial(v.c);
    }
    return pt;
}

}  // namespace cartanforge
