#include "cartanforge/jetcalc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace cartanforge {

namespace {

struct JetTables {
    std::vector<JetVariable> vars;
    int index[kMaxJetOrder + 1][kMaxJetOrder + 1][kMaxJetOrder + 1];
    int shift[kJetVariableCount][3];

    JetTables() {
        for (auto& p : index)
            for (auto& q : p)
                for (auto& r : q) r = -1;
        for (int n = 1; n <= kMaxJetOrder; ++n)
            for (int a = n; a >= 0; --a)
                for (int b = n - a; b >= 0; --b) {
                    int c = n - a - b;
                    index[a][b][c] = static_cast<int>(vars.size());
                    vars.push_back({a, b, c});
                }
        for (int k = 0; k < kJetVariableCount; ++k) {
            const auto& v = vars[k];
            const int d[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
            for (int dir = 0; dir < 3; ++dir) {
                int a = v.a + d[dir][0], b = v.b + d[dir][1], c = v.c + d[dir][2];
                shift[k][dir] = (a + b + c <= kMaxJetOrder) ? index[a][b][c] : -1;
            }
        }
    }
};

const JetTables& tables() {
    static const JetTables t;
    return t;
}

using Accumulator = DiffPoly::Accumulator;

}  // namespace

int jet_index(const JetVariable& v) {
    if (v.a < 0 || v.b < 0 || v.c < 0 || v.order() < 1 || v.order() > kMaxJetOrder)
        throw JetOrderOverflow("jet variable out of range 1..6");
    return tables().index[v.a][v.b][v.c];
}

JetVariable jet_variable(int index) { return tables().vars.at(index); }

std::string jet_name(int index) {
    const auto& v = tables().vars.at(index);
    return "phi_" + std::string(v.a, 'x') + std::string(v.b, 'y') + std::string(v.c, 'u');
}

DiffPoly jet_var(const JetVariable& v) { return DiffPoly::variable(jet_index(v)); }

int max_jet_order(const DiffPoly& f) {
    int m = 0;
    for (const auto& [mono, c] : f.terms())
        for (char ch : mono) m = std::max(m, tables().vars[static_cast<unsigned char>(ch)].order());
    return m;
}

// ---------------------------------------------------------------------------
// Basics and derivatives

const Basics& build_basics() {
    static const Basics basics = [] {
        auto v = [](int a, int b, int c) { return jet_var(JetVariable{a, b, c}); };
        DiffPoly px = v(1, 0, 0), py = v(0, 1, 0), pu = v(0, 0, 1);
        DiffPoly pxx = v(2, 0, 0), pyy = v(0, 2, 0), puu = v(0, 0, 2), pxu = v(1, 0, 1), pyu = v(0, 1, 1);
        Basics b;
        b.Delta = DiffPoly(Rational(1)) + pu * pu;
        b.Lambda1 = py - px * pu;
        b.Lambda2 = -px - py * pu;
        b.Upsilon = -pxx - pyy - Rational(2) * py * pxu - px * px * puu + Rational(2) * px * pyu - py * py * puu +
                    Rational(2) * py * pu * pyu + Rational(2) * px * pu * pxu - pu * pu * pxx - pu * pu * pyy;
        return b;
    }();
    return basics;
}

DiffPoly total_derivative(const DiffPoly& f, Direction dir) {
    const int d = static_cast<int>(dir);
    Accumulator acc;
    for (const auto& [m, c] : f.terms()) {
        std::size_t k = 0;
        while (k < m.size()) {
            std::size_t e = k;
            while (e < m.size() && m[e] == m[k]) ++e;
            int v = static_cast<unsigned char>(m[k]);
            int w = tables().shift[v][d];
            if (w < 0) throw JetOrderOverflow("total derivative of " + jet_name(v) + " exceeds jet order 6");
            Monomial nm = m;
            nm.erase(nm.begin() + static_cast<std::ptrdiff_t>(k));
            nm.insert(std::upper_bound(nm.begin(), nm.end(), static_cast<char>(w)), static_cast<char>(w));
            DiffPoly::accumulate(acc, nm, c * static_cast<long>(e - k));
            k = e;
        }
    }
    return DiffPoly::from_accumulator(std::move(acc));
}

namespace {

struct FrameData {
    DiffPoly D, U, L[2];          // Delta, Upsilon, Lambda_1, Lambda_2
    DiffPoly Dx[2], Ux[2], Du, Uu;  // x_i- and u-derivatives of Delta, Upsilon
    DiffPoly D2, DU, D2U;          // Delta^2, Delta*Upsilon, Delta^2*Upsilon
};

const FrameData& frame() {
    static const FrameData f = [] {
        const Basics& b = build_basics();
        FrameData r;
        r.D = b.Delta;
        r.U = b.Upsilon;
        r.L[0] = b.Lambda1;
        r.L[1] = b.Lambda2;
        for (int i = 0; i < 2; ++i) {
            r.Dx[i] = total_derivative(b.Delta, static_cast<Direction>(i));
            r.Ux[i] = total_derivative(b.Upsilon, static_cast<Direction>(i));
        }
        r.Du = total_derivative(b.Delta, Direction::u);
        r.Uu = total_derivative(b.Upsilon, Direction::u);
        r.D2 = r.D * r.D;
        r.DU = r.D * r.U;
        r.D2U = r.D2 * r.U;
        return r;
    }();
    return f;
}

void check_index(int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("horizontal index must be 1 or 2");
}

}  // namespace

RationalJetExpr RationalJetExpr::lifted(unsigned P, unsigned Q) const {
    if (P < p || Q < q) throw std::invalid_argument("lifted: target denominator smaller than current");
    const FrameData& f = frame();
    DiffPoly n = num;
    for (unsigned k = p; k < P; ++k) n = n * f.D;
    for (unsigned k = q; k < Q; ++k) n = n * f.U;
    return {std::move(n), P, Q};
}

RationalJetExpr RationalJetExpr::normalized() const {
    const FrameData& f = frame();
    RationalJetExpr r = *this;
    if (r.num.is_zero()) return {DiffPoly(), 0, 0};
    while (r.p > 0) {
        auto qd = r.num.exact_divide(f.D);
        if (!qd) break;
        r.num = std::move(*qd);
        --r.p;
    }
    while (r.q > 0) {
        auto qu = r.num.exact_divide(f.U);
        if (!qu) break;
        r.num = std::move(*qu);
        --r.q;
    }
    return r;
}

RationalJetExpr RationalJetExpr::operator+(const RationalJetExpr& o) const {
    unsigned P = std::max(p, o.p), Q = std::max(q, o.q);
    return {lifted(P, Q).num + o.lifted(P, Q).num, P, Q};
}

RationalJetExpr RationalJetExpr::operator-(const RationalJetExpr& o) const { return *this + (-o); }

RationalJetExpr RationalJetExpr::operator*(const RationalJetExpr& o) const { return {num * o.num, p + o.p, q + o.q}; }

bool RationalJetExpr::equals(const RationalJetExpr& o) const { return (*this - o).num.is_zero(); }

Rational RationalJetExpr::evaluate(const JetPoint& pt) const {
    const FrameData& f = frame();
    Rational d = f.D.evaluate(pt), u = f.U.evaluate(pt);
    if (d == 0) throw DegeneratePoint("Delta vanishes at the jet point");
    if (u == 0) throw DegeneratePoint("Upsilon vanishes at the jet point (Levi degenerate)");
    Rational den = 1;
    for (unsigned k = 0; k < p; ++k) den *= d;
    for (unsigned k = 0; k < q; ++k) den *= u;
    return num.evaluate(pt) / den;
}

RationalJetExpr apply_H(int i, const RationalJetExpr& g) {
    check_index(i);
    const FrameData& f = frame();
    const int k = i - 1;
    const DiffPoly& N = g.num;
    if (N.is_zero()) return {DiffPoly(), g.p + 2, g.q + 1};
    Rational p(g.p), q(g.q);
    DiffPoly Ni = total_derivative(N, static_cast<Direction>(k));
    DiffPoly Nu = total_derivative(N, Direction::u);
    DiffPoly coeffN = -(p * f.DU * f.Dx[k]) - p * f.U * f.L[k] * f.Du - q * f.D2 * f.Ux[k] - q * f.D * f.L[k] * f.Uu;
    DiffPoly num = f.D2U * Ni + f.DU * f.L[k] * Nu + coeffN * N;
    return {std::move(num), g.p + 2, g.q + 1};
}

RationalJetExpr apply_T(const RationalJetExpr& g) {
    const FrameData& f = frame();
    const DiffPoly& N = g.num;
    if (N.is_zero()) return {DiffPoly(), g.p + 3, g.q};
    Rational p(g.p), q(g.q);
    DiffPoly Nu = total_derivative(N, Direction::u);
    DiffPoly num = f.DU * Nu - (p * f.U * f.Du + q * f.D * f.Uu) * N;
    return {num * Rational(1, 4), g.p + 3, g.q};
}

DiffPoly build_A(const std::vector<int>& word) {
    if (word.empty() || word.size() > 4) throw std::invalid_argument("build_A: word length must be 1..4");
    for (int w : word) check_index(w);
    // Numerators up to length 3 are memoized; length 4 (about 1.6 million terms each) is not.
    static std::mutex mu;
    static std::map<std::vector<int>, DiffPoly> cache;
    if (word.size() <= 3) {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(word);
        if (it != cache.end()) return it->second;
    }
    const FrameData& f = frame();
    DiffPoly result;
    if (word.size() == 1) {
        const int i = word[0] - 1;
        DiffPoly Lu = total_derivative(f.L[i], Direction::u);
        result = f.D2 * f.Ux[i] + f.D * (Rational(-2) * f.Dx[i] * f.U + f.L[i] * f.Uu - f.U * Lu) - f.L[i] * f.U * f.Du;
    } else {
        std::vector<int> prefix(word.begin(), word.end() - 1);
        const DiffPoly A = build_A(prefix);
        const int m = static_cast<int>(prefix.size());  // previous (p,q) = (2m, m)
        const Rational p(2 * m), q(m);
        const int k = word.back() - 1;
        DiffPoly Ak = total_derivative(A, static_cast<Direction>(k));
        DiffPoly Au = total_derivative(A, Direction::u);
        result = f.D2 * (f.U * Ak - q * f.Ux[k] * A) +
                 f.D * (-p * f.Dx[k] * f.U * A + f.U * f.L[k] * Au - q * f.Uu * f.L[k] * A) -
                 p * f.Du * f.U * f.L[k] * A;
    }
    if (word.size() <= 3) {
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(word, result);
    }
    return result;
}

RationalJetExpr build_phi(const std::vector<int>& word, int i) {
    check_index(i);
    if (word.size() > 3) throw JetOrderOverflow("build_phi: words longer than 3 need jets beyond order 6");
    std::vector<int> full{i};
    full.insert(full.end(), word.begin(), word.end());
    const unsigned m = static_cast<unsigned>(word.size());
    return {build_A(full), 2 * m + 2, m + 1};
}

// ---------------------------------------------------------------------------
// Poly3 and jet points

Poly3 Poly3::constant(const Rational& c) {
    Poly3 p;
    if (c != 0) p.terms[{0, 0, 0}] = c;
    return p;
}

Poly3 Poly3::variable(int k) {
    Poly3 p;
    std::array<int, 3> e{0, 0, 0};
    e.at(k) = 1;
    p.terms[e] = 1;
    return p;
}

void Poly3::prune() {
    for (auto it = terms.begin(); it != terms.end();) it = (it->second == 0) ? terms.erase(it) : std::next(it);
}

Poly3 Poly3::operator+(const Poly3& o) const {
    Poly3 r = *this;
    for (const auto& [e, c] : o.terms) r.terms[e] += c;
    r.prune();
    return r;
}

Poly3 Poly3::operator-() const {
    Poly3 r = *this;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

Poly3 Poly3::operator-(const Poly3& o) const { return *this + (-o); }

Poly3 Poly3::operator*(const Poly3& o) const {
    Poly3 r;
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) r.terms[{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}] += c1 * c2;
    r.prune();
    return r;
}

Poly3 Poly3::pow(unsigned n) const {
    Poly3 r = constant(1);
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
}

int Poly3::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

Rational Poly3::derivative_at(int a, int b, int c, const std::array<Rational, 3>& point) const {
    const int order[3] = {a, b, c};
    Rational sum = 0;
    for (const auto& [e, coef] : terms) {
        Rational t = coef;
        for (int k = 0; k < 3 && t != 0; ++k) {
            if (e[k] < order[k]) {
                t = 0;
                break;
            }
            for (int j = 0; j < order[k]; ++j) t *= e[k] - j;
            for (int j = 0; j < e[k] - order[k]; ++j) t *= point[k];
        }
        sum += t;
    }
    return sum;
}

JetPoint jets_of_polynomial(const Poly3& phi, const std::array<Rational, 3>& point) {
    JetPoint pt;
    for (int k = 0; k < kJetVariableCount; ++k) {
        JetVariable v = jet_variable(k);
        pt[k] = phi.derivative_at(v.a, v.b, v.c, point);
    }
    return pt;
}

JetPoint random_jet_point(RationalSampler& sampler) {
    JetPoint pt;
    for (int k = 0; k < kJetVariableCount; ++k) pt[k] = sampler.next();
    return pt;
}

VerificationReport verify_identity(const RationalJetExpr& expr, const VerificationMode& mode) {
    VerificationReport rep;
    rep.mode = mode;
    rep.numerator_terms = expr.num.size();
    if (mode.kind == VerificationMode::Kind::full_expansion) {
        rep.all_zero = expr.num.is_zero();
        return rep;
    }
    const FrameData& f = frame();
    RationalSampler sampler(mode.seed);
    rep.all_zero = true;
    while (static_cast<int>(rep.points.size()) < mode.n_points) {
        JetPoint pt = random_jet_point(sampler);
        if (f.D.evaluate(pt) == 0 || f.U.evaluate(pt) == 0) {
            ++rep.skipped_degenerate;
            continue;
        }
        Rational v = expr.num.evaluate(pt);
        if (v != 0) rep.all_zero = false;
        rep.points.push_back({std::move(pt), std::move(v)});
    }
    return rep;
}

}  // namespace cartanforge
