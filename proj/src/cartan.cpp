#include "cartanforge/cartan.hpp"

#include "cartanforge/identities.hpp"

#include <mutex>
#include <sstream>

namespace cartanforge {

namespace {

constexpr std::array<const char*, kBasisSize> kNames = {"t", "h1", "h2", "d", "r", "i1", "i2", "j"};
constexpr std::array<int, kBasisSize> kDegrees = {-2, -1, -1, 0, 0, 1, 1, 2};
constexpr std::array<const char*, 5> kVerticalNames = {"D", "R", "I1", "I2", "J"};

bool is_horizontal(int k) { return k >= kT && k <= kH2; }

const PhiPoly& fv(Fiber f) {
    static const std::array<PhiPoly, 5> vars = {fiber_var(Fiber::a), fiber_var(Fiber::b), fiber_var(Fiber::c),
                                                fiber_var(Fiber::d), fiber_var(Fiber::e)};
    return vars[static_cast<int>(f)];
}

PhiPoly rho_pow(int k) {
    PhiPoly r(1);
    for (int i = 0; i < k; ++i) r = r * FiberRational::rho();
    return r;
}

const LieAlgebra& algebra_g() {
    static const LieAlgebra g = heisenberg_prolonged().base();
    return g;
}

}  // namespace

std::string_view basis_name(int k) { return kNames.at(k); }

int basis_index(std::string_view name) {
    for (int k = 0; k < kBasisSize; ++k)
        if (name == kNames[k]) return k;
    throw std::invalid_argument("unknown basis label '" + std::string(name) + "'");
}

int basis_degree(int k) { return kDegrees.at(k); }

// ---------------------------------------------------------------------------
// FiberRational

FiberRational::FiberRational(PhiPoly num, int rho_power) : num_(std::move(num)), k_(rho_power) {
    if (num_.is_zero()) k_ = 0;
}

const PhiPoly& FiberRational::rho() {
    static const PhiPoly r = fv(Fiber::c) * fv(Fiber::c) + fv(Fiber::d) * fv(Fiber::d);
    return r;
}

FiberRational FiberRational::normalized() const {
    FiberRational r = *this;
    while (r.k_ > 0) {
        auto q = r.num_.exact_divide(rho());
        if (!q) break;
        r.num_ = std::move(*q);
        --r.k_;
    }
    if (r.num_.is_zero()) r.k_ = 0;
    return r;
}

FiberRational FiberRational::operator+(const FiberRational& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    int k = std::max(k_, o.k_);
    return {num_ * rho_pow(k - k_) + o.num_ * rho_pow(k - o.k_), k};
}

FiberRational FiberRational::operator-(const FiberRational& o) const { return *this + (-o); }

FiberRational FiberRational::operator*(const FiberRational& o) const {
    if (is_zero() || o.is_zero()) return {};
    return {num_ * o.num_, k_ + o.k_};
}

Rational FiberRational::evaluate(AtomValues& atoms, const std::array<Rational, 5>& fiber) const {
    Rational v = cartanforge::evaluate(num_, atoms, fiber);
    if (k_ == 0 || v == 0) return v;
    Rational r = fiber[2] * fiber[2] + fiber[3] * fiber[3];
    if (r == 0) throw DegeneratePoint("c^2 + d^2 vanishes at the fiber point");
    for (int i = 0; i < k_; ++i) v /= r;
    return v;
}

std::string FiberRational::to_string() const {
    if (k_ == 0) return num_.to_string();
    std::string s = "(" + num_.to_string() + ")/(c^2+d^2)";
    if (k_ > 1) s += "^" + std::to_string(k_);
    return s;
}

// ---------------------------------------------------------------------------
// Frame fields

const std::array<PhiPoly, 5>& vertical_coefficients(Vertical v) {
    static const std::array<std::array<PhiPoly, 5>, 5> table = [] {
        const PhiPoly &a = fv(Fiber::a), &b = fv(Fiber::b), &c = fv(Fiber::c), &d = fv(Fiber::d),
                      &e = fv(Fiber::e);
        std::array<std::array<PhiPoly, 5>, 5> t;
        t[0] = {-a, -b, -c, -d, e * Rational(-2)};
        t[1] = {-b, a, d, -c, PhiPoly()};
        t[2] = {PhiPoly(1), PhiPoly(), PhiPoly(), PhiPoly(), -b};
        t[3] = {PhiPoly(), PhiPoly(1), PhiPoly(), PhiPoly(), a};
        t[4] = {PhiPoly(), PhiPoly(), PhiPoly(), PhiPoly(), PhiPoly(Rational(1, 2))};
        return t;
    }();
    return table.at(static_cast<int>(v));
}

PhiPoly vertical_apply(Vertical v, const PhiPoly& f) {
    static const PhiPoly zero;
    const auto& coeff = vertical_coefficients(v);
    return f.derivation([&](int var) -> const PhiPoly& {
        if (is_fiber_index(var)) return coeff[var - kFiberBase];
        return zero;
    });
}

std::array<std::array<std::array<Rational, 5>, 5>, 5> vertical_bracket_table() {
    std::array<std::array<std::array<Rational, 5>, 5>, 5> table{};
    for (int k = 0; k < 5; ++k) {
        for (int l = 0; l < 5; ++l) {
            const auto& ck = vertical_coefficients(static_cast<Vertical>(k));
            const auto& cl = vertical_coefficients(static_cast<Vertical>(l));
            std::array<PhiPoly, 5> w;
            for (int x = 0; x < 5; ++x)
                w[x] = vertical_apply(static_cast<Vertical>(k), cl[x]) -
                       vertical_apply(static_cast<Vertical>(l), ck[x]);
            // Match coefficients monomial by monomial against the five fields.
            std::map<std::pair<int, Monomial>, std::size_t> rows;
            auto row_of = [&](int x, const Monomial& m) {
                return rows.try_emplace({x, m}, rows.size()).first->second;
            };
            for (int m = 0; m < 5; ++m)
                for (int x = 0; x < 5; ++x)
                    for (const auto& t : vertical_coefficients(static_cast<Vertical>(m))[x].terms())
                        row_of(x, t.first);
            for (int x = 0; x < 5; ++x)
                for (const auto& t : w[x].terms()) row_of(x, t.first);
            Matrix A(rows.size(), 5);
            Vec rhs(rows.size());
            for (int m = 0; m < 5; ++m)
                for (int x = 0; x < 5; ++x)
                    for (const auto& t : vertical_coefficients(static_cast<Vertical>(m))[x].terms())
                        A(rows.at({x, t.first}), m) = t.second;
            for (int x = 0; x < 5; ++x)
                for (const auto& t : w[x].terms()) rhs[rows.at({x, t.first})] = t.second;
            auto sol = solve(A, rhs);
            if (!sol)
                throw std::logic_error("bracket of vertical fields is not a constant combination");
            for (int m = 0; m < 5; ++m) table[k][l][m] = (*sol)[m];
        }
    }
    return table;
}

PhiPoly horizontal_apply(Horizontal w, const PhiPoly& f, int max_word) {
    switch (w) {
        case Horizontal::T: return t_derivative(f, max_word);
        case Horizontal::H1: return h_derivative(1, f, max_word);
        case Horizontal::H2: return h_derivative(2, f, max_word);
    }
    throw std::logic_error("unreachable");
}

FiberRational frame_apply(int k, const FiberRational& f, int max_word) {
    if (f.is_zero()) return {};
    if (is_horizontal(k))
        return {horizontal_apply(static_cast<Horizontal>(k), f.numerator(), max_word), f.rho_power()};
    auto v = static_cast<Vertical>(k - kD);
    PhiPoly dn = vertical_apply(v, f.numerator());
    if (f.rho_power() == 0) return {dn, 0};
    PhiPoly drho = vertical_apply(v, FiberRational::rho());
    if (drho.is_zero()) return {dn, f.rho_power()};
    // V(N / rho^k) = (V(N) rho - k N V(rho)) / rho^(k+1)
    FiberRational r(dn * FiberRational::rho() - f.numerator() * drho * Rational(f.rho_power()), f.rho_power() + 1);
    return r.normalized();
}

std::array<PhiPoly, kBasisSize> frame_bracket(int k, int l) {
    static const auto vtable = vertical_bracket_table();
    std::array<PhiPoly, kBasisSize> r;
    if (k == l) return r;
    if (is_horizontal(k) && is_horizontal(l)) {
        static const PhiPoly phi1 = phi_atom({}, 1), phi2 = phi_atom({}, 2);
        if (k == kH1 && l == kH2) r[kT] = PhiPoly(4);
        else if (k == kH2 && l == kH1) r[kT] = PhiPoly(-4);
        else if (k == kH1 && l == kT) r[kT] = phi1;
        else if (k == kT && l == kH1) r[kT] = -phi1;
        else if (k == kH2 && l == kT) r[kT] = phi2;
        else if (k == kT && l == kH2) r[kT] = -phi2;
        return r;
    }
    if (!is_horizontal(k) && !is_horizontal(l)) {
        for (int m = 0; m < 5; ++m) r[kD + m] = PhiPoly(vtable[k - kD][l - kD][m]);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Connection coefficients

std::string ConnectionCoefficients::entry_name(int row, int col) {
    return "alpha_" + std::string(basis_name(row)) + std::string(basis_name(col));
}

std::vector<std::pair<int, int>> ConnectionCoefficients::entries() {
    std::vector<std::pair<int, int>> e;
    for (int col = 0; col < kBasisSize; ++col) e.emplace_back(kT, col);
    for (int row : {kH1, kH2})
        for (int col = kH1; col < kBasisSize; ++col) e.emplace_back(row, col);
    return e;
}

// ---------------------------------------------------------------------------
// Lifted fields

bool LiftedField::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

LiftedField constant_field(const ConnectionCoefficients& alpha, int k) {
    LiftedField X;
    if (is_horizontal(k)) {
        for (int l = 0; l < kBasisSize; ++l) X.c[l] = FiberRational(alpha(k, l));
    } else {
        X.c[k] = FiberRational(PhiPoly(1));
    }
    return X;
}

FiberRational apply_field(const LiftedField& X, const FiberRational& f, int max_word) {
    FiberRational r;
    if (f.is_zero()) return r;
    for (int l = 0; l < kBasisSize; ++l)
        if (!X.c[l].is_zero()) r = r + X.c[l] * frame_apply(l, f, max_word);
    return r.normalized();
}

LiftedField lifted_bracket(const LiftedField& X, const LiftedField& Y, int max_word) {
    LiftedField R;
    for (int l = 0; l < kBasisSize; ++l) {
        if (X.c[l].is_zero()) continue;
        for (int n = 0; n < kBasisSize; ++n) {
            if (Y.c[n].is_zero()) continue;
            auto br = frame_bracket(l, n);
            for (int m = 0; m < kBasisSize; ++m)
                if (!br[m].is_zero()) R.c[m] = R.c[m] + X.c[l] * Y.c[n] * FiberRational(br[m]);
        }
    }
    for (int m = 0; m < kBasisSize; ++m) {
        R.c[m] = R.c[m] + apply_field(X, Y.c[m], max_word) - apply_field(Y, X.c[m], max_word);
        R.c[m] = R.c[m].normalized();
    }
    return R;
}

// ---------------------------------------------------------------------------
// Duality

std::array<std::array<PhiPoly, kBasisSize>, kBasisSize> connection_matrix(const ConnectionCoefficients& alpha) {
    std::array<std::array<PhiPoly, kBasisSize>, kBasisSize> M;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < kBasisSize; ++l) M[k][l] = alpha(k, l);
    for (int k = kD; k < kBasisSize; ++k) M[k][k] = PhiPoly(1);
    return M;
}

PhiPoly connection_matrix_det(const ConnectionCoefficients& alpha) {
    auto M = connection_matrix(alpha);
    const int n = kBasisSize;
    PhiPoly prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k].is_zero()) {
            int p = k + 1;
            while (p < n && M[p][k].is_zero()) ++p;
            if (p == n) return PhiPoly();
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                PhiPoly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                auto q = num.exact_divide(prev);
                if (!q) throw std::logic_error("fraction-free elimination: inexact division");
                M[i][j] = std::move(*q);
            }
            M[i][k] = PhiPoly();
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

std::array<FiberRational, kBasisSize> DualFrame::components(const LiftedField& v) const {
    std::array<FiberRational, kBasisSize> w;
    for (int k = 0; k < kBasisSize; ++k) {
        FiberRational s;
        for (int l = 0; l < kBasisSize; ++l)
            if (!beta[k][l].is_zero() && !v.c[l].is_zero()) s = s + beta[k][l] * v.c[l];
        w[k] = s.normalized();
    }
    return w;
}

DualFrame build_beta(const ConnectionCoefficients& alpha) {
    std::array<std::array<PhiPoly, 3>, 3> A;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A[i][j] = alpha(i, j);
    auto minor = [&](int i, int j) {
        int r[2], c[2], ri = 0, ci = 0;
        for (int x = 0; x < 3; ++x) {
            if (x != i) r[ri++] = x;
            if (x != j) c[ci++] = x;
        }
        return A[r[0]][c[0]] * A[r[1]][c[1]] - A[r[0]][c[1]] * A[r[1]][c[0]];
    };
    std::array<std::array<PhiPoly, 3>, 3> cof;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) cof[i][j] = ((i + j) % 2 == 0) ? minor(i, j) : -minor(i, j);
    PhiPoly det = A[0][0] * cof[0][0] + A[0][1] * cof[0][1] + A[0][2] * cof[0][2];
    if (det.is_zero()) throw SingularFrame("the horizontal block of the connection matrix is singular");

    // Write det = s * rho^k with a rational s.
    int k = 0;
    PhiPoly rest = det;
    while (!rest.is_constant()) {
        auto q = rest.exact_divide(FiberRational::rho());
        if (!q) throw SingularFrame("determinant is not a constant multiple of a power of c^2 + d^2");
        rest = std::move(*q);
        ++k;
    }
    Rational inv = 1 / rest.constant_term();

    DualFrame D;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) D.beta[i][j] = FiberRational(cof[i][j] * inv, k).normalized();
    for (int a = 0; a < 5; ++a) {
        for (int j = 0; j < 3; ++j) {
            FiberRational s;
            for (int i = 0; i < 3; ++i) s = s - FiberRational(alpha(i, kD + a)) * D.beta[i][j];
            D.beta[kD + a][j] = s.normalized();
        }
        D.beta[kD + a][kD + a] = FiberRational(PhiPoly(1));
    }
    return D;
}

// ---------------------------------------------------------------------------
// Curvature

std::string CurvatureCoefficient::name() const {
    return "kappa^{" + std::string(basis_name(p1)) + std::string(basis_name(p2)) + "}_" +
           std::string(basis_name(target));
}

int curvature_homogeneity(int p1, int p2, int target) {
    return basis_degree(target) - basis_degree(p1) - basis_degree(p2);
}

CartanConnection::CartanConnection(ConnectionCoefficients alpha, int max_word)
    : alpha_(std::move(alpha)), max_word_(max_word), beta_(build_beta(alpha_)) {
    for (int k = 0; k < kBasisSize; ++k) fields_[k] = constant_field(alpha_, k);
}

const LiftedField& CartanConnection::bracket(int p1, int p2) {
    auto key = std::make_pair(p1, p2);
    auto it = brackets_.find(key);
    if (it == brackets_.end())
        it = brackets_.emplace(key, lifted_bracket(fields_.at(p1), fields_.at(p2), max_word_)).first;
    return it->second;
}

CurvatureCoefficient CartanConnection::curvature(int p1, int p2, int target) {
    const LiftedField& v = bracket(p1, p2);
    FiberRational w;
    for (int l = 0; l < kBasisSize; ++l)
        if (!beta_.beta[target][l].is_zero() && !v.c[l].is_zero()) w = w + beta_.beta[target][l] * v.c[l];
    FiberRational value = FiberRational(PhiPoly(algebra_g().structure_constant(p1, p2, target))) - w;
    return {p1, p2, target, curvature_homogeneity(p1, p2, target), value.normalized()};
}

std::vector<CurvatureCoefficient> CartanConnection::all_curvatures() {
    std::vector<CurvatureCoefficient> out;
    for (auto [p1, p2] : curvature_pairs())
        for (int k = 0; k < kBasisSize; ++k) out.push_back(curvature(p1, p2, k));
    return out;
}

const std::vector<std::pair<int, int>>& curvature_pairs() {
    static const std::vector<std::pair<int, int>> pairs = {{kH1, kH2}, {kH1, kT}, {kH2, kT}};
    return pairs;
}

EssentialCurvatures essential_curvatures() { return {delta1_symmetric().expr, delta4_symmetric().expr}; }

std::array<PhiPoly, 4> homogeneity4_closed_forms() {
    auto [d1, d4] = essential_curvatures();
    const PhiPoly &c = fv(Fiber::c), &d = fv(Fiber::d);
    PhiPoly c2 = c * c, d2 = d * d;
    PhiPoly c4 = c2 * c2, d4p = d2 * d2, c3d = c2 * c * d, cd3 = c * d2 * d;
    PhiPoly k11 = d1 * c4 + d4 * c3d * Rational(2) + d4 * cd3 * Rational(2) - d1 * d4p;
    PhiPoly k12 = d4 * c4 - d1 * c3d * Rational(2) - d1 * cd3 * Rational(2) - d4 * d4p;
    return {k11, k12, k12, -k11};
}

Homogeneity5 curvature_h5(CartanConnection& connection) {
    auto k = [&](int p1, int p2, int target) { return connection.curvature(p1, p2, target).value; };
    const LiftedField& H1 = connection.field(kH1);
    const LiftedField& H2 = connection.field(kH2);
    FiberRational a = apply_field(H1, k(kH2, kT, kI2)) - apply_field(H2, k(kH1, kT, kI2));
    FiberRational b = apply_field(H2, k(kH1, kT, kI1)) - apply_field(H1, k(kH2, kT, kI1));
    return {a.normalized(), b.normalized()};
}

// ---------------------------------------------------------------------------
// Sampling

SamplePoint::SamplePoint(RationalSampler& sampler, int order) {
    do {
        frame_ = std::make_unique<SeriesFrame>(SeriesFrame::random(sampler, order));
    } while (!frame_->nondegenerate());
    do {
        for (auto& x : fiber_) x = sampler.next();
    } while (fiber_[2] * fiber_[2] + fiber_[3] * fiber_[3] == 0);
    atoms_ = std::make_unique<AtomValues>(*frame_);
}

SamplePoint::SamplePoint(std::unique_ptr<SeriesFrame> frame, const std::array<Rational, 5>& fiber)
    : frame_(std::move(frame)), fiber_(fiber) {
    atoms_ = std::make_unique<AtomValues>(*frame_);
}

bool C1Report::all_hold() const {
    for (const auto& e : equations)
        if (!e.holds) return false;
    return true;
}

namespace {

std::string format_coefficient(const Rational& c, const std::string& symbol, bool first) {
    std::string s;
    Rational a = abs(c);
    if (c < 0) s = first ? "-" : " - ";
    else if (!first) s = " + ";
    if (symbol.empty()) return s + cartanforge::to_string(a);
    if (a != 1) s += cartanforge::to_string(a) + "*";
    return s + symbol;
}

}  // namespace

C1Report check_c1_system(const ConnectionCoefficients& alpha, int points, std::uint64_t seed) {
    const LieAlgebra& g = algebra_g();
    static const auto vtable = vertical_bracket_table();
    C1Report report;

    struct Pending {
        EquationStatus status;
        FiberRational expr;
    };
    std::vector<Pending> pending;

    for (int x = kD; x < kBasisSize; ++x) {
        LiftedField X = constant_field(alpha, x);
        for (int y = kT; y <= kH2; ++y) {
            LiftedField Y = constant_field(alpha, y);
            LiftedField lhs = lifted_bracket(X, Y);
            Vec cxy = g.basis_bracket(x, y);
            for (int l = 0; l < kBasisSize; ++l) {
                if (y != kT && l == kT) {
                    ++report.trivial_skipped;
                    continue;
                }
                FiberRational e = lhs.c[l];
                // Text: X(alpha_yl) + sum_m (bracket coefficient) alpha_ym - sum_k c^k alpha_kl.
                std::map<std::string, Rational> symbols;
                Rational constant = 0;
                auto add_entry = [&](int row, int col, const Rational& coeff) {
                    if (is_horizontal(row)) {
                        if (row != kT && col == kT) return;
                        symbols[ConnectionCoefficients::entry_name(row, col)] += coeff;
                    } else if (row == col) {
                        constant += coeff;
                    }
                };
                if (l >= kD)
                    for (int m = kD; m < kBasisSize; ++m)
                        if (vtable[x - kD][m - kD][l - kD] != 0) add_entry(y, m, vtable[x - kD][m - kD][l - kD]);
                for (int k = 0; k < kBasisSize; ++k) {
                    if (cxy[k] == 0) continue;
                    add_entry(k, l, -cxy[k]);
                    if (is_horizontal(k)) {
                        e = e - FiberRational(alpha(k, l)) * cxy[k];
                    } else if (k == l) {
                        e = e - FiberRational(PhiPoly(cxy[k]));
                    }
                }
                std::string text;
                bool first = true;
                if (!(y != kT && l == kT)) {
                    text = std::string(kVerticalNames[x - kD]) + "(" + ConnectionCoefficients::entry_name(y, l) + ")";
                    first = false;
                }
                for (const auto& [sym, coeff] : symbols) {
                    if (coeff == 0) continue;
                    text += format_coefficient(coeff, sym, first);
                    first = false;
                }
                if (constant != 0) text += format_coefficient(constant, "", first);
                text += " = 0";

                EquationStatus st;
                st.family = 3 * (x - kD) + y + 1;
                st.label = "[" + std::string(kVerticalNames[x - kD]) + "," +
                           (y == kT ? std::string("T") : "H" + std::to_string(y)) + "]: " +
                           std::string(basis_name(l)) + "-component";
                st.text = std::move(text);
                pending.push_back({std::move(st), e.normalized()});
            }
        }
    }

    RationalSampler sampler(seed);
    for (int p = 0; p < points; ++p) {
        SamplePoint pt(sampler, 5);
        for (auto& q : pending) {
            if (pt(q.expr) != 0) q.status.holds = false;
            ++q.status.points_checked;
        }
    }
    for (auto& q : pending) report.equations.push_back(std::move(q.status));
    return report;
}

}  // namespace cartanforge
