#include "cartanforge/crmodel.hpp"

namespace cartanforge {

GaussRational GaussRational::operator/(const GaussRational& o) const {
    Rational n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    GaussRational p = *this * o.conj();
    return {p.re / n, p.im / n};
}

std::string GaussRational::to_string() const {
    if (im == 0) return cartanforge::to_string(re);
    std::string imag = im == 1 ? "i" : im == -1 ? "-i" : cartanforge::to_string(im) + "i";
    if (re == 0) return imag;
    return cartanforge::to_string(re) + (im > 0 ? "+" : "") + imag;
}

std::string CRVariables::name(int index) {
    switch (index) {
        case z: return "z";
        case w: return "w";
        case zb: return "zb";
        case wb: return "wb";
        default: return "v" + std::to_string(index);
    }
}

GaussPoly::GaussPoly(const GaussRational& c) : re_(c.re), im_(c.im) {}

GaussPoly GaussPoly::variable(int index) { return {RealCRPoly::variable(index), RealCRPoly()}; }

GaussPoly GaussPoly::operator*(const GaussPoly& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
}

bool GaussPoly::operator==(const GaussPoly& o) const { return (*this - o).is_zero(); }

GaussPoly GaussPoly::derivative(int variable) const {
    RealCRPoly one(1), zero;
    auto image = [&](int k) -> const RealCRPoly& { return k == variable ? one : zero; };
    return {re_.derivation(image), im_.derivation(image)};
}

GaussPoly GaussPoly::conjugate_to_bar_side() const {
    auto rename = [](int k) {
        if (k == CRVariables::z) return RealCRPoly::variable(CRVariables::zb);
        if (k == CRVariables::w) return RealCRPoly::variable(CRVariables::wb);
        throw std::invalid_argument("conjugate_to_bar_side expects a polynomial in z, w");
    };
    return {re_.substitute<RealCRPoly>(rename), -im_.substitute<RealCRPoly>(rename)};
}

GaussPoly GaussPoly::substitute(const std::function<GaussPoly(int)>& image) const {
    GaussPoly r = re_.substitute<GaussPoly>(image);
    GaussPoly i = im_.substitute<GaussPoly>(image);
    return r + GaussPoly(GaussRational::i()) * i;
}

std::map<Monomial, GaussRational> GaussPoly::coefficients() const {
    std::map<Monomial, GaussRational> out;
    for (const auto& [m, c] : re_.terms()) out[m].re += c;
    for (const auto& [m, c] : im_.terms()) out[m].im += c;
    return out;
}

std::string GaussPoly::to_string() const {
    if (is_zero()) return "0";
    if (im_.is_zero()) return re_.to_string();
    if (re_.is_zero()) return "i*(" + im_.to_string() + ")";
    return "(" + re_.to_string() + ") + i*(" + im_.to_string() + ")";
}

GaussPoly HoloField::apply(const GaussPoly& f) const {
    return Z * f.derivative(CRVariables::z) + W * f.derivative(CRVariables::w);
}

std::optional<int> HoloField::homogeneity() const {
    std::optional<int> h;
    auto visit = [&](const GaussPoly& p, int shift) {
        for (const auto& [m, c] : p.coefficients()) {
            int weight = -shift;
            for (char ch : m) weight += ch == CRVariables::z ? 1 : 2;
            if (!h) h = weight;
            else if (*h != weight) return false;
        }
        return true;
    };
    if (!visit(Z, 1) || !visit(W, 2)) return std::nullopt;
    return h;
}

HoloField lie_bracket(const HoloField& X, const HoloField& Y) {
    return {"[" + X.name + "," + Y.name + "]", X.apply(Y.Z) - Y.apply(X.Z), X.apply(Y.W) - Y.apply(X.W)};
}

std::vector<HoloField> hol_basis() {
    const GaussPoly z = GaussPoly::variable(CRVariables::z), w = GaussPoly::variable(CRVariables::w);
    const GaussPoly i(GaussRational::i());
    return {
        {"T", GaussPoly(), GaussPoly(1)},
        {"H1", GaussPoly(1), GaussPoly(2) * i * z},
        {"H2", i, GaussPoly(2) * z},
        {"D", z, GaussPoly(2) * w},
        {"R", i * z, GaussPoly()},
        {"I1", w + GaussPoly(2) * i * z * z, GaussPoly(2) * i * z * w},
        {"I2", i * w + GaussPoly(2) * z * z, GaussPoly(2) * z * w},
        {"J", z * w, w * w},
    };
}

GaussPoly tangency_expression(const HoloField& X) {
    const GaussPoly z = GaussPoly::variable(CRVariables::z), zb = GaussPoly::variable(CRVariables::zb);
    const GaussPoly two_i(GaussRational(0, 2));
    return X.W - two_i * zb * X.Z - X.W.conjugate_to_bar_side() - two_i * z * X.Z.conjugate_to_bar_side();
}

GaussPoly sphere_equation() {
    return GaussPoly::variable(CRVariables::w) - GaussPoly::variable(CRVariables::wb) -
           GaussPoly(GaussRational(0, 2)) * GaussPoly::variable(CRVariables::z) * GaussPoly::variable(CRVariables::zb);
}

GaussPoly tangency_defect(const HoloField& X) {
    const GaussPoly w_on_sphere =
        GaussPoly::variable(CRVariables::wb) +
        GaussPoly(GaussRational(0, 2)) * GaussPoly::variable(CRVariables::z) * GaussPoly::variable(CRVariables::zb);
    return tangency_expression(X).substitute(
        [&](int k) { return k == CRVariables::w ? w_on_sphere : GaussPoly::variable(k); });
}

namespace {

// Real coordinates of a field: (re, im) of each coefficient of Z and W.
using Coords = std::map<std::pair<int, Monomial>, Rational>;

Coords real_coordinates(const HoloField& X) {
    Coords c;
    int slot = 0;
    for (const GaussPoly* p : {&X.Z, &X.W}) {
        for (const auto& [m, v] : p->coefficients()) {
            if (v.re != 0) c[{slot, m}] = v.re;
            if (v.im != 0) c[{slot + 1, m}] = v.im;
        }
        slot += 2;
    }
    return c;
}

}  // namespace

LieAlgebra commutator_table(const std::vector<HoloField>& fields) {
    const int n = static_cast<int>(fields.size());
    std::vector<Coords> coords;
    std::map<std::pair<int, Monomial>, std::size_t> row_of;
    auto register_rows = [&](const Coords& c) {
        for (const auto& [k, v] : c) row_of.try_emplace(k, row_of.size());
    };
    for (const auto& f : fields) {
        coords.push_back(real_coordinates(f));
        register_rows(coords.back());
    }
    std::vector<std::pair<std::pair<int, int>, Coords>> brackets;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            brackets.push_back({{a, b}, real_coordinates(lie_bracket(fields[a], fields[b]))});
            register_rows(brackets.back().second);
        }
    Matrix M(row_of.size(), n);
    for (int j = 0; j < n; ++j)
        for (const auto& [k, v] : coords[j]) M(row_of.at(k), j) = v;
    if (static_cast<int>(rank(M)) != n) throw std::invalid_argument("fields are not R-linearly independent");
    std::vector<std::string> names;
    for (const auto& f : fields) names.push_back(f.name);
    LieAlgebra g(names);
    for (const auto& [ab, c] : brackets) {
        Vec rhs(row_of.size());
        for (const auto& [k, v] : c) rhs[row_of.at(k)] = v;
        auto sol = solve(M, rhs);
        if (!sol)
            throw NotInSpan("[" + fields[ab.first].name + "," + fields[ab.second].name + "] leaves the span");
        if (!is_zero(*sol)) g.set_bracket(ab.first, ab.second, *sol);
    }
    return g;
}

bool HolReport::ok() const {
    for (const auto& [name, tangent] : tangency)
        if (!tangent) return false;
    return table_matches && grading_ok;
}

nlohmann::json HolReport::to_json() const {
    nlohmann::json j;
    j["tangency"] = nlohmann::json::object();
    for (const auto& [name, tangent] : tangency) j["tangency"][name] = tangent;
    j["table_matches"] = table_matches;
    j["table_mismatches"] = table_mismatches;
    j["grading_ok"] = grading_ok;
    j["ok"] = ok();
    return j;
}

HolReport verify_hol_heisenberg() {
    HolReport rep;
    auto basis = hol_basis();
    for (const auto& X : basis) rep.tangency.push_back({X.name, tangency_defect(X).is_zero()});
    LieAlgebra table = commutator_table(basis);
    GradedLieAlgebra ref = heisenberg_prolonged();
    for (int a = 0; a < table.dim(); ++a)
        for (int b = a + 1; b < table.dim(); ++b)
            if (table.basis_bracket(a, b) != ref.base().basis_bracket(a, b))
                rep.table_mismatches.push_back("[" + basis[a].name + "," + basis[b].name + "]");
    rep.table_matches = rep.table_mismatches.empty();
    rep.grading_ok = true;
    for (int a = 0; a < table.dim(); ++a)
        for (int b = a + 1; b < table.dim(); ++b) {
            auto h = lie_bracket(basis[a], basis[b]);
            if (h.Z.is_zero() && h.W.is_zero()) continue;
            auto hb = h.homogeneity();
            if (!hb || *hb != *basis[a].homogeneity() + *basis[b].homogeneity()) rep.grading_ok = false;
        }
    return rep;
}

}  // namespace cartanforge
