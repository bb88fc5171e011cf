#include "cartanforge/liealg.hpp"

#include <algorithm>
#include <fstream>

namespace cartanforge {

LieAlgebra::LieAlgebra(std::vector<std::string> names) : names_(std::move(names)) {}

LieAlgebra LieAlgebra::abelian(int dim) {
    std::vector<std::string> names;
    for (int k = 0; k < dim; ++k) names.push_back("x" + std::to_string(k + 1));
    return LieAlgebra(std::move(names));
}

int LieAlgebra::index(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::out_of_range("unknown basis label '" + name + "'");
    return static_cast<int>(it - names_.begin());
}

void LieAlgebra::set_bracket(int k1, int k2, const Vec& value) {
    if (k1 < 0 || k2 < 0 || k1 >= dim() || k2 >= dim()) throw DimensionMismatch("bracket index out of range");
    if (static_cast<int>(value.size()) != dim()) throw DimensionMismatch("bracket value has the wrong dimension");
    if (k1 == k2) {
        if (!is_zero(value)) throw std::invalid_argument("[x,x] must vanish");
        return;
    }
    Vec v = value;
    if (k1 > k2) {
        std::swap(k1, k2);
        for (auto& c : v) c = -c;
    }
    if (is_zero(v))
        table_.erase({k1, k2});
    else
        table_[{k1, k2}] = std::move(v);
}

void LieAlgebra::set_bracket(int k1, int k2, const std::vector<std::pair<int, Rational>>& value) {
    Vec v(dim());
    for (const auto& [s, c] : value) {
        if (s < 0 || s >= dim()) throw DimensionMismatch("bracket target out of range");
        v[s] += c;
    }
    set_bracket(k1, k2, v);
}

Vec LieAlgebra::basis_bracket(int k1, int k2) const {
    if (k1 < 0 || k2 < 0 || k1 >= dim() || k2 >= dim()) throw DimensionMismatch("bracket index out of range");
    Vec out(dim());
    if (k1 == k2) return out;
    const bool swapped = k1 > k2;
    auto it = table_.find(swapped ? std::make_pair(k2, k1) : std::make_pair(k1, k2));
    if (it == table_.end()) return out;
    out = it->second;
    if (swapped)
        for (auto& c : out) c = -c;
    return out;
}

Rational LieAlgebra::structure_constant(int k1, int k2, int s) const { return basis_bracket(k1, k2).at(s); }

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
        throw DimensionMismatch("bracket operands have the wrong dimension");
    Vec out(dim());
    for (const auto& [key, val] : table_) {
        const auto [k1, k2] = key;
        Rational w = x[k1] * y[k2] - x[k2] * y[k1];
        if (w == 0) continue;
        for (int s = 0; s < dim(); ++s)
            if (val[s] != 0) out[s] += w * val[s];
    }
    return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
    Matrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        Vec col = bracket(x, basis_vector(j));
        for (int i = 0; i < dim(); ++i) m(i, j) = col[i];
    }
    return m;
}

Vec LieAlgebra::basis_vector(int k) const {
    if (k < 0 || k >= dim()) throw DimensionMismatch("basis index out of range");
    Vec v(dim());
    v[k] = 1;
    return v;
}

bool ComplexStructure::squares_to_minus_identity() const {
    if (J.rows() != indices.size() || J.cols() != indices.size()) return false;
    Matrix sq = J * J;
    for (std::size_t i = 0; i < sq.rows(); ++i)
        for (std::size_t j = 0; j < sq.cols(); ++j)
            if (sq(i, j) != (i == j ? Rational(-1) : Rational(0))) return false;
    return true;
}

GradedLieAlgebra::GradedLieAlgebra(LieAlgebra base, std::vector<int> degrees, std::optional<ComplexStructure> J)
    : base_(std::move(base)), degrees_(std::move(degrees)), J_(std::move(J)) {
    if (static_cast<int>(degrees_.size()) != base_.dim()) throw DimensionMismatch("grading length differs from dimension");
}

int GradedLieAlgebra::min_degree() const { return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end()); }
int GradedLieAlgebra::max_degree() const { return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end()); }

std::vector<int> GradedLieAlgebra::indices_of_degree(int k) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (degrees_[i] == k) out.push_back(i);
    return out;
}

std::vector<int> GradedLieAlgebra::negative_indices() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (degrees_[i] < 0) out.push_back(i);
    return out;
}

ValidationReport validate(const LieAlgebra& algebra) {
    ValidationReport rep;
    const int n = algebra.dim();
    // Jacobiator J(k1,k2,k3) = [[x1,x2],x3] + [[x3,x1],x2] + [[x2,x3],x1]; it is alternating,
    // so k1 < k2 < k3 suffices.
    std::vector<std::vector<Vec>> br(n, std::vector<Vec>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) br[a][b] = algebra.basis_bracket(a, b);
    auto ad_right = [&](const Vec& v, int k) {
        Vec out(n);
        for (int s = 0; s < n; ++s)
            if (v[s] != 0)
                for (int l = 0; l < n; ++l)
                    if (br[s][k][l] != 0) out[l] += v[s] * br[s][k][l];
        return out;
    };
    for (int k1 = 0; k1 < n; ++k1)
        for (int k2 = k1 + 1; k2 < n; ++k2)
            for (int k3 = k2 + 1; k3 < n; ++k3) {
                Vec a = ad_right(br[k1][k2], k3), b = ad_right(br[k3][k1], k2), c = ad_right(br[k2][k3], k1);
                for (int l = 0; l < n; ++l)
                    if (a[l] + b[l] + c[l] != 0) rep.jacobi_violations.push_back({k1, k2, k3, l});
            }
    return rep;
}

ValidationReport validate(const GradedLieAlgebra& algebra) {
    ValidationReport rep = validate(algebra.base());
    for (const auto& [key, val] : algebra.base().table())
        for (int s = 0; s < algebra.dim(); ++s)
            if (val[s] != 0 && algebra.degree(s) != algebra.degree(key.first) + algebra.degree(key.second))
                rep.grading_violations.push_back({key.first, key.second, s});
    if (const auto& J = algebra.complex_structure()) {
        rep.complex_structure_ok = J->squares_to_minus_identity();
        for (int k : J->indices)
            if (k < 0 || k >= algebra.dim() || algebra.degree(k) != -1) rep.complex_structure_ok = false;
    }
    return rep;
}

namespace {

ComplexStructure standard_J(int h1, int h2) {
    ComplexStructure J;
    J.indices = {h1, h2};
    J.J = Matrix::from_rows({{0, -1}, {1, 0}}, 2);  // J(h1) = h2, J(h2) = -h1
    return J;
}

}  // namespace

GradedLieAlgebra heisenberg_prolonged() {
    LieAlgebra g({"t", "h1", "h2", "d", "r", "i1", "i2", "j"});
    enum { t, h1, h2, d, r, i1, i2, j };
    auto set = [&](int a, int b, std::vector<std::pair<int, Rational>> v) { g.set_bracket(a, b, v); };
    set(t, d, {{t, 2}});
    set(t, i1, {{h1, 1}});
    set(t, i2, {{h2, 1}});
    set(t, j, {{d, 1}});
    set(h1, h2, {{t, 4}});
    set(h1, d, {{h1, 1}});
    set(h1, r, {{h2, 1}});
    set(h1, i1, {{r, 6}});
    set(h1, i2, {{d, 2}});
    set(h1, j, {{i1, 1}});
    set(h2, d, {{h2, 1}});
    set(h2, r, {{h1, -1}});
    set(h2, i1, {{d, -2}});
    set(h2, i2, {{r, 6}});
    set(h2, j, {{i2, 1}});
    set(d, i1, {{i1, 1}});
    set(d, i2, {{i2, 1}});
    set(d, j, {{j, 2}});
    set(r, i1, {{i2, -1}});
    set(r, i2, {{i1, 1}});
    set(i1, i2, {{j, 4}});
    return GradedLieAlgebra(std::move(g), {-2, -1, -1, 0, 0, 1, 1, 2}, standard_J(h1, h2));
}

GradedLieAlgebra heisenberg_negative_part() {
    LieAlgebra m({"t", "h1", "h2"});
    m.set_bracket(1, 2, std::vector<std::pair<int, Rational>>{{0, 4}});
    return GradedLieAlgebra(std::move(m), {-2, -1, -1}, standard_J(1, 2));
}

Matrix killing_form(const LieAlgebra& algebra) {
    const int n = algebra.dim();
    std::vector<Matrix> ads;
    for (int k = 0; k < n; ++k) ads.push_back(algebra.ad(algebra.basis_vector(k)));
    Matrix B(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            Rational tr = 0;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) tr += ads[a](i, k) * ads[b](k, i);
            B(a, b) = tr;
            B(b, a) = tr;
        }
    return B;
}

bool killing_nondegenerate(const LieAlgebra& algebra) {
    return static_cast<int>(rank(killing_form(algebra))) == algebra.dim();
}

std::vector<Vec> killing_dual_basis(const LieAlgebra& algebra, const std::vector<int>& basis) {
    auto inv = inverse(killing_form(algebra));
    if (!inv) throw SingularKillingForm("Killing form is degenerate");
    std::vector<Vec> out;
    for (int k : basis) out.push_back(inv->col(k));  // B symmetric: B^{-1} e_k
    return out;
}

nlohmann::json to_json(const GradedLieAlgebra& algebra) {
    nlohmann::json j;
    j["dim"] = algebra.dim();
    j["names"] = algebra.base().names();
    j["grading"] = algebra.degrees();
    nlohmann::json br = nlohmann::json::array();
    for (const auto& [key, val] : algebra.base().table()) {
        nlohmann::json terms = nlohmann::json::array();
        for (int s = 0; s < algebra.dim(); ++s)
            if (val[s] != 0) terms.push_back({s, to_string(val[s])});
        br.push_back({key.first, key.second, terms});
    }
    j["brackets"] = br;
    if (const auto& J = algebra.complex_structure()) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < J->J.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < J->J.cols(); ++c) row.push_back(to_string(J->J(r, c)));
            rows.push_back(row);
        }
        j["J"] = {{"indices", J->indices}, {"matrix", rows}};
    }
    return j;
}

namespace {

Rational json_rational(const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
}

}  // namespace

GradedLieAlgebra graded_algebra_from_json(const nlohmann::json& j) {
    const int dim = j.at("dim").get<int>();
    std::vector<std::string> names;
    if (j.contains("names"))
        names = j.at("names").get<std::vector<std::string>>();
    else
        for (int k = 0; k < dim; ++k) names.push_back("x" + std::to_string(k + 1));
    if (static_cast<int>(names.size()) != dim) throw DimensionMismatch("names length differs from dim");
    LieAlgebra g(names);
    for (const auto& entry : j.value("brackets", nlohmann::json::array())) {
        std::vector<std::pair<int, Rational>> terms;
        for (const auto& t : entry.at(2)) terms.emplace_back(t.at(0).get<int>(), json_rational(t.at(1)));
        g.set_bracket(entry.at(0).get<int>(), entry.at(1).get<int>(), terms);
    }
    std::vector<int> degrees = j.contains("grading") ? j.at("grading").get<std::vector<int>>() : std::vector<int>(dim, 0);
    std::optional<ComplexStructure> J;
    if (j.contains("J")) {
        ComplexStructure cs;
        cs.indices = j.at("J").at("indices").get<std::vector<int>>();
        const auto& rows = j.at("J").at("matrix");
        cs.J = Matrix(rows.size(), rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != rows.size()) throw DimensionMismatch("J must be square");
            for (std::size_t c = 0; c < rows.size(); ++c) cs.J(r, c) = json_rational(rows[r][c]);
        }
        if (cs.indices.size() != rows.size()) throw DimensionMismatch("J indices differ from matrix size");
        J = std::move(cs);
    }
    return GradedLieAlgebra(std::move(g), std::move(degrees), std::move(J));
}

GradedLieAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open algebra file '" + path + "'");
    return graded_algebra_from_json(nlohmann::json::parse(in));
}

}  // namespace cartanforge
