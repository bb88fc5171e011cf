#include "cartanforge/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace cartanforge {

namespace {

/// Increasing tuples of length `size` drawn from `pool` (kept in pool order).
std::vector<std::vector<int>> tuples(const std::vector<int>& pool, int size) {
    std::vector<std::vector<int>> out;
    if (size < 0 || size > static_cast<int>(pool.size())) return out;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    const int n = static_cast<int>(pool.size());
    while (true) {
        std::vector<int> t(size);
        for (int i = 0; i < size; ++i) t[i] = pool[idx[i]];
        out.push_back(std::move(t));
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

/// Sorts in place and returns the permutation sign, or 0 on a repeated entry.
int sort_with_sign(std::vector<int>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1]) return 0;
    return sign;
}

void axpy(Vec& y, const Rational& a, const Vec& x) {
    if (a == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i] != 0) y[i] += a * x[i];
}

/// Phi(v, x_{rest...}) with a vector in the first slot, expanded over g_-.
Vec evaluate_first_vector(const GradedLieAlgebra& algebra, const Cochain& phi, const Vec& v,
                          const std::vector<int>& rest) {
    Vec out(algebra.dim());
    for (int m : algebra.negative_indices()) {
        if (v[m] == 0) continue;
        std::vector<int> args{m};
        args.insert(args.end(), rest.begin(), rest.end());
        axpy(out, v[m], evaluate(algebra, phi, args));
    }
    return out;
}

Matrix columns_to_matrix(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cochain

void Cochain::add(std::vector<int> args, int value, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(args.size()) != level_) throw DimensionMismatch("cochain argument count differs from level");
    int sign = sort_with_sign(args);
    if (sign == 0) return;
    CochainKey key{std::move(args), value};
    Rational& slot = coeffs_[key];
    slot += sign > 0 ? c : -c;
    if (slot == 0) coeffs_.erase(key);
}

Rational Cochain::coefficient(const CochainKey& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Cochain Cochain::operator+(const Cochain& o) const {
    if (o.level_ != level_) throw DimensionMismatch("adding cochains of different levels");
    Cochain r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add(k.args, k.value, c);
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + o * Rational(-1); }

Cochain Cochain::operator*(const Rational& s) const {
    Cochain r(level_);
    if (s == 0) return r;
    for (const auto& [k, c] : coeffs_) r.coeffs_[k] = c * s;
    return r;
}

std::string Cochain::to_string(const GradedLieAlgebra& algebra) const {
    if (coeffs_.empty()) return "0";
    const auto& names = algebra.base().names();
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        Rational a = abs(c);
        if (c < 0) os << (first ? "-" : " - ");
        else if (!first) os << " + ";
        if (a != 1) os << cartanforge::to_string(a) << " ";
        for (std::size_t i = 0; i < k.args.size(); ++i) os << (i ? "^" : "") << names.at(k.args[i]) << "*";
        os << (k.args.empty() ? "" : "(x)") << names.at(k.value);
        first = false;
    }
    return os.str();
}

int homogeneity(const GradedLieAlgebra& algebra, const CochainKey& key) {
    int h = algebra.degree(key.value);
    for (int i : key.args) h -= algebra.degree(i);
    return h;
}

Vec evaluate(const GradedLieAlgebra& algebra, const Cochain& phi, const std::vector<int>& args) {
    Vec out(algebra.dim());
    std::vector<int> sorted = args;
    int sign = sort_with_sign(sorted);
    if (sign == 0) return out;
    auto it = phi.coefficients().lower_bound(CochainKey{sorted, 0});
    for (; it != phi.coefficients().end() && it->first.args == sorted; ++it)
        out[it->first.value] += sign > 0 ? it->second : -it->second;
    return out;
}

Cochain differential(const GradedLieAlgebra& algebra, const Cochain& phi) {
    const int l = phi.level();
    const LieAlgebra& g = algebra.base();
    Cochain out(l + 1);
    for (const auto& z : tuples(algebra.negative_indices(), l + 1)) {
        Vec value(algebra.dim());
        for (int i = 0; i <= l; ++i) {
            std::vector<int> rest;
            for (int m = 0; m <= l; ++m)
                if (m != i) rest.push_back(z[m]);
            Vec inner = evaluate(algebra, phi, rest);
            if (is_zero(inner)) continue;
            axpy(value, i % 2 == 0 ? Rational(1) : Rational(-1), g.bracket(g.basis_vector(z[i]), inner));
        }
        for (int i = 0; i <= l; ++i)
            for (int j = i + 1; j <= l; ++j) {
                Vec zij = g.basis_bracket(z[i], z[j]);
                if (is_zero(zij)) continue;
                std::vector<int> rest;
                for (int m = 0; m <= l; ++m)
                    if (m != i && m != j) rest.push_back(z[m]);
                axpy(value, (i + j) % 2 == 0 ? Rational(1) : Rational(-1),
                     evaluate_first_vector(algebra, phi, zij, rest));
            }
        for (int s = 0; s < algebra.dim(); ++s) out.add(z, s, value[s]);
    }
    return out;
}

Cochain codifferential(const GradedLieAlgebra& algebra, const Cochain& psi, const Rational& weight) {
    const int k = psi.level() - 1;
    if (k < 0) throw DimensionMismatch("codifferential of a 0-cochain");
    const LieAlgebra& g = algebra.base();
    const auto neg = algebra.negative_indices();
    const auto duals = killing_dual_basis(g, neg);
    Cochain out(k);
    for (const auto& z : tuples(neg, k)) {
        Vec value(algebra.dim());
        for (std::size_t i = 0; i < neg.size(); ++i) {
            std::vector<int> args{neg[i]};
            args.insert(args.end(), z.begin(), z.end());
            Vec inner = evaluate(algebra, psi, args);
            if (!is_zero(inner)) axpy(value, Rational(1), g.bracket(duals[i], inner));
            for (int j = 0; j < k; ++j) {
                Vec br = g.bracket(duals[i], g.basis_vector(z[j]));
                Vec proj(algebra.dim());
                for (int m : neg) proj[m] = br[m];
                if (is_zero(proj)) continue;
                std::vector<int> rest{neg[i]};
                for (int m = 0; m < k; ++m)
                    if (m != j) rest.push_back(z[m]);
                axpy(value, j % 2 == 0 ? weight : -weight, evaluate_first_vector(algebra, psi, proj, rest));
            }
        }
        for (int s = 0; s < algebra.dim(); ++s) out.add(z, s, value[s]);
    }
    return out;
}

Cochain homogeneous_component(const GradedLieAlgebra& algebra, const Cochain& phi, int h) {
    Cochain out(phi.level());
    for (const auto& [key, c] : phi.coefficients())
        if (homogeneity(algebra, key) == h) out.add(key.args, key.value, c);
    return out;
}

std::pair<int, int> homogeneity_range(const GradedLieAlgebra& algebra, int level) {
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& z : tuples(algebra.negative_indices(), level))
        for (int s = 0; s < algebra.dim(); ++s) {
            int h = homogeneity(algebra, CochainKey{z, s});
            if (!any) lo = hi = h;
            lo = std::min(lo, h);
            hi = std::max(hi, h);
            any = true;
        }
    return {lo, hi};
}

std::vector<CochainKey> cochain_basis(const GradedLieAlgebra& algebra, int level, int h) {
    std::vector<CochainKey> out;
    for (const auto& z : tuples(algebra.negative_indices(), level))
        for (int s = 0; s < algebra.dim(); ++s) {
            CochainKey key{z, s};
            if (homogeneity(algebra, key) == h) out.push_back(std::move(key));
        }
    std::sort(out.begin(), out.end());
    return out;
}

Cochain basis_cochain(int level, const CochainKey& key) {
    Cochain c(level);
    c.add(key.args, key.value, Rational(1));
    return c;
}

Vec coordinates(const GradedLieAlgebra& algebra, const Cochain& phi, int h) {
    auto basis = cochain_basis(algebra, phi.level(), h);
    Vec v(basis.size());
    std::size_t found = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        v[i] = phi.coefficient(basis[i]);
        if (v[i] != 0) ++found;
    }
    if (found != phi.coefficients().size())
        throw std::invalid_argument("cochain has components outside homogeneity " + std::to_string(h));
    return v;
}

Cochain from_coordinates(const GradedLieAlgebra& algebra, int level, int h, const Vec& v) {
    auto basis = cochain_basis(algebra, level, h);
    if (v.size() != basis.size()) throw DimensionMismatch("coordinate vector length differs from cochain basis");
    Cochain c(level);
    for (std::size_t i = 0; i < basis.size(); ++i) c.add(basis[i].args, basis[i].value, v[i]);
    return c;
}

Matrix differential_matrix(const GradedLieAlgebra& algebra, int level, int h) {
    auto src = cochain_basis(algebra, level, h);
    auto dst = cochain_basis(algebra, level + 1, h);
    std::vector<Vec> cols;
    for (const auto& key : src) cols.push_back(coordinates(algebra, differential(algebra, basis_cochain(level, key)), h));
    return columns_to_matrix(cols, dst.size());
}

Matrix codifferential_matrix(const GradedLieAlgebra& algebra, int level, int h, const Rational& weight) {
    auto src = cochain_basis(algebra, level, h);
    auto dst = cochain_basis(algebra, level - 1, h);
    std::vector<Vec> cols;
    for (const auto& key : src)
        cols.push_back(coordinates(algebra, codifferential(algebra, basis_cochain(level, key), weight), h));
    return columns_to_matrix(cols, dst.size());
}

Matrix cocycle_system(const GradedLieAlgebra& algebra, int h) {
    const LieAlgebra& g = algebra.base();
    const auto neg = algebra.negative_indices();
    const int n = static_cast<int>(neg.size());
    const int r = algebra.dim();
    auto basis = cochain_basis(algebra, 2, h);
    std::map<CochainKey, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
    // Positions 0..n-1 enumerate g_-; c(a, b, s) uses positions for a, b and an algebra index for s.
    auto c = [&](int a, int b, int s) { return g.structure_constant(neg[a], neg[b], s); };
    auto ck = [&](int a, int k, int s) { return g.structure_constant(neg[a], k, s); };
    std::map<int, int> pos;
    for (int a = 0; a < n; ++a) pos[neg[a]] = a;
    std::vector<Vec> rows;
    for (const auto& key : cochain_basis(algebra, 3, h)) {
        const int j1 = pos.at(key.args[0]), j2 = pos.at(key.args[1]), j3 = pos.at(key.args[2]);
        const int l = key.value;
        Vec row(basis.size());
        auto add = [&](int a, int b, int k, const Rational& v) {
            if (v == 0) return;
            auto it = col.find(CochainKey{{neg[a], neg[b]}, k});
            if (it != col.end()) row[it->second] += v;
        };
        for (int k = 0; k < r; ++k) {
            add(j2, j3, k, ck(j1, k, l));
            add(j1, j3, k, -ck(j2, k, l));
            add(j1, j2, k, ck(j3, k, l));
        }
        for (int i1 = 0; i1 < j3; ++i1) add(i1, j3, l, -c(j1, j2, neg[i1]));
        for (int i2 = j3 + 1; i2 < n; ++i2) add(j3, i2, l, c(j1, j2, neg[i2]));
        for (int i1 = 0; i1 < j2; ++i1) add(i1, j2, l, c(j1, j3, neg[i1]));
        for (int i2 = j2 + 1; i2 < n; ++i2) add(j2, i2, l, -c(j1, j3, neg[i2]));
        for (int i1 = 0; i1 < j1; ++i1) add(i1, j1, l, -c(j2, j3, neg[i1]));
        for (int i2 = j1 + 1; i2 < n; ++i2) add(j1, i2, l, c(j2, j3, neg[i2]));
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(rows, basis.size());
}

Matrix coboundary_system(const GradedLieAlgebra& algebra, int h) {
    const LieAlgebra& g = algebra.base();
    const auto neg = algebra.negative_indices();
    const int r = algebra.dim();
    auto rows_basis = cochain_basis(algebra, 2, h);
    auto cols_basis = cochain_basis(algebra, 1, h);
    std::map<CochainKey, std::size_t> col;
    for (std::size_t i = 0; i < cols_basis.size(); ++i) col[cols_basis[i]] = i;
    Matrix m(rows_basis.size(), cols_basis.size());
    for (std::size_t row = 0; row < rows_basis.size(); ++row) {
        int j1 = rows_basis[row].args[0], j2 = rows_basis[row].args[1], s = rows_basis[row].value;
        auto add = [&](int i, int k, const Rational& v) {
            if (v == 0) return;
            auto it = col.find(CochainKey{{i}, k});
            if (it != col.end()) m(row, it->second) += v;
        };
        for (int k = 0; k < r; ++k) {
            add(j2, k, -g.structure_constant(k, j1, s));
            add(j1, k, g.structure_constant(k, j2, s));
        }
        for (int i : neg) add(i, s, -g.structure_constant(j1, j2, i));
    }
    return m;
}

SpaceDims space_dims(const GradedLieAlgebra& algebra, int level, int h) {
    SpaceDims d;
    d.C = static_cast<int>(cochain_basis(algebra, level, h).size());
    if (d.C == 0) return d;
    d.Z = d.C - static_cast<int>(rank(differential_matrix(algebra, level, h)));
    d.B = level == 0 ? 0 : static_cast<int>(rank(differential_matrix(algebra, level - 1, h)));
    d.H = d.Z - d.B;
    return d;
}

std::vector<Cochain> h2_basis(const GradedLieAlgebra& algebra, int h) {
    auto Zb = nullspace(differential_matrix(algebra, 2, h));
    Matrix D1 = differential_matrix(algebra, 1, h);
    RrefResult B = rref(D1.transpose());
    std::vector<Vec> reduced;
    for (Vec v : Zb) {
        for (std::size_t r = 0; r < B.reduced.rows(); ++r) {
            Rational f = v[B.pivots[r]];
            if (f != 0) axpy(v, -f, B.reduced.row(r));
        }
        if (!is_zero(v)) reduced.push_back(std::move(v));
    }
    std::vector<Cochain> out;
    if (reduced.empty()) return out;
    RrefResult R = rref(Matrix::from_rows(reduced, reduced.front().size()));
    for (std::size_t r = 0; r < R.reduced.rows(); ++r) out.push_back(from_coordinates(algebra, 2, h, R.reduced.row(r)));
    return out;
}

bool same_span_modulo_coboundaries(const GradedLieAlgebra& algebra, int h, const std::vector<Cochain>& a,
                                   const std::vector<Cochain>& b) {
    Matrix D1 = differential_matrix(algebra, 1, h);
    const std::size_t width = cochain_basis(algebra, 2, h).size();
    std::vector<Vec> base;
    for (std::size_t j = 0; j < D1.cols(); ++j) base.push_back(D1.col(j));
    auto stacked_rank = [&](std::initializer_list<const std::vector<Cochain>*> extra) {
        std::vector<Vec> rows = base;
        for (const auto* list : extra)
            for (const auto& c : *list) rows.push_back(coordinates(algebra, c, h));
        return rank(Matrix::from_rows(rows, width));
    };
    std::size_t ra = stacked_rank({&a}), rb = stacked_rank({&b}), rab = stacked_rank({&a, &b});
    return ra == rab && rb == rab;
}

nlohmann::json CochainSpaceReport::to_json(const GradedLieAlgebra& algebra) const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& c : row.h_basis) basis.push_back({{"text", c.to_string(algebra)}, {"terms", cochain_to_json(c)}});
        rows_json.push_back({{"homogeneity", row.homogeneity},
                             {"dim_C", row.dims.C},
                             {"dim_Z", row.dims.Z},
                             {"dim_B", row.dims.B},
                             {"dim_H", row.dims.H},
                             {"H_basis", basis}});
    }
    return {{"level", level}, {"rows", rows_json}};
}

CochainSpaceReport cohomology_report(const GradedLieAlgebra& algebra, int level) {
    CochainSpaceReport report;
    report.level = level;
    auto [lo, hi] = homogeneity_range(algebra, level);
    for (int h = lo; h <= hi; ++h) {
        CochainSpaceReport::Row row;
        row.homogeneity = h;
        row.dims = space_dims(algebra, level, h);
        if (level == 2 && row.dims.H > 0) row.h_basis = h2_basis(algebra, h);
        report.rows.push_back(std::move(row));
    }
    return report;
}

nlohmann::json cochain_to_json(const Cochain& phi) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : phi.coefficients()) terms.push_back({k.args, k.value, cartanforge::to_string(c)});
    return {{"level", phi.level()}, {"terms", terms}};
}

Cochain cochain_from_json(const nlohmann::json& j) {
    Cochain c(j.at("level").get<int>());
    for (const auto& t : j.at("terms"))
        c.add(t.at(0).get<std::vector<int>>(), t.at(1).get<int>(), parse_rational(t.at(2).get<std::string>()));
    return c;
}

}  // namespace cartanforge
