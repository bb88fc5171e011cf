#include "cartanforge/tanaka.hpp"

#include <algorithm>
#include <map>

namespace cartanforge {

namespace {

Rational at(const Vec& v, std::size_t i) { return i < v.size() ? v[i] : Rational(0); }

void axpy(Vec& y, const Rational& a, const Vec& x) {
    if (a == 0) return;
    if (y.size() < x.size()) y.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

// Working state while levels are built: degrees of all elements and, for each
// element w and negative basis vector x, the vector [w, x].
struct Builder {
    int n = 0;
    std::vector<int> degrees;
    std::vector<std::vector<Vec>> action;

    std::vector<int> of_degree(int k) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(degrees.size()); ++i)
            if (degrees[i] == k) out.push_back(i);
        return out;
    }
};

Matrix pad_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix M(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) M(i, j) = at(cols[j], i);
    return M;
}

}  // namespace

std::vector<int> Prolongation::graded_dims() const {
    std::vector<int> dims;
    int top = levels.empty() ? -1 : levels.back().level;
    for (int k = algebra.min_degree(); k <= top; ++k)
        dims.push_back(static_cast<int>(algebra.indices_of_degree(k).size()));
    if (levels.empty())
        for (int k = algebra.min_degree(); k < 0; ++k)
            dims.push_back(static_cast<int>(algebra.indices_of_degree(k).size()));
    return dims;
}

nlohmann::json Prolongation::to_json() const {
    nlohmann::json j;
    j["algebra"] = cartanforge::to_json(algebra);
    j["graded_dims"] = graded_dims();
    j["terminated"] = terminated;
    j["levels"] = nlohmann::json::array();
    const auto& names = algebra.base().names();
    auto negs = algebra.negative_indices();
    for (const auto& L : levels) {
        nlohmann::json lj;
        lj["level"] = L.level;
        lj["basis"] = nlohmann::json::array();
        for (std::size_t b = 0; b < L.basis.size(); ++b) {
            nlohmann::json action = nlohmann::json::object();
            for (std::size_t x = 0; x < negs.size(); ++x) {
                nlohmann::json image = nlohmann::json::object();
                for (std::size_t r = 0; r < L.basis[b].rows(); ++r)
                    if (L.basis[b](r, x) != 0) image[names[r]] = to_string(L.basis[b](r, x));
                action[names[negs[x]]] = image;
            }
            lj["basis"].push_back({{"name", names[L.indices[b]]}, {"action", action}});
        }
        j["levels"].push_back(lj);
    }
    return j;
}

Prolongation prolong(const GradedLieAlgebra& m, bool use_J, int max_level) {
    const int n = m.dim();
    if (n == 0) throw InvalidInput("prolongation needs a nonzero algebra");
    for (int k = 0; k < n; ++k)
        if (m.degree(k) >= 0) throw InvalidInput("prolongation input must be negatively graded");
    if (!validate(m).ok()) throw InvalidInput("input algebra fails validation");
    const ComplexStructure* J = nullptr;
    if (use_J && m.complex_structure()) {
        J = &*m.complex_structure();
        std::vector<int> minus_one = m.indices_of_degree(-1);
        std::vector<int> sorted = J->indices;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != minus_one || !J->squares_to_minus_identity())
            throw InvalidInput("J must be a complex structure on the whole degree -1 component");
    }

    Builder B;
    B.n = n;
    B.degrees = m.degrees();
    for (int w = 0; w < n; ++w) {
        std::vector<Vec> row;
        for (int x = 0; x < n; ++x) row.push_back(m.base().basis_bracket(w, x));
        B.action.push_back(std::move(row));
    }

    Prolongation result;
    for (int level = 0; level <= max_level; ++level) {
        // Unknown u(x, w): coefficient of w in d(x), deg w = deg x + level.
        std::vector<std::pair<int, int>> unknowns;
        for (int x = 0; x < n; ++x)
            for (int w : B.of_degree(m.degree(x) + level)) unknowns.push_back({x, w});
        const std::size_t total = B.degrees.size();
        std::vector<Vec> rows;
        auto emit = [&](const std::vector<Vec>& per_unknown) {
            for (std::size_t c = 0; c < total; ++c) {
                Vec r(unknowns.size());
                bool nonzero = false;
                for (std::size_t u = 0; u < unknowns.size(); ++u) {
                    r[u] = at(per_unknown[u], c);
                    nonzero = nonzero || r[u] != 0;
                }
                if (nonzero) rows.push_back(std::move(r));
            }
        };
        for (int y = 0; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                // d([y,z]) - [d(y), z] + [d(z), y]
                Vec yz = m.base().basis_bracket(y, z);
                std::vector<Vec> contrib(unknowns.size());
                for (std::size_t u = 0; u < unknowns.size(); ++u) {
                    auto [x, w] = unknowns[u];
                    Vec& v = contrib[u];
                    v.assign(total, 0);
                    v[w] += yz[x];
                    if (x == y) axpy(v, Rational(-1), B.action[w][z]);
                    if (x == z) axpy(v, Rational(1), B.action[w][y]);
                }
                emit(contrib);
            }
        if (level == 0 && J) {
            const int r = static_cast<int>(J->indices.size());
            for (int p = 0; p < r; ++p) {
                // d(J x_p) - J d(x_p) on the degree -1 component
                std::vector<Vec> contrib(unknowns.size());
                for (std::size_t u = 0; u < unknowns.size(); ++u) {
                    auto [x, w] = unknowns[u];
                    Vec& v = contrib[u];
                    v.assign(total, 0);
                    for (int q = 0; q < r; ++q)
                        if (J->indices[q] == x) v[w] += J->J(q, p);
                    if (x == J->indices[p]) {
                        int pos = static_cast<int>(std::find(J->indices.begin(), J->indices.end(), w) - J->indices.begin());
                        for (int q = 0; q < r; ++q) v[J->indices[q]] -= J->J(q, pos);
                    }
                }
                emit(contrib);
            }
        }
        std::vector<Vec> kernel;
        if (rows.empty()) {
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                Vec e(unknowns.size());
                e[u] = 1;
                kernel.push_back(std::move(e));
            }
        } else {
            kernel = nullspace(Matrix::from_rows(rows, unknowns.size()));
        }
        if (kernel.empty()) {
            result.terminated = true;
            break;
        }
        ProlongationLevel L;
        L.level = level;
        for (const auto& kv : kernel) {
            int idx = static_cast<int>(B.degrees.size());
            B.degrees.push_back(level);
            std::vector<Vec> act(n);
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                auto [x, w] = unknowns[u];
                if (kv[u] == 0) continue;
                if (act[x].size() <= static_cast<std::size_t>(w)) act[x].resize(w + 1);
                act[x][w] += kv[u];
            }
            B.action.push_back(std::move(act));
            L.indices.push_back(idx);
        }
        result.levels.push_back(std::move(L));
    }

    const int dim = static_cast<int>(B.degrees.size());
    std::vector<std::string> names = m.base().names();
    for (int k = n; k < dim; ++k) names.push_back("x" + std::to_string(k + 1));
    LieAlgebra g(names);
    for (const auto& [key, value] : m.base().table()) {
        Vec v = value;
        v.resize(dim);
        g.set_bracket(key.first, key.second, v);
    }
    for (int w = n; w < dim; ++w)
        for (int x = 0; x < n; ++x) {
            Vec v = B.action[w][x];
            v.resize(dim);
            if (!is_zero(v)) g.set_bracket(w, x, v);
        }
    const int top = result.levels.empty() ? -1 : result.levels.back().level;
    std::vector<std::pair<int, int>> pairs;
    for (int e = n; e < dim; ++e)
        for (int f = e + 1; f < dim; ++f) pairs.push_back({e, f});
    std::stable_sort(pairs.begin(), pairs.end(), [&](auto a, auto b) {
        return B.degrees[a.first] + B.degrees[a.second] < B.degrees[b.first] + B.degrees[b.second];
    });
    for (auto [e, f] : pairs) {
        const int L = B.degrees[e] + B.degrees[f];
        if (L > top) continue;
        // [e,f](x) = [[e,x],f] + [e,[f,x]], written as the column data of a level-L map.
        std::vector<int> targets = result.levels[L].indices;
        Vec image;
        std::vector<Vec> cols(targets.size());
        for (int x = 0; x < n; ++x) {
            Vec ex = g.basis_bracket(e, x), fx = g.basis_bracket(f, x);
            Vec val = g.bracket(ex, g.basis_vector(f));
            axpy(val, Rational(1), g.bracket(g.basis_vector(e), fx));
            val.resize(dim);
            image.insert(image.end(), val.begin(), val.end());
            for (std::size_t t = 0; t < targets.size(); ++t) {
                Vec tx = g.basis_bracket(targets[t], x);
                tx.resize(dim);
                cols[t].insert(cols[t].end(), tx.begin(), tx.end());
            }
        }
        if (is_zero(image)) continue;
        auto coeffs = solve(pad_columns(cols, image.size()), image);
        if (!coeffs) throw std::logic_error("bracket of prolongation elements is not in the expected level");
        Vec value(dim);
        for (std::size_t t = 0; t < targets.size(); ++t) value[targets[t]] = (*coeffs)[t];
        g.set_bracket(e, f, value);
    }

    std::optional<ComplexStructure> out_J;
    if (m.complex_structure()) out_J = m.complex_structure();
    result.algebra = GradedLieAlgebra(std::move(g), B.degrees, out_J);
    auto negs = result.algebra.negative_indices();
    for (auto& L : result.levels)
        for (int idx : L.indices) {
            std::vector<Vec> cols;
            for (int x : negs) cols.push_back(result.algebra.base().basis_bracket(idx, x));
            L.basis.push_back(pad_columns(cols, dim));
        }
    return result;
}

bool is_derivation_level(const GradedLieAlgebra& algebra, const ProlongationLevel& level) {
    const auto& g = algebra.base();
    auto negs = algebra.negative_indices();
    for (const auto& D : level.basis) {
        auto d = [&](const Vec& v) {
            Vec out(algebra.dim());
            for (std::size_t x = 0; x < negs.size(); ++x)
                if (at(v, negs[x]) != 0) axpy(out, v[negs[x]], D.col(x));
            return out;
        };
        for (std::size_t a = 0; a < negs.size(); ++a)
            for (std::size_t b = a + 1; b < negs.size(); ++b) {
                Vec y = g.basis_vector(negs[a]), z = g.basis_vector(negs[b]);
                Vec lhs = d(g.bracket(y, z));
                Vec rhs = g.bracket(D.col(a), z);
                axpy(rhs, Rational(1), g.bracket(y, D.col(b)));
                axpy(lhs, Rational(-1), rhs);
                if (!is_zero(lhs)) return false;
            }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Isomorphisms

namespace {

Rational power(const Rational& r, long k) {
    if (k < 0) return 1 / power(r, -k);
    Rational out = 1, base = r;
    while (k) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

// Column operations bringing M to column echelon form L = M U with U unimodular.
struct ColumnEchelon {
    std::vector<std::vector<long>> L;
    std::vector<std::vector<long>> U;
    std::vector<int> pivot_col;  ///< per row: pivot column or -1
};

ColumnEchelon column_echelon(std::vector<std::vector<long>> M, int n) {
    ColumnEchelon E;
    E.U.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) E.U[i][i] = 1;
    auto col_op = [&](int dst, int src, long q) {  // col_dst -= q col_src
        for (auto& row : M) row[dst] -= q * row[src];
        for (auto& row : E.U) row[dst] -= q * row[src];
    };
    auto col_swap = [&](int a, int b) {
        for (auto& row : M) std::swap(row[a], row[b]);
        for (auto& row : E.U) std::swap(row[a], row[b]);
    };
    int c = 0;
    for (auto& row : M) {
        int pivot = -1;
        while (c < n) {
            int best = -1;
            for (int k = c; k < n; ++k)
                if (row[k] != 0 && (best < 0 || std::abs(row[k]) < std::abs(row[best]))) best = k;
            if (best < 0) break;
            col_swap(c, best);
            bool done = true;
            for (int k = c + 1; k < n; ++k) {
                if (row[k] != 0) col_op(k, c, row[k] / row[c]);
                if (row[k] != 0) done = false;
            }
            if (done) {
                pivot = c++;
                break;
            }
        }
        E.pivot_col.push_back(pivot);
    }
    E.L = std::move(M);
    return E;
}

std::optional<std::vector<long>> solve_integer(const ColumnEchelon& E, const std::vector<long>& b, int n) {
    std::vector<long> w(n, 0);
    for (std::size_t i = 0; i < E.L.size(); ++i) {
        long acc = 0;
        int p = E.pivot_col[i];
        for (int k = 0; k < n; ++k)
            if (k != p) acc += E.L[i][k] * w[k];
        long rest = b[i] - acc;
        if (p < 0) {
            if (rest != 0) return std::nullopt;
            continue;
        }
        if (rest % E.L[i][p] != 0) return std::nullopt;
        w[p] = rest / E.L[i][p];
    }
    std::vector<long> v(n, 0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) v[j] += E.U[j][k] * w[k];
    return v;
}

std::optional<std::vector<int>> solve_mod2(std::vector<std::vector<long>> M, std::vector<long> b, int n) {
    std::vector<std::vector<int>> A;
    for (std::size_t i = 0; i < M.size(); ++i) {
        std::vector<int> r(n + 1);
        for (int k = 0; k < n; ++k) r[k] = static_cast<int>(((M[i][k] % 2) + 2) % 2);
        r[n] = static_cast<int>(((b[i] % 2) + 2) % 2);
        A.push_back(std::move(r));
    }
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int c = 0; c < n && row < A.size(); ++c) {
        std::size_t p = row;
        while (p < A.size() && !A[p][c]) ++p;
        if (p == A.size()) continue;
        std::swap(A[p], A[row]);
        for (std::size_t i = 0; i < A.size(); ++i)
            if (i != row && A[i][c])
                for (int k = 0; k <= n; ++k) A[i][k] ^= A[row][k];
        pivots.push_back(c);
        ++row;
    }
    for (std::size_t i = row; i < A.size(); ++i)
        if (A[i][n]) return std::nullopt;
    std::vector<int> x(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = A[i][n];
    return x;
}

// Pairwise coprime factors covering every number in `values`.
std::vector<mpz_class> coprime_base(const std::vector<mpz_class>& values) {
    std::vector<mpz_class> base;
    for (mpz_class v : values) {
        for (long p = 2; p < 1000 && v > 1; ++p)
            if (v % p == 0) {
                if (std::find(base.begin(), base.end(), mpz_class(p)) == base.end()) base.push_back(p);
                while (v % p == 0) v /= p;
            }
        if (v <= 1) continue;
        std::vector<mpz_class> pending{v};
        while (!pending.empty()) {
            mpz_class x = pending.back();
            pending.pop_back();
            if (x <= 1) continue;
            bool split = false;
            for (auto& q : base) {
                mpz_class g = gcd(x, q);
                if (g > 1 && g != q) {
                    mpz_class other = q / g;
                    q = g;
                    pending.push_back(other);
                    pending.push_back(x);
                    split = true;
                    break;
                }
                if (g == q) {
                    while (x % q == 0) x /= q;
                    pending.push_back(x);
                    split = true;
                    break;
                }
            }
            if (!split) base.push_back(x);
        }
    }
    return base;
}

long valuation(mpz_class v, const mpz_class& p) {
    long k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

// Solves prod_i s_i^{e_i} = r over nonzero rationals, prime by prime and for the sign.
std::optional<std::vector<Rational>> solve_monomial(const std::vector<std::pair<std::vector<long>, Rational>>& eqs, int nvars) {
    std::vector<std::vector<long>> M;
    std::vector<mpz_class> magnitudes;
    for (const auto& [e, r] : eqs) {
        M.push_back(e);
        magnitudes.push_back(abs(r.get_num()));
        magnitudes.push_back(r.get_den());
    }
    std::vector<long> sign_rhs;
    for (const auto& [e, r] : eqs) sign_rhs.push_back(r < 0 ? 1 : 0);
    auto signs = solve_mod2(M, sign_rhs, nvars);
    if (!signs) return std::nullopt;
    std::vector<Rational> s(nvars);
    for (int j = 0; j < nvars; ++j) s[j] = (*signs)[j] ? -1 : 1;
    ColumnEchelon E = column_echelon(M, nvars);
    for (const auto& p : coprime_base(magnitudes)) {
        std::vector<long> b;
        for (const auto& [e, r] : eqs) b.push_back(valuation(abs(r.get_num()), p) - valuation(r.get_den(), p));
        auto v = solve_integer(E, b, nvars);
        if (!v) return std::nullopt;
        for (int j = 0; j < nvars; ++j) s[j] *= power(Rational(p), (*v)[j]);
    }
    return s;
}

std::size_t span_dim(const std::vector<Vec>& vs, std::size_t n) {
    if (vs.empty()) return 0;
    return rank(Matrix::from_rows(vs, n));
}

// Graded invariants: per degree, dims of the derived algebra, center, and of the
// terms of the lower central series.
std::map<std::string, std::vector<std::size_t>> invariants(const GradedLieAlgebra& A) {
    const LieAlgebra& g = A.base();
    std::map<std::string, std::vector<std::size_t>> inv;
    for (int k = A.min_degree(); k <= A.max_degree(); ++k) inv["dims"].push_back(A.indices_of_degree(k).size());
    std::vector<Vec> current;
    for (int k = 0; k < g.dim(); ++k) current.push_back(g.basis_vector(k));
    for (int step = 0; step < 4; ++step) {
        std::vector<Vec> next;
        for (int a = 0; a < g.dim(); ++a)
            for (const auto& v : current) {
                Vec w = g.bracket(g.basis_vector(a), v);
                if (!is_zero(w)) next.push_back(std::move(w));
            }
        inv["lower_central"].push_back(span_dim(next, g.dim()));
        current.clear();
        if (!next.empty()) {
            auto R = rref(Matrix::from_rows(next, g.dim()));
            for (std::size_t i = 0; i < R.reduced.rows(); ++i) current.push_back(R.reduced.row(i));
        }
    }
    Matrix ads(g.dim() * g.dim(), g.dim());
    for (int a = 0; a < g.dim(); ++a) {
        Matrix ad = g.ad(g.basis_vector(a));
        for (int i = 0; i < g.dim(); ++i)
            for (int j = 0; j < g.dim(); ++j) ads(a * g.dim() + i, j) = ad(i, j);
    }
    inv["center"].push_back(nullspace(ads).size());
    inv["killing_rank"].push_back(rank(killing_form(g)));
    return inv;
}

}  // namespace

bool is_graded_isomorphism(const GradedLieAlgebra& A, const GradedLieAlgebra& B, const Matrix& map) {
    const int n = A.dim();
    if (B.dim() != n || static_cast<int>(map.rows()) != n || static_cast<int>(map.cols()) != n) return false;
    if (static_cast<int>(rank(map)) != n) return false;
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r)
            if (map(r, i) != 0 && B.degree(r) != A.degree(i)) return false;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Vec lhs = map * A.base().basis_bracket(a, b);
            Vec rhs = B.base().bracket(map.col(a), map.col(b));
            if (lhs != rhs) return false;
        }
    return true;
}

IsomorphismResult check_isomorphic_to(const GradedLieAlgebra& A, const GradedLieAlgebra& B) {
    IsomorphismResult res;
    const int n = A.dim();
    if (B.dim() != n) {
        res.status = IsomorphismResult::Status::NotIsomorphic;
        res.detail = "dimensions differ";
        return res;
    }
    auto invA = invariants(A), invB = invariants(B);
    for (const auto& [name, values] : invA)
        if (invB[name] != values) {
            res.status = IsomorphismResult::Status::NotIsomorphic;
            res.detail = "invariant '" + name + "' differs";
            return res;
        }

    // Candidate images: perm[i] = basis index of B matched with basis index i of A.
    std::map<int, std::vector<int>> blocksA, blocksB;
    for (int i = 0; i < n; ++i) blocksA[A.degree(i)].push_back(i);
    for (int i = 0; i < n; ++i) blocksB[B.degree(i)].push_back(i);
    std::vector<int> degrees;
    std::vector<std::vector<int>> current;
    for (auto& [k, idx] : blocksA) {
        degrees.push_back(k);
        current.push_back(blocksB[k]);
    }
    const LieAlgebra& ga = A.base();
    const LieAlgebra& gb = B.base();
    long attempts = 0;
    const long limit = 200000;
    std::vector<int> perm(n);
    auto try_perm = [&](bool unit_on_fixed_negatives) -> std::optional<Matrix> {
        std::vector<std::pair<std::vector<long>, Rational>> eqs;
        if (unit_on_fixed_negatives)
            for (int i = 0; i < n; ++i)
                if (A.degree(i) < 0 && perm[i] == i) {
                    std::vector<long> e(n, 0);
                    e[i] = 1;
                    eqs.push_back({std::move(e), Rational(1)});
                }
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                Vec va = ga.basis_bracket(a, b);
                Vec vb = gb.basis_bracket(perm[a], perm[b]);
                for (int s = 0; s < n; ++s) {
                    const Rational& ca = va[s];
                    const Rational& cb = vb[perm[s]];
                    if ((ca == 0) != (cb == 0)) return std::nullopt;
                    if (ca == 0) continue;
                    // s_a s_b cb = ca s_s
                    std::vector<long> e(n, 0);
                    e[a] += 1;
                    e[b] += 1;
                    e[s] -= 1;
                    eqs.push_back({std::move(e), ca / cb});
                }
            }
        auto scales = solve_monomial(eqs, n);
        if (!scales) return std::nullopt;
        Matrix M(n, n);
        for (int i = 0; i < n; ++i) M(perm[i], i) = (*scales)[i];
        if (!is_graded_isomorphism(A, B, M)) return std::nullopt;
        return M;
    };
    // Preference: more fixed basis vectors in the lowest degrees, then unit scales there.
    std::vector<int> best_score;
    std::optional<Matrix> best;
    auto score = [&](bool unit) {
        std::vector<int> sc;
        for (int k : degrees) {
            int fixed = 0;
            for (int i : blocksA[k]) fixed += perm[i] == i;
            sc.push_back(fixed);
        }
        sc.push_back(unit ? 1 : 0);
        return sc;
    };
    while (true) {
        for (std::size_t blk = 0; blk < degrees.size(); ++blk) {
            const auto& idx = blocksA[degrees[blk]];
            for (std::size_t t = 0; t < idx.size(); ++t) perm[idx[t]] = current[blk][t];
        }
        for (bool unit : {true, false}) {
            if (auto M = try_perm(unit)) {
                auto sc = score(unit);
                if (!best || sc > best_score) {
                    best = std::move(M);
                    best_score = sc;
                }
                break;
            }
        }
        if (++attempts >= limit) break;
        std::size_t blk = 0;
        while (blk < current.size() && !std::next_permutation(current[blk].begin(), current[blk].end())) ++blk;
        if (blk == current.size()) break;
    }
    if (best) {
        res.status = IsomorphismResult::Status::Found;
        res.map = *best;
        res.detail = "diagonal graded isomorphism up to permutation within degrees";
        return res;
    }
    res.status = IsomorphismResult::Status::Undetermined;
    res.detail = attempts >= limit ? "search limit reached; graded invariants agree"
                                   : "no monomial graded isomorphism; graded invariants agree";
    return res;
}

nlohmann::json IsomorphismResult::to_json(const GradedLieAlgebra& A, const GradedLieAlgebra& B) const {
    nlohmann::json j;
    j["status"] = status == Status::Found ? "found" : status == Status::NotIsomorphic ? "not_isomorphic" : "undetermined";
    j["detail"] = detail;
    if (status == Status::Found) {
        nlohmann::json images = nlohmann::json::object();
        for (int i = 0; i < A.dim(); ++i) {
            nlohmann::json img = nlohmann::json::object();
            for (int r = 0; r < B.dim(); ++r)
                if (map(r, i) != 0) img[B.base().names()[r]] = to_string(map(r, i));
            images[A.base().names()[i]] = img;
        }
        j["map"] = images;
    }
    return j;
}

}  // namespace cartanforge
