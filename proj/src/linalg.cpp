#include "cartanforge/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cartanforge {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::append_row(const Vec& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

Vec Matrix::operator*(const Vec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
}

bool Matrix::operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

RrefResult rref(const Matrix& input) {
    Matrix m = input;
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && m(p, c) == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < C; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < C; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, C);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < C; ++j) reduced(i, j) = m(i, j);
    return {std::move(reduced), std::move(pivots)};
}

namespace {

// Integer matrix with each row scaled by the lcm of its denominators.
std::vector<std::vector<mpz_class>> integer_rows(const Matrix& m) {
    std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return a;
}

// Bareiss elimination in place; returns the rank and the sign of the row permutation.
std::size_t bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols, int& sign) {
    const std::size_t R = a.size();
    mpz_class prev = 1;
    std::size_t r = 0;
    sign = 1;
    for (std::size_t c = 0; c < cols && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    auto a = integer_rows(m);
    int sign = 1;
    return bareiss(a, m.cols(), sign);
}

Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Rational scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= Rational(l);
    }
    auto a = integer_rows(m);
    int sign = 1;
    if (bareiss(a, n, sign) < n) return 0;
    Rational d(a[n - 1][n - 1]);
    d *= sign;
    return d / scale;
}

std::vector<Vec> nullspace(const Matrix& m) {
    RrefResult rr = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        Vec v(C);
        v[f] = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RrefResult rr = rref(aug);
    Vec x(m.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == m.cols()) return std::nullopt;
        x[rr.pivots[i]] = rr.reduced(i, m.cols());
    }
    return x;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace cartanforge
