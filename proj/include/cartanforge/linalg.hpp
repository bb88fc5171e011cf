// Dense exact linear algebra over the rationals.
#ifndef CARTANFORGE_LINALG_HPP
#define CARTANFORGE_LINALG_HPP

#include "cartanforge/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cartanforge {

using Vec = std::vector<Rational>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void append_row(const Vec& r);

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    Matrix reduced;                  ///< reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots; ///< pivot column of each row of `reduced`
};

/// Reduced row echelon form over Q (pivots chosen left to right).
RrefResult rref(const Matrix& m);

/// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank(const Matrix& m);

/// Determinant by fraction-free (Bareiss) elimination; square input required.
Rational determinant(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in echelon-canonical form.
std::vector<Vec> nullspace(const Matrix& m);

/// Inverse, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// One solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

bool is_zero(const Vec& v);

}  // namespace cartanforge

#endif
