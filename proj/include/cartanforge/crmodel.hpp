// The Heisenberg sphere Im w = |z|^2: its eight holomorphic infinitesimal
// automorphisms, the tangency identity on the complexification and the
// commutator table they generate.
#ifndef CARTANFORGE_CRMODEL_HPP
#define CARTANFORGE_CRMODEL_HPP

#include "cartanforge/liealg.hpp"
#include "cartanforge/sparse_poly.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cartanforge {

/// Exact element re + i im of Q(i).
struct GaussRational {
    Rational re, im;

    GaussRational() = default;
    GaussRational(const Rational& r, const Rational& i = 0) : re(r), im(i) {}  // NOLINT
    GaussRational(long r) : re(r) {}                                             // NOLINT
    static GaussRational i() { return {0, 1}; }

    GaussRational conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    GaussRational operator+(const GaussRational& o) const { return {re + o.re, im + o.im}; }
    GaussRational operator-(const GaussRational& o) const { return {re - o.re, im - o.im}; }
    GaussRational operator-() const { return {-re, -im}; }
    GaussRational operator*(const GaussRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    /// Throws std::domain_error on division by zero.
    GaussRational operator/(const GaussRational& o) const;
    bool operator==(const GaussRational& o) const = default;
    std::string to_string() const;
};

/// Variables z, w and the conjugate-side variables zb, wb of the complexification.
struct CRVariables {
    enum : int { z = 0, w = 1, zb = 2, wb = 3 };
    static std::string name(int index);
};
using RealCRPoly = SparsePoly<CRVariables>;

/// Polynomial over Q(i) in z, w, zb, wb, stored as re + i im.
class GaussPoly {
public:
    GaussPoly() = default;
    GaussPoly(const GaussRational& c);  // NOLINT
    GaussPoly(long c) : GaussPoly(GaussRational(c)) {}  // NOLINT
    GaussPoly(RealCRPoly re, RealCRPoly im) : re_(std::move(re)), im_(std::move(im)) {}
    static GaussPoly variable(int index);

    const RealCRPoly& re() const { return re_; }
    const RealCRPoly& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    GaussPoly operator+(const GaussPoly& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussPoly operator-(const GaussPoly& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussPoly operator-() const { return {-re_, -im_}; }
    GaussPoly operator*(const GaussPoly& o) const;
    bool operator==(const GaussPoly& o) const;

    GaussPoly derivative(int variable) const;
    /// Conjugates the coefficients and renames z -> zb, w -> wb.
    GaussPoly conjugate_to_bar_side() const;
    /// Replaces each variable by image(index).
    GaussPoly substitute(const std::function<GaussPoly(int)>& image) const;
    /// Coefficient of each monomial (as a sorted variable-index string).
    std::map<Monomial, GaussRational> coefficients() const;
    std::string to_string() const;

private:
    RealCRPoly re_, im_;
};

/// X = Z(z,w) d/dz + W(z,w) d/dw.
struct HoloField {
    std::string name;
    GaussPoly Z, W;
    /// X(f) = Z df/dz + W df/dw.
    GaussPoly apply(const GaussPoly& f) const;
    /// Weighted homogeneity with weights 1 for z and 2 for w, or nullopt when mixed.
    std::optional<int> homogeneity() const;
};

/// (X(Y.Z) - Y(X.Z)) d/dz + (X(Y.W) - Y(X.W)) d/dw.
HoloField lie_bracket(const HoloField& X, const HoloField& Y);

/// T, H1, H2, D, R, I1, I2, J with D = z d/dz + 2w d/dw.
std::vector<HoloField> hol_basis();

/// W(z,w) - 2i zb Z(z,w) - conj(W)(zb,wb) - 2i z conj(Z)(zb,wb), before restricting to the sphere.
GaussPoly tangency_expression(const HoloField& X);
/// tangency_expression with w replaced by wb + 2i z zb: a polynomial in z, zb, wb that
/// vanishes identically iff the real part of X is tangent to the sphere.
GaussPoly tangency_defect(const HoloField& X);
/// The defining function w - wb - 2i z zb of the complexified sphere.
GaussPoly sphere_equation();

struct NotInSpan : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structure constants over R of the span of `fields`: [fields[a], fields[b]] = sum_s c^s fields[s].
/// Throws NotInSpan when some bracket leaves the real span, std::invalid_argument when the fields
/// are not R-linearly independent.
LieAlgebra commutator_table(const std::vector<HoloField>& fields);

/// Every check of the model: tangency of the basis, the commutator table against
/// heisenberg_prolonged() and the grading of brackets.
struct HolReport {
    std::vector<std::pair<std::string, bool>> tangency;
    bool table_matches = false;
    std::vector<std::string> table_mismatches;
    bool grading_ok = false;
    bool ok() const;
    nlohmann::json to_json() const;
};
HolReport verify_hol_heisenberg();

}  // namespace cartanforge

#endif
