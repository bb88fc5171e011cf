// Differential-polynomial calculus on jets of the graphing function phi(x,y,u)
// and the frame invariants Delta, Lambda_i, Upsilon, Phi_i with their H-derivatives.
#ifndef CARTANFORGE_JETCALC_HPP
#define CARTANFORGE_JETCALC_HPP

#include "cartanforge/rational.hpp"
#include "cartanforge/sparse_poly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cartanforge {

/// Highest jet order ever created.
inline constexpr int kMaxJetOrder = 6;
/// Number of jet variables phi_(a,b,c) with 1 <= a+b+c <= 6.
inline constexpr int kJetVariableCount = 83;

struct JetOrderOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegeneratePoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Partial derivative d^(a+b+c) phi / dx^a dy^b du^c.
struct JetVariable {
    int a = 0, b = 0, c = 0;
    int order() const { return a + b + c; }
    bool operator==(const JetVariable&) const = default;
};

/// Index of a jet variable in the fixed total order (by order, then x-heavy first).
int jet_index(const JetVariable& v);
JetVariable jet_variable(int index);
/// "phi_xxu" style name.
std::string jet_name(int index);

enum class Direction { x = 0, y = 1, u = 2 };

struct JetNames {
    static std::string name(int index) { return jet_name(index); }
};

/// Polynomial in the jet variables with exact rational coefficients.
using DiffPoly = SparsePoly<JetNames>;

/// The jet variable as a DiffPoly.
DiffPoly jet_var(const JetVariable& v);
/// Highest jet order of any variable present (0 for constants).
int max_jet_order(const DiffPoly& f);

/// Values of all jet variables at one point.
class JetPoint {
public:
    JetPoint() : values_(kJetVariableCount) {}
    const Rational& operator[](int index) const { return values_[index]; }
    Rational& operator[](int index) { return values_[index]; }
    const Rational& at(const JetVariable& v) const { return values_[jet_index(v)]; }
    Rational& at(const JetVariable& v) { return values_[jet_index(v)]; }
    const std::vector<Rational>& values() const { return values_; }
    bool operator==(const JetPoint&) const = default;

private:
    std::vector<Rational> values_;
};

/// num / (Delta^p Upsilon^q).
struct RationalJetExpr {
    DiffPoly num;
    unsigned p = 0;
    unsigned q = 0;

    RationalJetExpr() = default;
    RationalJetExpr(DiffPoly n, unsigned p_, unsigned q_) : num(std::move(n)), p(p_), q(q_) {}
    RationalJetExpr(const Rational& c) : num(c) {}  // NOLINT: implicit scalar embedding

    /// Same value over the larger denominator Delta^P Upsilon^Q.
    RationalJetExpr lifted(unsigned P, unsigned Q) const;
    /// Removes exact Delta and Upsilon factors from the numerator.
    RationalJetExpr normalized() const;

    RationalJetExpr operator-() const { return {-num, p, q}; }
    RationalJetExpr operator+(const RationalJetExpr& o) const;
    RationalJetExpr operator-(const RationalJetExpr& o) const;
    RationalJetExpr operator*(const RationalJetExpr& o) const;
    RationalJetExpr operator*(const Rational& s) const { return {num * s, p, q}; }

    /// Value equality (cross-multiplied numerators agree).
    bool equals(const RationalJetExpr& o) const;
    bool is_zero() const { return num.is_zero(); }
    /// Throws DegeneratePoint when Delta or Upsilon vanishes at the point.
    Rational evaluate(const JetPoint& pt) const;
};

struct Basics {
    DiffPoly Delta, Lambda1, Lambda2, Upsilon;
};

/// Delta = 1 + phi_u^2, Lambda_1 = phi_y - phi_x phi_u, Lambda_2 = -phi_x - phi_y phi_u, and Upsilon.
const Basics& build_basics();

/// Total derivative along x, y or u; throws JetOrderOverflow beyond order 6.
DiffPoly total_derivative(const DiffPoly& f, Direction dir);

/// H_i(f) = f_{x_i} + (Lambda_i / Delta) f_u, returned over Delta^(p+2) Upsilon^(q+1).
RationalJetExpr apply_H(int i, const RationalJetExpr& f);
/// T(f) = (Upsilon / (4 Delta^2)) f_u, returned over Delta^(p+3) Upsilon^q.
RationalJetExpr apply_T(const RationalJetExpr& f);

/// Numerator A_{i,k1,...} from the induction formulas; word = (i, k1, k2, k3), length 1..4.
DiffPoly build_A(const std::vector<int>& word);
/// H_{k_m}(...H_{k1}(Phi_i)) as A / (Delta^(2m+2) Upsilon^(m+1)); word = (k1, ..., k_m), m <= 3.
RationalJetExpr build_phi(const std::vector<int>& word, int i);

/// Sparse polynomial in x, y, u with rational coefficients.
struct Poly3 {
    std::map<std::array<int, 3>, Rational> terms;

    static Poly3 constant(const Rational& c);
    static Poly3 variable(int k);
    Poly3 operator+(const Poly3& o) const;
    Poly3 operator-(const Poly3& o) const;
    Poly3 operator*(const Poly3& o) const;
    Poly3 operator-() const;
    Poly3 pow(unsigned n) const;
    bool operator==(const Poly3& o) const { return terms == o.terms; }
    int degree() const;
    /// Exact value of d^(a+b+c)/dx^a dy^b du^c at the point.
    Rational derivative_at(int a, int b, int c, const std::array<Rational, 3>& point) const;
    void prune();
};

/// Exact partial derivatives of orders 1..6 of phi at the point.
JetPoint jets_of_polynomial(const Poly3& phi, const std::array<Rational, 3>& point);

/// Random jet point with every value a rational whose numerator and denominator are bounded.
JetPoint random_jet_point(RationalSampler& sampler);

struct VerificationMode {
    enum class Kind { schwartz_zippel, full_expansion } kind = Kind::schwartz_zippel;
    int n_points = 20;
    std::uint64_t seed = 1;

    static VerificationMode schwartz_zippel(int n, std::uint64_t seed) { return {Kind::schwartz_zippel, n, seed}; }
    static VerificationMode full_expansion() { return {Kind::full_expansion, 0, 0}; }
};

struct PointOutcome {
    JetPoint point;
    Rational value;  ///< numerator value; the identity holds at the point iff it is 0
};

struct VerificationReport {
    VerificationMode mode;
    bool all_zero = false;
    int skipped_degenerate = 0;
    std::vector<PointOutcome> points;  ///< empty under full expansion
    std::size_t numerator_terms = 0;
};

VerificationReport verify_identity(const RationalJetExpr& expr, const VerificationMode& mode);

}  // namespace cartanforge

#endif
