// The explicit Cartan connection on P = M^3 x H: connection coefficients
// alpha, the dual coframe beta, lifted constant fields, their brackets and
// the curvature coefficients, together with the verification suites.
//
// Fiber polynomials are PhiPoly values: polynomials in (a,b,c,d,e) whose
// coefficients are polynomials in the Phi-words.  Quotients only ever have
// powers of rho = c^2 + d^2 as denominators (FiberRational).
#ifndef CARTANFORGE_CARTAN_HPP
#define CARTANFORGE_CARTAN_HPP

#include "cartanforge/liealg.hpp"
#include "cartanforge/phiword.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cartanforge {

/// Basis order of g and of the frame {T, H1, H2, D, R, I1, I2, J}.
enum Basis : int { kT = 0, kH1, kH2, kD, kR, kI1, kI2, kJ };
inline constexpr int kBasisSize = 8;
std::string_view basis_name(int k);
int basis_index(std::string_view name);
int basis_degree(int k);

using FiberPoly = PhiPoly;

struct SingularFrame : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class FiberRational {
public:
    FiberRational() = default;
    FiberRational(PhiPoly num, int rho_power = 0);  // NOLINT(google-explicit-constructor)

    static const PhiPoly& rho();

    const PhiPoly& numerator() const { return num_; }
    int rho_power() const { return k_; }
    bool is_zero() const { return num_.is_zero(); }
    /// Cancels common factors of rho by exact division.
    FiberRational normalized() const;
    /// True when the value is a polynomial (no rho left after normalization).
    bool is_polynomial() const { return normalized().k_ == 0; }

    FiberRational operator+(const FiberRational& o) const;
    FiberRational operator-(const FiberRational& o) const;
    FiberRational operator-() const { return {-num_, k_}; }
    FiberRational operator*(const FiberRational& o) const;
    FiberRational operator*(const Rational& s) const { return {num_ * s, k_}; }

    /// Throws DegeneratePoint when rho vanishes at the fiber point.
    Rational evaluate(AtomValues& atoms, const std::array<Rational, 5>& fiber) const;
    std::string to_string() const;

private:
    PhiPoly num_;
    int k_ = 0;
};

// ---------------------------------------------------------------------------
// Frame fields acting on fiber polynomials.

enum class Vertical { D, R, I1, I2, J };
/// Coefficients of d/da, ..., d/de in the vertical field.
const std::array<PhiPoly, 5>& vertical_coefficients(Vertical v);
PhiPoly vertical_apply(Vertical v, const PhiPoly& f);
/// Constant structure constants of the five vertical fields, decomposed in (D,R,I1,I2,J).
/// table[k][l][m] is the coefficient of the m-th field in [V_k, V_l].
std::array<std::array<std::array<Rational, 5>, 5>, 5> vertical_bracket_table();

enum class Horizontal { T, H1, H2 };
/// Applies T, H1 or H2 to the Phi-word coefficients; fiber monomials are untouched.
PhiPoly horizontal_apply(Horizontal w, const PhiPoly& f, int max_word = kMaxWordLength);

/// The frame field E_k (k in basis order) as a derivation of fiber rationals.
FiberRational frame_apply(int k, const FiberRational& f, int max_word = kMaxWordLength);
/// [E_k, E_l] as coefficients in the frame: [H1,H2] = 4T, [H_i,T] = Phi_i T,
/// vertical brackets from vertical_bracket_table(), horizontal and vertical commute.
std::array<PhiPoly, kBasisSize> frame_bracket(int k, int l);

// ---------------------------------------------------------------------------
// Connection coefficients.

/// alpha(row, col) for rows t, h1, h2 (0, 1, 2) and columns in basis order.
/// alpha(h1, t) and alpha(h2, t) are identically zero.
struct ConnectionCoefficients {
    std::array<std::array<PhiPoly, kBasisSize>, 3> alpha;
    const PhiPoly& operator()(int row, int col) const { return alpha.at(row).at(col); }
    PhiPoly& operator()(int row, int col) { return alpha.at(row).at(col); }
    /// "alpha_th1", "alpha_h2j", ...
    static std::string entry_name(int row, int col);
    /// The 22 (row, col) pairs carrying coefficients.
    static std::vector<std::pair<int, int>> entries();
};

/// Closed-form coefficients (the normative table with sign and coefficient corrections).
const ConnectionCoefficients& build_alpha();

/// delta_1 ... delta_22 (index 0 unused), functions of the horizontal variables only.
using DeltaTable = std::array<PhiPoly, 23>;
/// General solution of the equivariance system with the given deltas.
ConnectionCoefficients alpha_from_deltas(const DeltaTable& delta);
enum class Delta18Reading { uncorrected, corrected };
/// The deltas fixed by the homogeneity 0..4 normalizations.
DeltaTable determined_deltas(Delta18Reading reading = Delta18Reading::corrected);

/// Text of each closed-form entry, as parsed (for reports and diffs).
const std::map<std::string, std::string>& alpha_closed_form_text();

// ---------------------------------------------------------------------------
// Lifted fields, duality and curvature.

/// Components in the frame (T,H1,H2,D,R,I1,I2,J).
struct LiftedField {
    std::array<FiberRational, kBasisSize> c;
    bool is_zero() const;
};

/// X^_k = omega^{-1}(x_k): rows of alpha for t, h1, h2 and the vertical fields themselves.
LiftedField constant_field(const ConnectionCoefficients& alpha, int k);
/// X(f) for a lifted field X.
FiberRational apply_field(const LiftedField& X, const FiberRational& f, int max_word = kMaxWordLength);
LiftedField lifted_bracket(const LiftedField& X, const LiftedField& Y, int max_word = kMaxWordLength);

/// beta[k][l] with X^*_k(v) = sum_l beta[k][l] v_l, i.e. the transpose-inverse of the alpha matrix.
struct DualFrame {
    std::array<std::array<FiberRational, kBasisSize>, kBasisSize> beta;
    std::array<FiberRational, kBasisSize> components(const LiftedField& v) const;
};
DualFrame build_beta(const ConnectionCoefficients& alpha);

/// The 8x8 matrix of omega^{-1} (rows: constant fields, columns: frame).
std::array<std::array<PhiPoly, kBasisSize>, kBasisSize> connection_matrix(const ConnectionCoefficients& alpha);
/// Determinant by fraction-free elimination over the polynomial ring.
PhiPoly connection_matrix_det(const ConnectionCoefficients& alpha);

struct CurvatureCoefficient {
    int p1 = 0, p2 = 0, target = 0;
    int homogeneity = 0;
    FiberRational value;
    /// "kappa^{h1t}_i1"
    std::string name() const;
};

/// Homogeneity of kappa^{p1 p2}_target: deg(target) - deg(p1) - deg(p2).
int curvature_homogeneity(int p1, int p2, int target);

/// Lazily builds constant fields, brackets and curvature coefficients of one connection.
class CartanConnection {
public:
    explicit CartanConnection(ConnectionCoefficients alpha, int max_word = kMaxWordLength);

    const ConnectionCoefficients& alpha() const { return alpha_; }
    const DualFrame& beta() const { return beta_; }
    const LiftedField& field(int k) const { return fields_.at(k); }
    const LiftedField& bracket(int p1, int p2);
    /// kappa^k_{p1 p2} = c^k_{p1 p2} - X^*_k([X^_p1, X^_p2]) for pairs drawn from {t,h1,h2}.
    CurvatureCoefficient curvature(int p1, int p2, int target);
    /// All 24 coefficients for the pairs (h1,h2), (h1,t), (h2,t).
    std::vector<CurvatureCoefficient> all_curvatures();

private:
    ConnectionCoefficients alpha_;
    int max_word_;
    DualFrame beta_;
    std::array<LiftedField, kBasisSize> fields_;
    std::map<std::pair<int, int>, LiftedField> brackets_;
};

/// The three horizontal pairs in the order (h1,h2), (h1,t), (h2,t).
const std::vector<std::pair<int, int>>& curvature_pairs();

/// Essential curvatures Delta_1 and Delta_4 (symmetric forms).
struct EssentialCurvatures {
    PhiPoly delta1, delta4;
};
EssentialCurvatures essential_curvatures();

/// Closed forms of the four homogeneity-4 coefficients in Delta_1, Delta_4, c, d
/// (sign convention of curvature(): kappa = c - X^*([X^, X^])):
/// index 0: kappa^{h1t}_i1, 1: kappa^{h1t}_i2, 2: kappa^{h2t}_i1, 3: kappa^{h2t}_i2.
std::array<PhiPoly, 4> homogeneity4_closed_forms();

/// kappa^{h1t}_j and kappa^{h2t}_j from the homogeneity-4 coefficients through
/// the lifted fields H^_1, H^_2 (words up to length 4).
struct Homogeneity5 {
    FiberRational kappa_h1t_j, kappa_h2t_j;
};
Homogeneity5 curvature_h5(CartanConnection& connection);

// ---------------------------------------------------------------------------
// Sampling and verification.

/// A random point of P: order-`order` jets (via a series frame) and a fiber point with rho != 0.
class SamplePoint {
public:
    SamplePoint(RationalSampler& sampler, int order = 6);
    SamplePoint(std::unique_ptr<SeriesFrame> frame, const std::array<Rational, 5>& fiber);
    AtomValues& atoms() { return *atoms_; }
    SeriesFrame& frame() { return *frame_; }
    const std::array<Rational, 5>& fiber() const { return fiber_; }
    Rational operator()(const FiberRational& f) { return f.evaluate(*atoms_, fiber_); }

private:
    std::unique_ptr<SeriesFrame> frame_;
    std::unique_ptr<AtomValues> atoms_;
    std::array<Rational, 5> fiber_;
};

struct EquationStatus {
    int family = 0;             ///< 1..15: 3*(vertical index) + (row index) + 1
    std::string label;          ///< e.g. "[I1,H1]: r-component"
    std::string text;           ///< the equation as a fiber polynomial expression == 0
    bool holds = true;          ///< zero at every sampled point
    int points_checked = 0;
};

struct C1Report {
    std::vector<EquationStatus> equations;  ///< exactly 110 entries
    int trivial_skipped = 0;                ///< T-components of the h-rows
    bool all_hold() const;
};

/// The equivariance system: for x in {d,r,i1,i2,j} and y in {t,h1,h2},
/// [X^, Y^] - ([x,y])^ = 0 componentwise, checked at `points` seeded random points.
C1Report check_c1_system(const ConnectionCoefficients& alpha, int points, std::uint64_t seed);

}  // namespace cartanforge

#endif
