// Polynomials in the Phi-words H_{k_m}(...H_{k_1}(Phi_i)) and the fiber
// coordinates (a,b,c,d,e).  H_1, H_2 act by extending words, T acts as
// (1/4)[H_1, H_2]; the fiber coordinates are constants for them.
#ifndef CARTANFORGE_PHIWORD_HPP
#define CARTANFORGE_PHIWORD_HPP

#include "cartanforge/jetcalc.hpp"
#include "cartanforge/jetseries.hpp"
#include "cartanforge/sparse_poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cartanforge {

/// Longest word representable as an atom.
inline constexpr int kMaxWordLength = 4;
inline constexpr int kAtomCount = 62;
/// Variable indices of a, b, c, d, e.
inline constexpr int kFiberBase = 100;
enum class Fiber { a = 0, b, c, d, e };

struct PhiAtom {
    int base = 1;           ///< i in Phi_i
    std::vector<int> word;  ///< (k_1, ..., k_m), k_1 applied first
    bool operator==(const PhiAtom&) const = default;
};

int atom_index(const PhiAtom& atom);
PhiAtom atom_of(int index);
bool is_atom_index(int index);
bool is_fiber_index(int index);
/// Weight of an atom: 1 + word length (H has weight 1, Phi has weight 1).
int atom_weight(int index);

struct PhiNames {
    /// "Phi1", "H2(H1(Phi1))", or a fiber letter.
    static std::string name(int index);
};

using PhiPoly = SparsePoly<PhiNames>;

PhiPoly phi_atom(const std::vector<int>& word, int base);
PhiPoly fiber_var(Fiber v);

/// H_k as a derivation; throws JetOrderOverflow when a word would exceed `max_word`.
PhiPoly h_derivative(int k, const PhiPoly& f, int max_word = kMaxWordLength);
/// T = (1/4)(H_1 H_2 - H_2 H_1) as a derivation.
PhiPoly t_derivative(const PhiPoly& f, int max_word = kMaxWordLength);
/// d/da, ..., d/de.
PhiPoly fiber_partial(Fiber v, const PhiPoly& f);

/// Longest word occurring in f (0 when only Phi_i or no atoms occur).
int max_word_length(const PhiPoly& f);
/// Set of weights of the jet part of every monomial (fiber variables carry weight 0).
std::vector<int> weights(const PhiPoly& f);
bool has_fiber_variables(const PhiPoly& f);

/// Atom values supplied lazily from a series frame.
class AtomValues {
public:
    explicit AtomValues(SeriesFrame& frame) : frame_(&frame), known_(kAtomCount, false), values_(kAtomCount) {}
    const Rational& operator[](int index);
    SeriesFrame& frame() { return *frame_; }

private:
    SeriesFrame* frame_;
    std::vector<bool> known_;
    std::vector<Rational> values_;
};

/// Substitutes atom values and fiber values (a,b,c,d,e).
Rational evaluate(const PhiPoly& f, AtomValues& atoms, const std::array<Rational, 5>& fiber = {});
/// Substitutes only the atoms, leaving a polynomial in the fiber coordinates.
PhiPoly evaluate_atoms(const PhiPoly& f, AtomValues& atoms);

/// Fiber-free PhiPoly as a RationalJetExpr (words of length <= 3 only).
RationalJetExpr to_rational_jet_expr(const PhiPoly& f);

struct PhiParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses text such as "1/384*(H1(H1(H1(Phi1))) - 3*Phi2*H2(Phi2)) + a^2*c".
/// H1(...), H2(...), T(...) apply the derivations to the enclosed expression.
PhiPoly parse_phipoly(std::string_view text);

}  // namespace cartanforge

#endif
