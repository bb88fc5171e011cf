// Named jet-level identities and curvature functions written in Phi-words.
#ifndef CARTANFORGE_IDENTITIES_HPP
#define CARTANFORGE_IDENTITIES_HPP

#include "cartanforge/phiword.hpp"

#include <string>
#include <vector>

namespace cartanforge {

struct NamedIdentity {
    std::string name;
    std::string text;  ///< transcription as parsed by parse_phipoly
    PhiPoly expr;
};

/// H_2(Phi_1) - H_1(Phi_2).
const NamedIdentity& commutation_identity();
/// The five third-order relations I..V.
const std::vector<NamedIdentity>& third_order_relations();
/// The two quantities a and b that vanish identically.
const std::vector<NamedIdentity>& corollary_identities();

/// Homogeneity-4 auxiliary functions in their first (unsymmetrized) form.
const NamedIdentity& delta1_raw();
const NamedIdentity& delta2();
const NamedIdentity& delta3();
const NamedIdentity& delta4_raw();
/// Symmetrized forms of Delta_1 and Delta_4.
const NamedIdentity& delta1_symmetric();
const NamedIdentity& delta4_symmetric();

/// Delta_3 and the symmetrized Delta_1 in their uncorrected form,
/// kept for comparison; these are not identities.
const NamedIdentity& delta3_uncorrected();
const NamedIdentity& delta1_symmetric_uncorrected();

}  // namespace cartanforge

#endif
