#include "cartanforge/identities.hpp"

namespace cartanforge {

namespace {

NamedIdentity make(std::string name, std::string text) {
    PhiPoly e = parse_phipoly(text);
    return {std::move(name), std::move(text), std::move(e)};
}

}  // namespace

const NamedIdentity& commutation_identity() {
    static const NamedIdentity id = make("H2(Phi1)-H1(Phi2)", "H2(Phi1) - H1(Phi2)");
    return id;
}

const std::vector<NamedIdentity>& third_order_relations() {
    static const std::vector<NamedIdentity> rel = {
        make("I",
             "-H1(H2(H1(Phi2))) + 2*H2(H1(H1(Phi2))) - H2(H2(H1(Phi1)))"
             " - Phi2*H1(H2(Phi1)) + Phi2*H2(H1(Phi1))"),
        make("II",
             "-H2(H1(H1(Phi2))) + 2*H1(H2(H1(Phi2))) - H1(H1(H2(Phi2)))"
             " - Phi1*H2(H1(Phi2)) + Phi1*H1(H2(Phi2))"),
        make("III",
             "-H1(H1(H1(Phi2))) + 2*H1(H2(H1(Phi1))) - H2(H1(H1(Phi1)))"
             " + Phi1*H1(H1(Phi2)) - Phi1*H2(H1(Phi1))"),
        make("IV",
             "H2(H2(H1(Phi2))) - 2*H2(H1(H2(Phi2))) + H1(H2(H2(Phi2)))"
             " - Phi2*H2(H1(Phi2)) + Phi2*H1(H2(Phi2))"),
        make("V",
             "H1(H1(H2(Phi2))) - 3*H1(H2(H1(Phi2))) + 3*H2(H1(H1(Phi2))) - H2(H2(H1(Phi1)))"
             " - Phi2*H1(H2(Phi1)) + Phi2*H2(H1(Phi1)) - Phi1*H1(H2(Phi2)) + Phi1*H2(H1(Phi2))"),
    };
    return rel;
}

const std::vector<NamedIdentity>& corollary_identities() {
    static const std::vector<NamedIdentity> ids = {
        make("a",
             "-H2(H2(H1(Phi1))) + H2(H1(H1(Phi2))) + H1(H2(H1(Phi2))) - H1(H1(H2(Phi2)))"
             " + Phi1*H1(H2(Phi2)) - Phi1*H2(H1(Phi2)) - Phi2*H1(H1(Phi2)) + Phi2*H2(H1(Phi1))"),
        make("b",
             "H1(H2(H2(Phi2))) - 2*H2(H1(H2(Phi2))) + H2(H2(H1(Phi2)))"
             " - H2(H1(H1(Phi1))) + 2*H1(H2(H1(Phi1))) - H1(H1(H1(Phi2)))"
             " + Phi1*H1(H1(Phi2)) + Phi2*H1(H2(Phi2)) - Phi2*H2(H1(Phi2)) - Phi1*H2(H1(Phi1))"),
    };
    return ids;
}

const NamedIdentity& delta1_raw() {
    static const NamedIdentity id = make(
        "Delta1",
        "1/384*(-20*Phi2*H1(H1(Phi2)) - H1(Phi1)^2 - 2*Phi2^2*H1(Phi1) + 8*H1(H2(H1(Phi2))) + 2*Phi1^2*H1(Phi1)"
        " - 7*H1(H1(H2(Phi2))) - 4*Phi1*H2(H1(Phi2)) + H1(H1(H1(Phi1))) + Phi1*H1(H2(Phi2))"
        " + 23*Phi2*H2(H1(Phi1)) + H2(Phi2)^2 - 3*Phi1*H1(H1(Phi1)) + 3*Phi2*H2(H2(Phi2)) - 2*Phi2^2*H2(Phi2)"
        " - 17*H2(H2(H1(Phi1))) + 2*Phi1^2*H2(Phi2) + 16*H2(H1(H1(Phi2))) - H2(H2(H2(Phi2))))");
    return id;
}

const NamedIdentity& delta2() {
    static const NamedIdentity id = make(
        "Delta2",
        "1/384*(24*H1(H2(H1(Phi2))) - 24*Phi1*H2(H1(Phi2)) + 24*Phi1*H1(H2(Phi2)) + 24*H2(H1(H1(Phi2)))"
        " - 24*H1(H1(H2(Phi2))) - 24*Phi2*H1(H1(Phi2)) + 24*Phi2*H2(H1(Phi1)) - 24*H2(H2(H1(Phi1))))");
    return id;
}

const NamedIdentity& delta3() {
    static const NamedIdentity id = make(
        "Delta3",
        "1/384*(-2*H2(H1(H1(Phi1))) + 8*H1(H1(H1(Phi2))) - 8*Phi1*Phi2*H1(Phi1) - 8*Phi1*Phi2*H2(Phi2)"
        " - 2*H1(H2(H2(Phi2))) - 10*H2(H1(H2(Phi2))) - 16*Phi1*H1(H1(Phi2)) + 4*H1(Phi2)*H2(Phi2)"
        " + 6*Phi1*H2(H2(Phi2)) + 8*H2(H2(H1(Phi2))) + 22*Phi2*H1(H2(Phi2)) - 16*Phi2*H2(H1(Phi2))"
        " + 22*Phi1*H2(H1(Phi1)) - 10*H1(H2(H1(Phi1))) + 4*H1(Phi1)*H1(Phi2) + 6*Phi2*H1(H1(Phi1)))");
    return id;
}

const NamedIdentity& delta3_uncorrected() {
    static const NamedIdentity id = make(
        "Delta3 (uncorrected)",
        "1/384*(-2*H2(H1(H1(Phi1))) + 8*H1(H1(H1(Phi2))) - 2*Phi1*Phi2*H1(Phi1) - 8*Phi1*Phi2*H2(Phi2)"
        " - 2*H1(H2(H2(Phi2))) - 10*H2(H1(H2(Phi2))) - 16*Phi1*H1(H1(Phi2)) + 8*H1(Phi2)*H2(Phi2)"
        " + 6*Phi1*H2(H2(Phi2)) + 8*H2(H2(H1(Phi2))) + 22*Phi2*H1(H2(Phi2)) - 16*Phi2*H2(H1(Phi2))"
        " + 22*Phi1*H2(H1(Phi1)) - 10*H1(H2(H1(Phi1))) + 4*H1(Phi1)*H1(Phi2) + 6*Phi2*H1(H1(Phi1)))");
    return id;
}

const NamedIdentity& delta4_raw() {
    static const NamedIdentity id = make(
        "Delta4",
        "1/384*(4*Phi1*H1(H1(Phi2)) - 2*H1(Phi2)*H2(Phi2) - 2*H1(Phi1)*H1(Phi2) + 13*H2(H1(H2(Phi2)))"
        " - 3*H1(H2(H2(Phi2))) - 3*Phi2*H1(H1(Phi1)) - 15*Phi2*H1(H2(Phi2)) + 4*Phi1*Phi2*H1(Phi1)"
        " - 8*H2(H2(H1(Phi2))) - 3*H1(H2(H1(Phi1))) + 12*Phi2*H2(H1(Phi2)) - 3*Phi1*H2(H2(Phi2))"
        " - 7*Phi1*H2(H1(Phi1)) + 4*Phi1*Phi2*H2(Phi2) + 5*H2(H1(H1(Phi1))))");
    return id;
}

const NamedIdentity& delta1_symmetric() {
    static const NamedIdentity id = make(
        "Delta1 (symmetric)",
        "1/384*(H1(H1(H1(Phi1))) - H2(H2(H2(Phi2))) + 11*H1(H2(H1(Phi2))) - 11*H2(H1(H2(Phi1)))"
        " + 6*Phi2*H2(H1(Phi1)) - 6*Phi1*H1(H2(Phi2)) - 3*Phi2*H1(H1(Phi2)) + 3*Phi1*H2(H2(Phi1))"
        " - 3*Phi1*H1(H1(Phi1)) + 3*Phi2*H2(H2(Phi2)) - H1(Phi1)^2 + H2(Phi2)^2"
        " - 2*Phi2^2*H1(Phi1) + 2*Phi1^2*H2(Phi2) - 2*Phi2^2*H2(Phi2) + 2*Phi1^2*H1(Phi1))");
    return id;
}

const NamedIdentity& delta1_symmetric_uncorrected() {
    static const NamedIdentity id = make(
        "Delta1 (symmetric, uncorrected)",
        "1/384*(H1(H1(H1(Phi1))) - H2(H2(H2(Phi2))) + 11*H1(H2(H1(Phi2))) - 11*H2(H1(H2(Phi1)))"
        " + 6*Phi2*H2(H1(Phi1)) - 6*Phi1*H1(H2(Phi2)) - 3*Phi2*H1(H1(Phi2)) + 3*Phi1*H2(H2(Phi1))"
        " - 3*Phi1*H1(H1(Phi1)) + 3*Phi2*H2(H2(Phi2)) - 2*Phi1*H1(Phi1) + 2*Phi2*H2(Phi2)"
        " - 2*Phi2^2*H1(Phi1) + 2*Phi1^2*H2(Phi2) - 2*Phi2^2*H2(Phi2) + 2*Phi1^2*H1(Phi1))");
    return id;
}

const NamedIdentity& delta4_symmetric() {
    static const NamedIdentity id = make(
        "Delta4 (symmetric)",
        "1/384*(-3*H2(H1(H2(Phi2))) - 3*H1(H2(H1(Phi1))) + 5*H1(H2(H2(Phi2))) + 5*H2(H1(H1(Phi1)))"
        " + 4*Phi1*H1(H1(Phi2)) + 4*Phi2*H2(H1(Phi2)) - 3*Phi2*H1(H1(Phi1)) - 3*Phi1*H2(H2(Phi2))"
        " - 7*Phi2*H1(H2(Phi2)) - 7*Phi1*H2(H1(Phi1)) - 2*H1(Phi1)*H1(Phi2) - 2*H2(Phi2)*H2(Phi1)"
        " + 4*Phi1*Phi2*H1(Phi1) + 4*Phi1*Phi2*H2(Phi2))");
    return id;
}

}  // namespace cartanforge
