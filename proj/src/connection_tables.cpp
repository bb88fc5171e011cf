// Closed-form connection coefficients, the general fiber-polynomial solution
// of the equivariance system in terms of delta_1..delta_22, and the deltas
// fixed by the curvature normalizations.
#include "cartanforge/cartan.hpp"

#include <mutex>

namespace cartanforge {

namespace {

// Frequently repeated brackets of the closed forms.
const std::string kS = "(H1(Phi1) + H2(Phi2))";
const std::string kP = "(-H2(H2(Phi2)) + H1(Phi1)*Phi2 - 5*H2(H1(Phi1)) + H2(Phi2)*Phi2 + 4*H1(H1(Phi2)))";
const std::string kQ = "(4*H2(H1(Phi2)) + H2(Phi2)*Phi1 - H1(H1(Phi1)) - 5*H1(H2(Phi2)) + H1(Phi1)*Phi1)";
const std::string kP1 = "(-H2(H2(Phi2)) + H2(Phi2)*Phi2 + H1(Phi1)*Phi2 + 7*H2(H1(Phi1)) - 8*H1(H1(Phi2)))";
const std::string kQ1 = "(-H1(Phi1)*Phi1 + 8*H2(H1(Phi2)) - 7*H1(H2(Phi2)) - H2(Phi2)*Phi1 + H1(H1(Phi1)))";
const std::string kR1 = "(-H2(Phi2)*Phi2 - H1(Phi1)*Phi2 + H2(H2(Phi2)) + 8*H1(H1(Phi2)) - 7*H2(H1(Phi1)))";
const std::string kK1 = "1/32*(-H1(H1(Phi1)) + H2(Phi2)*Phi1 - H1(H2(Phi2)) + H1(Phi1)*Phi1)";
const std::string kK2 = "1/32*(H2(H1(Phi1)) + H2(H2(Phi2)) - H2(Phi2)*Phi2 - H1(Phi1)*Phi2)";
const std::string kK3 = "1/32*(H2(Phi2)*Phi2 - H2(H1(Phi1)) - H2(H2(Phi2)) + H1(Phi1)*Phi2)";

// Coefficient of c^4 and d^4 in alpha_tj, equal to delta_18.  The uncorrected
// form has H_i(Phi_i^2) where the weight count requires H_i(Phi_i)^2.
const std::string kDelta18Uncorrected =
    "(1/64*Phi2*H2(H1(Phi1)) - 11/1536*H2(Phi2)*H1(Phi1) - 1/192*Phi1*H1(H1(Phi1)) - 11/3072*H1(Phi1^2)"
    " + 1/48*H1(H2(H1(Phi2))) - 7/384*H1(H1(H2(Phi2))) + 1/384*Phi2^2*H2(Phi2) - 1/48*Phi2*H1(H1(Phi2))"
    " - 1/192*Phi2*H2(H2(Phi2)) + 1/64*Phi1*H1(H2(Phi2)) + 1/384*Phi1^2*H1(Phi1) - 11/3072*H2(Phi2^2)"
    " + 1/384*Phi2^2*H1(Phi1) - 1/48*Phi1*H2(H1(Phi2)) + 1/48*H2(H1(H1(Phi2))) + 1/384*Phi1^2*H2(Phi2)"
    " + 1/384*H2(H2(H2(Phi2))) + 1/384*H1(H1(H1(Phi1))) - 7/384*H2(H2(H1(Phi1))))";
const std::string kDelta18Corrected =
    "(1/64*Phi2*H2(H1(Phi1)) - 11/1536*H2(Phi2)*H1(Phi1) - 1/192*Phi1*H1(H1(Phi1)) - 11/3072*H1(Phi1)^2"
    " + 1/48*H1(H2(H1(Phi2))) - 7/384*H1(H1(H2(Phi2))) + 1/384*Phi2^2*H2(Phi2) - 1/48*Phi2*H1(H1(Phi2))"
    " - 1/192*Phi2*H2(H2(Phi2)) + 1/64*Phi1*H1(H2(Phi2)) + 1/384*Phi1^2*H1(Phi1) - 11/3072*H2(Phi2)^2"
    " + 1/384*Phi2^2*H1(Phi1) - 1/48*Phi1*H2(H1(Phi2)) + 1/48*H2(H1(H1(Phi2))) + 1/384*Phi1^2*H2(Phi2)"
    " + 1/384*H2(H2(H2(Phi2))) + 1/384*H1(H1(H1(Phi1))) - 7/384*H2(H2(H1(Phi1))))";

std::map<std::string, std::string> make_closed_forms() {
    std::map<std::string, std::string> m;
    m["alpha_tt"] = "c^2 + d^2";
    m["alpha_th1"] = "b*d - a*c";
    m["alpha_th2"] = "-a*d - b*c";
    m["alpha_h1h1"] = "c";
    m["alpha_h1h2"] = "d";
    m["alpha_h2h1"] = "-d";
    m["alpha_h2h2"] = "c";
    m["alpha_h1d"] = "-2*b + 1/2*Phi1*c + 1/2*Phi2*d";
    m["alpha_h2d"] = "2*a + 1/2*Phi2*c - 1/2*Phi1*d";
    m["alpha_h1r"] = "-6*a - 1/2*Phi2*c + 1/2*Phi1*d";
    m["alpha_h2r"] = "-6*b + 1/2*Phi1*c + 1/2*Phi2*d";
    m["alpha_td"] = "1/2*(b*d - a*c)*Phi1 - 1/2*(b*c + a*d)*Phi2 - 2*e";
    m["alpha_tr"] = "1/32*" + kS + "*c^2 + 1/32*" + kS +
                    "*d^2 - 1/2*(a*d + b*c)*Phi1 + 1/2*(a*c - b*d)*Phi2 + 3*a^2 + 3*b^2";
    m["alpha_h1i1"] = "1/2*(b*d + a*c)*Phi1 - 1/2*(b*c - a*d)*Phi2 - 4*a*b - 2*e";
    m["alpha_h1i2"] = "1/32*" + kS + "*c^2 + 1/32*" + kS +
                      "*d^2 + 1/2*(b*c - a*d)*Phi1 + 1/2*(a*c + b*d)*Phi2 + 3*a^2 - b^2";
    m["alpha_h2i1"] = "-1/32*" + kS + "*c^2 - 1/32*" + kS +
                      "*d^2 + 1/2*(b*c - a*d)*Phi1 + 1/2*(a*c + b*d)*Phi2 + a^2 - 3*b^2";
    m["alpha_h2i2"] = "-1/2*(a*c + b*d)*Phi1 - 1/2*(a*d - b*c)*Phi2 + 4*a*b - 2*e";
    m["alpha_ti1"] = "1/192*" + kP + "*d^3 + 1/192*" + kQ + "*c^3 + 1/192*" + kQ + "*c*d^2 + 1/16*" + kS +
                     "*b*c^2 + 1/192*" + kP + "*c^2*d + 1/16*" + kS +
                     "*b*d^2 + 1/2*(-Phi1*a^2*c + 4*b^3 - Phi1*b^2*c + 4*b*a^2 - Phi2*b^2*d - Phi2*a^2*d)";
    m["alpha_ti2"] = "1/192*" + kP + "*c^3 - 1/16*" + kS + "*a*c^2 - 1/16*" + kS + "*a*d^2 + 1/192*" + kP +
                     "*c*d^2 - 1/192*" + kQ + "*c^2*d - 1/192*" + kQ +
                     "*d^3 - 1/2*(Phi2*a^2*c + Phi2*b^2*c - Phi1*b^2*d - Phi1*a^2*d + 4*a*b^2 + 4*a^3)";
    m["alpha_h1j"] = "1/96*" + kP1 + "*c^3 + 1/96*" + kQ1 + "*c^2*d + 1/96*" + kP1 + "*c*d^2 + 1/96*" + kQ1 +
                     "*d^3 - 1/8*" + kS + "*a*c^2 - 1/8*" + kS +
                     "*a*d^2 - Phi2*a^2*c - Phi2*b^2*c + 2*Phi1*c*e - 8*b*e + 2*Phi2*d*e + Phi1*b^2*d"
                     " + Phi1*a^2*d - 4*a*b^2 - 4*a^3";
    m["alpha_h2j"] = "1/96*" + kQ1 + "*c^3 - 1/8*" + kS + "*b*d^2 + 1/96*" + kR1 + "*d^3 - 1/8*" + kS +
                     "*b*c^2 + 1/96*" + kQ1 + "*c*d^2 + 1/96*" + kR1 +
                     "*c^2*d + Phi1*a^2*c - 2*Phi1*d*e + Phi2*b^2*d + Phi2*a^2*d + 8*a*e - 4*b^3"
                     " + Phi1*b^2*c - 4*a^2*b + 2*Phi2*c*e";
    m["alpha_tj"] =
        "3*a^4 + 3*b^4 - 4*e^2 - Phi1*a^2*b*c + c*a*Phi2*b^2 - Phi1*a*b^2*d - Phi2*a^2*b*d - 2*Phi2*b*c*e"
        " - 2*Phi1*a*c*e - 2*Phi2*a*d*e + 2*Phi1*b*d*e - Phi1*a^3*d + Phi2*a^3*c - Phi1*b^3*c - Phi2*b^3*d"
        " + 6*a^2*b^2 + 3/16*" + kS + "*(b^2*d^2 + a^2*d^2 + a^2*c^2 + b^2*c^2) + " + kDelta18Corrected +
        "*(c^4 + 2*c^2*d^2 + d^4) + " + kK1 + "*(b*c*d^2 + a*d^3 + b*c^3 + a*c^2*d) + " + kK2 +
        "*(a*c*d^2 + a*c^3) + " + kK3 + "*(b*d^3 + d*b*c^2)";
    return m;
}

struct TemplateTerm {
    const char* fiber;
    int delta;
};
struct TemplateEntry {
    const char* name;
    std::vector<TemplateTerm> terms;
    const char* constant;
};

const std::vector<TemplateEntry>& template_entries() {
    static const std::vector<TemplateEntry> entries = {
        {"alpha_tt", {{"c^2+d^2", 22}}, "0"},
        {"alpha_th1", {{"-(a*d+b*c)", 13}, {"a*c-b*d", 14}, {"c^2+d^2", 21}}, "0"},
        {"alpha_th2", {{"-(a*d+b*c)", 11}, {"a*c-b*d", 12}, {"c^2+d^2", 20}}, "0"},
        {"alpha_td", {{"-1/4*b*c-1/4*a*d", 1}, {"1/4*a*c-1/4*b*d", 2}, {"1/4*c^2+1/4*d^2", 15}}, "-2*e"},
        {"alpha_tr",
         {{"1/4*c^2+1/4*d^2", 4},
          {"1/2*a*c-1/2*b*d", 7},
          {"1/2*c^2+1/2*d^2", 9},
          {"-(1/2*a*d+1/2*b*c)", 10},
          {"1/2*c^2+1/2*d^2", 19}},
         "3*b^2+3*a^2"},
        {"alpha_ti1",
         {{"-(1/4*a^2*d+1/4*a*b*c)", 1},
          {"-1/4*a*b*d+1/4*a^2*c", 2},
          {"1/24*d^3+1/24*c^2*d", 3},
          {"1/8*d^2*b+1/8*b*c^2", 4},
          {"1/8*c^3+1/8*c*d^2", 5},
          {"1/8*a*c^2+1/8*a*d^2", 6},
          {"-1/2*d*b^2+1/2*b*c*a", 7},
          {"-(1/4*d*c*b+1/4*a*d^2)", 8},
          {"1/4*b*c^2+1/2*d^2*b-1/4*d*c*a", 9},
          {"-(1/2*b*d*a+1/2*c*b^2)", 10},
          {"1/4*d^2*a+1/4*a*c^2", 15},
          {"1/4*c^3+1/4*c*d^2", 16},
          {"1/4*c^2*d+1/4*d^3", 17},
          {"1/2*d^2*b+1/2*b*c^2", 19}},
         "2*a^2*b+2*b^3"},
        {"alpha_ti2",
         {{"-(1/4*b*d*a+1/4*c*b^2)", 1},
          {"-1/4*d*b^2+1/4*b*c*a", 2},
          {"1/24*c^3+1/24*c*d^2", 3},
          {"-1/8*a*c^2-1/8*a*d^2", 4},
          {"-1/8*c^2*d-1/8*d^3", 5},
          {"1/8*d^2*b+1/8*b*c^2", 6},
          {"-1/2*a^2*c+1/2*b*d*a", 7},
          {"-(1/4*d*c*a+1/4*b*c^2)", 8},
          {"-1/2*a*c^2+1/4*d*c*b-1/4*d^2*a", 9},
          {"1/2*a^2*d+1/2*b*c*a", 10},
          {"1/4*b*c^2+1/4*d^2*b", 15},
          {"-(1/4*c^2*d+1/4*d^3)", 16},
          {"1/4*c^3+1/4*c*d^2", 17},
          {"-1/2*a*c^2-1/2*d^2*a", 19}},
         "-2*a^3-2*a*b^2"},
        {"alpha_tj",
         {{"-(b*c*e+a*d*e)", 1},
          {"-e*d*b+e*c*a", 2},
          {"c*b^2*a+c*a^3-d*b^3-d*b*a^2", 7},
          {"-d^2*a*b+c^2*a*b-d*c*b^2+d*c*a^2", 8},
          {"-2*d*c*b*a+c^2*a^2+d^2*b^2", 9},
          {"-d*a^3-d*b^2*a-c*b^3-c*b*a^2", 10},
          {"e*d^2+e*c^2", 15},
          {"a*d^3+c^3*b+d*a*c^2+c*b*d^2", 16},
          {"-c*a*d^2+b*d^3+d*b*c^2-c^3*a", 17},
          {"d^4+c^4+2*d^2*c^2", 18},
          {"b^2*c^2+d^2*b^2+c^2*a^2+a^2*d^2", 19}},
         "6*a^2*b^2-4*e^2+3*a^4+3*b^4"},
        {"alpha_h1h1", {{"d", 13}, {"-c", 14}}, "0"},
        {"alpha_h1h2", {{"d", 11}, {"-c", 12}}, "0"},
        {"alpha_h1d", {{"1/4*d", 1}, {"-1/4*c", 2}}, "-2*b"},
        {"alpha_h1r", {{"-1/2*c", 7}, {"1/2*d", 10}}, "-6*a"},
        {"alpha_h1i1",
         {{"1/4*a*d", 1},
          {"-1/4*a*c", 2},
          {"-1/8*c^2-1/8*d^2", 6},
          {"-1/2*b*c", 7},
          {"1/4*d^2", 8},
          {"1/4*c*d", 9},
          {"1/2*b*d", 10}},
         "-4*a*b-2*e"},
        {"alpha_h1i2",
         {{"1/4*b*d", 1},
          {"-1/4*b*c", 2},
          {"-1/8*c^2-1/8*d^2", 4},
          {"1/2*a*c", 7},
          {"1/4*c*d", 8},
          {"-1/4*d^2", 9},
          {"-1/2*a*d", 10}},
         "3*a^2-b^2"},
        {"alpha_h1j",
         {{"d*e", 1},
          {"-c*e", 2},
          {"-1/6*c^3-1/6*c*d^2", 3},
          {"1/2*a*c^2+1/2*d^2*a", 4},
          {"1/2*d^3+1/2*c^2*d", 5},
          {"-1/2*d^2*b-1/2*b*c^2", 6},
          {"-a^2*c-c*b^2", 7},
          {"-d*c*a+d^2*b", 8},
          {"d*c*b+d^2*a", 9},
          {"a^2*d+d*b^2", 10}},
         "-8*b*e-4*a^3-4*a*b^2"},
        {"alpha_h2h1", {{"c", 13}, {"d", 14}}, "0"},
        {"alpha_h2h2", {{"c", 11}, {"d", 12}}, "0"},
        {"alpha_h2d", {{"1/4*c", 1}, {"1/4*d", 2}}, "2*a"},
        {"alpha_h2r", {{"1/2*d", 7}, {"1/2*c", 10}}, "-6*b"},
        {"alpha_h2i1",
         {{"1/4*a*c", 1},
          {"1/4*a*d", 2},
          {"1/8*c^2+1/8*d^2", 4},
          {"1/2*b*d", 7},
          {"1/4*c*d", 8},
          {"1/4*c^2", 9},
          {"1/2*b*c", 10}},
         "-3*b^2+a^2"},
        {"alpha_h2i2",
         {{"1/4*c*b", 1},
          {"1/4*b*d", 2},
          {"-1/8*c^2-1/8*d^2", 6},
          {"-1/2*a*d", 7},
          {"1/4*c^2", 8},
          {"-1/4*d*c", 9},
          {"-1/2*a*c", 10}},
         "4*a*b-2*e"},
        {"alpha_h2j",
         {{"c*e", 1},
          {"e*d", 2},
          {"1/6*d^3+1/6*c^2*d", 3},
          {"1/2*b*c^2+1/2*d^2*b", 4},
          {"1/2*c^3+1/2*c*d^2", 5},
          {"1/2*d^2*a+1/2*a*c^2", 6},
          {"d*b^2+d*a^2", 7},
          {"-a*c^2+d*c*b", 8},
          {"b*c^2+d*c*a", 9},
          {"c*a^2+c*b^2", 10}},
         "-4*a^2*b+8*a*e-4*b^3"},
    };
    return entries;
}

std::pair<int, int> parse_entry_name(const std::string& name) {
    for (auto [row, col] : ConnectionCoefficients::entries())
        if (ConnectionCoefficients::entry_name(row, col) == name) return {row, col};
    throw std::invalid_argument("unknown connection coefficient '" + name + "'");
}

}  // namespace

const std::map<std::string, std::string>& alpha_closed_form_text() {
    static const std::map<std::string, std::string> m = make_closed_forms();
    return m;
}

const ConnectionCoefficients& build_alpha() {
    static const ConnectionCoefficients alpha = [] {
        ConnectionCoefficients a;
        for (const auto& [name, text] : alpha_closed_form_text()) {
            auto [row, col] = parse_entry_name(name);
            a(row, col) = parse_phipoly(text);
        }
        return a;
    }();
    return alpha;
}

ConnectionCoefficients alpha_from_deltas(const DeltaTable& delta) {
    ConnectionCoefficients a;
    for (const auto& e : template_entries()) {
        auto [row, col] = parse_entry_name(e.name);
        PhiPoly v = parse_phipoly(e.constant);
        for (const auto& t : e.terms) v = v + parse_phipoly(t.fiber) * delta.at(t.delta);
        a(row, col) = std::move(v);
    }
    return a;
}

DeltaTable determined_deltas(Delta18Reading reading) {
    DeltaTable d;
    auto set = [&](int k, const std::string& text) { d[k] = parse_phipoly(text); };
    set(1, "2*Phi2");
    set(2, "-2*Phi1");
    set(3, "1/2*H1(H1(Phi2)) - 1/16*Phi2*H2(Phi2) - 7/16*H2(H1(Phi1)) + 1/16*H2(H2(Phi2)) - 1/16*Phi2*H1(Phi1)");
    set(4, "-1/4*H1(Phi1) - 1/4*H2(Phi2)");
    set(5,
        "-1/48*Phi1*H2(Phi2) - 7/48*H1(H2(Phi2)) + 1/48*H1(H1(Phi1)) - 1/48*Phi1*H1(Phi1) + 1/6*H2(H1(Phi2))");
    set(7, "Phi2");
    set(10, "Phi1");
    set(11, "1");
    set(14, "-1");
    set(16, "1/32*Phi1*H1(Phi1) - 1/32*H1(H1(Phi1)) + 1/32*Phi1*H2(Phi2) - 1/32*H1(H2(Phi2))");
    set(17, "1/32*Phi2*H1(Phi1) - 1/32*H2(H2(Phi2)) + 1/32*Phi2*H2(Phi2) - 1/32*H2(H1(Phi1))");
    set(18, reading == Delta18Reading::uncorrected ? kDelta18Uncorrected : kDelta18Corrected);
    set(19, "3/16*H1(Phi1) + 3/16*H2(Phi2)");
    set(22, "1");
    return d;
}

}  // namespace cartanforge
