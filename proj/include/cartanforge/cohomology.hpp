// Chevalley-Eilenberg cochains C^l(g_-, g) of a graded Lie algebra,
// the differential, the codifferential, homogeneous splitting and the
// dimensions of Z^2, B^2, H^2 per homogeneity.
#ifndef CARTANFORGE_COHOMOLOGY_HPP
#define CARTANFORGE_COHOMOLOGY_HPP

#include "cartanforge/liealg.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cartanforge {

/// Basis element x*_{i1} ^ ... ^ x*_{il} (x) x_k: indices are algebra basis
/// indices of negative degree, strictly increasing.
struct CochainKey {
    std::vector<int> args;
    int value = 0;
    auto operator<=>(const CochainKey&) const = default;
};

class Cochain {
public:
    explicit Cochain(int level = 0) : level_(level) {}

    int level() const { return level_; }
    const std::map<CochainKey, Rational>& coefficients() const { return coeffs_; }
    /// Adds c * x*_{args} (x) x_value; args in any order (sorted with sign, repeats vanish).
    void add(std::vector<int> args, int value, const Rational& c);
    Rational coefficient(const CochainKey& key) const;
    bool is_zero() const { return coeffs_.empty(); }

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator*(const Rational& s) const;
    bool operator==(const Cochain& o) const = default;

    /// e.g. "t*^h2*(x)i2 - 2 h1*^h2*(x)j"
    std::string to_string(const GradedLieAlgebra& algebra) const;

private:
    int level_;
    std::map<CochainKey, Rational> coeffs_;
};

/// deg(value) - sum deg(args).
int homogeneity(const GradedLieAlgebra& algebra, const CochainKey& key);

/// Phi(x_{args[0]}, ..., x_{args[l-1]}) as coordinates in g.
Vec evaluate(const GradedLieAlgebra& algebra, const Cochain& phi, const std::vector<int>& args);

Cochain differential(const GradedLieAlgebra& algebra, const Cochain& phi);

/// The codifferential C^{k+1} -> C^k built from Killing-dual vectors; `weight`
/// multiplies the projected second sum (1/2 by default).
/// Throws SingularKillingForm.
Cochain codifferential(const GradedLieAlgebra& algebra, const Cochain& psi, const Rational& weight = Rational(1, 2));

Cochain homogeneous_component(const GradedLieAlgebra& algebra, const Cochain& phi, int h);

/// Smallest and largest homogeneity carried by some basis l-cochain.
std::pair<int, int> homogeneity_range(const GradedLieAlgebra& algebra, int level);

/// Basis l-cochains of homogeneity h in lexicographic key order.
std::vector<CochainKey> cochain_basis(const GradedLieAlgebra& algebra, int level, int h);
Cochain basis_cochain(int level, const CochainKey& key);
/// Coordinates of phi on cochain_basis(level, h); throws std::invalid_argument if phi has other components.
Vec coordinates(const GradedLieAlgebra& algebra, const Cochain& phi, int h);
Cochain from_coordinates(const GradedLieAlgebra& algebra, int level, int h, const Vec& v);

/// Matrix of the differential C^l_[h] -> C^{l+1}_[h] (columns: source basis).
Matrix differential_matrix(const GradedLieAlgebra& algebra, int level, int h);
/// Matrix of the codifferential C^l_[h] -> C^{l-1}_[h].
Matrix codifferential_matrix(const GradedLieAlgebra& algebra, int level, int h,
                             const Rational& weight = Rational(1, 2));

/// The 2-cocycle conditions written through structure constants: one row per
/// element (j1 < j2 < j3, l) of cochain_basis(3, h), columns cochain_basis(2, h).
Matrix cocycle_system(const GradedLieAlgebra& algebra, int h);
/// The coefficients of d(Psi) through structure constants: rows cochain_basis(2, h),
/// columns cochain_basis(1, h).
Matrix coboundary_system(const GradedLieAlgebra& algebra, int h);

struct SpaceDims {
    int C = 0, Z = 0, B = 0, H = 0;
    bool operator==(const SpaceDims&) const = default;
};
SpaceDims space_dims(const GradedLieAlgebra& algebra, int level, int h);

/// Representatives of H^2_[h]: Z^2 reduced modulo the echelon form of B^2, then put in reduced echelon form.
std::vector<Cochain> h2_basis(const GradedLieAlgebra& algebra, int h);
/// True when every element of `a` lies in span(b) + B^2_[h] and vice versa.
bool same_span_modulo_coboundaries(const GradedLieAlgebra& algebra, int h, const std::vector<Cochain>& a,
                                   const std::vector<Cochain>& b);

struct CochainSpaceReport {
    struct Row {
        int homogeneity = 0;
        SpaceDims dims;
        std::vector<Cochain> h_basis;
    };
    int level = 2;
    std::vector<Row> rows;
    nlohmann::json to_json(const GradedLieAlgebra& algebra) const;
};
CochainSpaceReport cohomology_report(const GradedLieAlgebra& algebra, int level = 2);

nlohmann::json cochain_to_json(const Cochain& phi);
Cochain cochain_from_json(const nlohmann::json& j);

}  // namespace cartanforge

#endif
