// Finite-dimensional Lie algebras over Q given by structure constants,
// optional Z-grading, Killing form and a complex structure on degree -1.
#ifndef CARTANFORGE_LIEALG_HPP
#define CARTANFORGE_LIEALG_HPP

#include "cartanforge/linalg.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cartanforge {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SingularKillingForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structure constants stored for k1 < k2 only; [x_k2, x_k1] = -[x_k1, x_k2].
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::vector<std::string> names);

    static LieAlgebra abelian(int dim);

    int dim() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    /// Index of a basis label; throws std::out_of_range.
    int index(const std::string& name) const;

    /// Sets [x_k1, x_k2] = value (k1 != k2; the opposite order is implied).
    void set_bracket(int k1, int k2, const Vec& value);
    /// Sets [x_k1, x_k2] from (index, coefficient) pairs.
    void set_bracket(int k1, int k2, const std::vector<std::pair<int, Rational>>& value);
    /// Coordinates of [x_k1, x_k2].
    Vec basis_bracket(int k1, int k2) const;
    Rational structure_constant(int k1, int k2, int s) const;
    /// Stored upper-triangle brackets (k1 < k2) that are nonzero.
    const std::map<std::pair<int, int>, Vec>& table() const { return table_; }

    Vec bracket(const Vec& x, const Vec& y) const;
    /// Matrix of ad(x) in the basis (column j = [x, x_j]).
    Matrix ad(const Vec& x) const;
    Vec basis_vector(int k) const;

private:
    std::vector<std::string> names_;
    std::map<std::pair<int, int>, Vec> table_;
};

struct ComplexStructure {
    std::vector<int> indices;  ///< basis indices of the degree -1 component, in matrix order
    Matrix J;                  ///< square matrix acting on coordinates along `indices`
    bool squares_to_minus_identity() const;
};

class GradedLieAlgebra {
public:
    GradedLieAlgebra() = default;
    GradedLieAlgebra(LieAlgebra base, std::vector<int> degrees, std::optional<ComplexStructure> J = std::nullopt);

    const LieAlgebra& base() const { return base_; }
    LieAlgebra& base() { return base_; }
    int dim() const { return base_.dim(); }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int k) const { return degrees_.at(k); }
    int min_degree() const;
    int max_degree() const;
    std::vector<int> indices_of_degree(int k) const;
    /// Basis indices of negative degree, in basis order.
    std::vector<int> negative_indices() const;
    const std::optional<ComplexStructure>& complex_structure() const { return J_; }

private:
    LieAlgebra base_;
    std::vector<int> degrees_;
    std::optional<ComplexStructure> J_;
};

struct ValidationReport {
    /// (k1, k2, k3, l) with a nonzero l-component of the Jacobiator.
    std::vector<std::array<int, 4>> jacobi_violations;
    /// (k1, k2, s) with c^s_{k1 k2} != 0 but degree(s) != degree(k1) + degree(k2).
    std::vector<std::array<int, 3>> grading_violations;
    bool complex_structure_ok = true;
    bool ok() const { return jacobi_violations.empty() && grading_violations.empty() && complex_structure_ok; }
};

ValidationReport validate(const LieAlgebra& algebra);
ValidationReport validate(const GradedLieAlgebra& algebra);

/// The 8-dimensional graded algebra (t,h1,h2,d,r,i1,i2,j) of infinitesimal
/// automorphisms of the Heisenberg sphere, with J(h1) = h2.
GradedLieAlgebra heisenberg_prolonged();
/// Its negative part: [h1,h2] = 4t, degrees (-2,-1,-1), J(h1) = h2.
GradedLieAlgebra heisenberg_negative_part();

/// B(x,y) = Tr(ad x ad y) in the basis.
Matrix killing_form(const LieAlgebra& algebra);
bool killing_nondegenerate(const LieAlgebra& algebra);

/// For each basis vector v_i listed in `basis`, the vector v*_i with B(v*_i, v_j) = delta_ij.
/// Throws SingularKillingForm when B is degenerate.
std::vector<Vec> killing_dual_basis(const LieAlgebra& algebra, const std::vector<int>& basis);

// JSON: {"dim", "names", "grading", "brackets": [[k1,k2,[[s,"p/q"],...]],...], "J": {"indices", "matrix"}}
nlohmann::json to_json(const GradedLieAlgebra& algebra);
GradedLieAlgebra graded_algebra_from_json(const nlohmann::json& j);
GradedLieAlgebra load_algebra(const std::string& path);

}  // namespace cartanforge

#endif
