// Tanaka prolongation of a negatively graded Lie algebra, optionally
// J-compatible at level 0, and a search for graded isomorphisms.
#ifndef CARTANFORGE_TANAKA_HPP
#define CARTANFORGE_TANAKA_HPP

#include "cartanforge/liealg.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace cartanforge {

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Level l of the prolongation. Each basis element is an l-shifted graded map
/// g_- -> g, stored as a matrix whose column x is the image of the negative
/// basis vector x in the coordinates of the output algebra.
struct ProlongationLevel {
    int level = 0;
    std::vector<int> indices;  ///< basis indices of this level in the output algebra
    std::vector<Matrix> basis;
};

struct Prolongation {
    GradedLieAlgebra algebra;
    std::vector<ProlongationLevel> levels;
    /// True when some level vanished; false when max_level stopped the computation,
    /// in which case brackets landing above the top level are dropped.
    bool terminated = false;
    /// Dimensions of g_k for k = min degree .. top level.
    std::vector<int> graded_dims() const;
    nlohmann::json to_json() const;
};

/// New basis elements are named x<k> with k the 1-based position in the output basis.
/// Throws InvalidInput when some degree of m is not negative or J is not a complex
/// structure on the whole degree -1 component.
Prolongation prolong(const GradedLieAlgebra& m, bool use_J = true, int max_level = 10);

/// True when every basis element d of `level` satisfies d([y,z]) = [d(y),z] + [y,d(z)]
/// on all pairs of negative basis vectors, brackets taken in `algebra`.
bool is_derivation_level(const GradedLieAlgebra& algebra, const ProlongationLevel& level);

struct IsomorphismResult {
    enum class Status { Found, NotIsomorphic, Undetermined };
    Status status = Status::Undetermined;
    /// Column i is the image of basis vector i of A in the basis of B (when Found).
    Matrix map;
    std::string detail;
    bool found() const { return status == Status::Found; }
    nlohmann::json to_json(const GradedLieAlgebra& A, const GradedLieAlgebra& B) const;
};

/// Searches graded maps sending each basis vector of A to a nonzero multiple of a
/// basis vector of B of the same degree. When none exists, compares graded
/// invariants to decide NotIsomorphic; otherwise reports Undetermined.
IsomorphismResult check_isomorphic_to(const GradedLieAlgebra& A, const GradedLieAlgebra& B);

/// True when `map` is invertible, preserves degrees and brackets.
bool is_graded_isomorphism(const GradedLieAlgebra& A, const GradedLieAlgebra& B, const Matrix& map);

}  // namespace cartanforge

#endif
