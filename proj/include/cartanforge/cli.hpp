// Graphing-function expressions and the report builders behind each
// command of the cartanforge tool.
#ifndef CARTANFORGE_CLI_HPP
#define CARTANFORGE_CLI_HPP

#include "cartanforge/jetcalc.hpp"
#include "cartanforge/liealg.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cartanforge {

struct ParseError : std::runtime_error {
    ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found);
    std::size_t position;
    std::vector<std::string> expected;
};

/// Polynomial expression in x, y, u: rational literals, + - * ^ (non-negative integer
/// exponents) and parentheses.
class PhiExpression {
public:
    enum class Kind { number, variable, add, sub, mul, neg, pow };

    Kind kind() const { return node_->kind; }
    std::string to_string() const;
    Poly3 to_poly() const;
    Rational evaluate(const std::array<Rational, 3>& point) const;

    static PhiExpression number(const Rational& value);
    static PhiExpression variable(int index);  ///< 0 = x, 1 = y, 2 = u
    static PhiExpression binary(Kind kind, PhiExpression a, PhiExpression b);
    static PhiExpression negate(PhiExpression a);
    static PhiExpression power(PhiExpression a, unsigned exponent);

private:
    struct Node {
        Kind kind;
        Rational value;
        int index = 0;
        unsigned exponent = 0;
        std::shared_ptr<const Node> a, b;
    };
    explicit PhiExpression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static std::string print(const Node& n, int context);
    static Poly3 poly(const Node& n);
    static Rational eval(const Node& n, const std::array<Rational, 3>& p);
    std::shared_ptr<const Node> node_;
};

/// Throws ParseError with the offending position and the expected tokens.
PhiExpression parse_phi(std::string_view text);

/// Parses "p,q,r" style rational lists of a fixed length; throws std::invalid_argument.
std::vector<Rational> parse_rational_list(std::string_view text, std::size_t count);

/// Outcome of one command: exit status 0 iff every check passed.
struct CommandResult {
    int exit_code = 0;
    nlohmann::json report;
};

CommandResult run_verify_identities(int points, bool full, std::uint64_t seed);
CommandResult run_cohomology(const GradedLieAlgebra& algebra, int level, std::optional<int> homogeneity);
CommandResult run_tanaka(const GradedLieAlgebra& algebra, int max_level);
CommandResult run_free_lie(int max_length);
/// Delta_1, Delta_4, Phi_1, Phi_2, Upsilon and all curvature coefficients at the point
/// and fiber; verdict "spherical at point" iff Delta_1 and Delta_4 vanish there.
/// A Levi-degenerate point or rho = 0 yields exit code 2 and a DegeneratePoint record.
CommandResult run_curvature(const std::string& phi, const std::array<Rational, 3>& at,
                            const std::array<Rational, 5>& fiber);
CommandResult run_check_connection(int points, std::uint64_t seed);
CommandResult run_hol_heisenberg();

/// Formats a report as aligned "key: value" lines.
std::string pretty(const nlohmann::json& report);

}  // namespace cartanforge

#endif
