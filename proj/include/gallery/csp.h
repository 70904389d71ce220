#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gallery::csp {

enum class Cmp { Le, Ge };
enum class Direction { NonDecreasing, NonIncreasing };

/// Right-hand side `beta`.
struct ConstRhs {
    int beta = 0;
    friend bool operator==(const ConstRhs&, const ConstRhs&) = default;
};

/// Right-hand side `f(x_var)`, with f given by its values f(0..N).
struct FnRhs {
    std::size_t var = 0;
    std::vector<int> table;
    Direction direction = Direction::NonDecreasing;
    friend bool operator==(const FnRhs&, const FnRhs&) = default;
};

/// x_lhs <= rhs or x_lhs >= rhs.
struct Constraint {
    std::size_t lhs = 0;
    Cmp cmp = Cmp::Le;
    std::variant<ConstRhs, FnRhs> rhs;

    static Constraint constant(std::size_t lhs, Cmp cmp, int beta) { return {lhs, cmp, ConstRhs{beta}}; }
    static Constraint function(std::size_t lhs, Cmp cmp, std::size_t var, std::vector<int> table, Direction dir) {
        return {lhs, cmp, FnRhs{var, std::move(table), dir}};
    }
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

class InvalidInstance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CspInstance {
    std::size_t var_count = 0;
    int N = 0;  // domain is 0..N
    std::vector<Constraint> constraints;

    /// Throws InvalidInstance on bad indices, table shape, range, or a direction the table does not follow.
    void validate() const;
    friend bool operator==(const CspInstance&, const CspInstance&) = default;
};

/// True iff the table never decreases (resp. never increases).
bool follows(std::span<const int> table, Direction dir);

using Assignment = std::vector<int>;

bool satisfies(const CspInstance& inst, const Assignment& alpha);

/// 2-CNF literal: variable index with a sign bit.
struct Lit {
    std::uint32_t code = 0;  // 2 * var + negated

    static Lit pos(std::size_t var) { return Lit{static_cast<std::uint32_t>(2 * var)}; }
    static Lit neg(std::size_t var) { return Lit{static_cast<std::uint32_t>(2 * var + 1)}; }
    std::size_t var() const { return code >> 1; }
    bool negated() const { return (code & 1) != 0; }
    Lit operator~() const { return Lit{code ^ 1U}; }
    friend bool operator==(const Lit&, const Lit&) = default;
};

/// Disjunction of two literals; a unit clause repeats its literal.
using Clause = std::pair<Lit, Lit>;

struct TwoSatInstance {
    std::size_t var_count = 0;
    std::vector<Clause> clauses;
    bool trivially_unsat = false;  // set by encode for [x >= N+1]

    void add(Lit a, Lit b) { clauses.emplace_back(a, b); }
    void add_unit(Lit a) { clauses.emplace_back(a, a); }
    void add_implication(Lit a, Lit b) { clauses.emplace_back(~a, b); }
};

/// Boolean variable standing for "x >= d", d in 0..N+1.
inline std::size_t level_var(std::size_t x, int d, int N) {
    return x * static_cast<std::size_t>(N + 2) + static_cast<std::size_t>(d);
}

/// Threshold encoding: per variable the chain x[d] -> x[d-1] with x[0] and not x[N+1];
/// one unit clause per constant constraint; N+1 implications per function constraint.
TwoSatInstance encode(const CspInstance& inst);

/// Strongly-connected-component 2-SAT. Returns a model or nullopt.
std::optional<std::vector<bool>> solve_2sat(const TwoSatInstance& ts);

class MalformedModel : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads x as the largest level set true. Throws MalformedModel if the levels are not a prefix.
Assignment extract(const CspInstance& inst, const std::vector<bool>& model);

std::optional<Assignment> solve_csp(const CspInstance& inst);

/// Text format: `csp <varCount> <N>`, then `const <i> <le|ge> <beta>` or `fn <i> <le|ge> <j> <v0> .. <vN>`.
CspInstance read_csp(std::istream& in);
void write_csp(std::ostream& out, const CspInstance& inst);
std::string to_text(const CspInstance& inst);

}  // namespace gallery::csp
