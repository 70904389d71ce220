#pragma once

#include "gallery/csp.h"
#include "gallery/guess.h"
#include "gallery/workspace.h"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gallery::karp {

enum class Monotonicity { NonDecreasing, NonIncreasing, Neither };

/// Single-scan classification; constant tables count as NonDecreasing.
Monotonicity check_monotone(std::span<const int> table);

/// A constructed table broke its monotonicity guarantee.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Bijection between CSP variables and placed guards, elements in canonical order, indices ascending.
class VariableMap {
public:
    explicit VariableMap(std::span<const int> ig);

    std::size_t size() const { return refs_.size(); }
    const GuardRef& ref(std::size_t var) const { return refs_[var]; }
    std::size_t var(const GuardRef& r) const { return offset_[r.element] + static_cast<std::size_t>(r.index); }

private:
    std::vector<GuardRef> refs_;
    std::vector<std::size_t> offset_;
};

enum class EarlyNoReason {
    ReflexSourceBlind,   // a reflex guard cannot see the vertex it must cover
    NoCoveringGuard,     // no candidate of a region sees the vertex it must cover
    NoWindow,            // no candidate of an element sees any target of the region it helps cover
    RepeatedGuard,       // consecutive chain links name the same guard
};

const char* to_string(EarlyNoReason reason);

struct EarlyNo {
    EarlyNoReason reason;
    std::size_t element = 0;  // element whose chain triggered it
};

struct Built {
    csp::CspInstance instance;
    VariableMap vars;
};

using BuildOutcome = std::variant<EarlyNo, Built>;

/// One monotone function table with the comparison it is used with.
struct CaseTable {
    csp::Cmp cmp = csp::Cmp::Le;
    std::vector<int> values;  // f(0..N)
    csp::Direction direction = csp::Direction::NonDecreasing;
    int case_number = 0;      // 1..4 within its set
};

/// Rank window of an element's candidates that see a target of a region.
struct Window {
    int lo = 0;  // ranks; lo > hi when empty
    int hi = -1;
    bool empty() const { return lo > hi; }
};

/// Everything the reduction needs that does not depend on the guess, built once per workspace.
class Context {
public:
    explicit Context(const Workspace& w);

    const Workspace& workspace() const { return w_; }
    /// Candidates of element e seeing some target of region c.
    const Window& window(std::size_t e, std::size_t c) const { return windows_[e * regions_ + c]; }
    /// Candidates of element e seeing vertex y.
    Window cover(std::size_t y, std::size_t e) const;
    /// Table of the first (resp. second) set for chain link (e_prev -> e) of region c; nullopt when a window is empty.
    const std::optional<CaseTable>& first_set(std::size_t e_prev, std::size_t e, std::size_t c) const {
        return first_[index(e_prev, e, c)];
    }
    const std::optional<CaseTable>& second_set(std::size_t e_prev, std::size_t e, std::size_t c) const {
        return second_[index(e_prev, e, c)];
    }
    std::size_t table_count() const;

private:
    std::size_t index(std::size_t ep, std::size_t e, std::size_t c) const {
        return (ep * elements_ + e) * regions_ + c;
    }

    const Workspace& w_;
    std::size_t elements_ = 0;
    std::size_t regions_ = 0;
    std::vector<Window> windows_;
    std::vector<std::optional<CaseTable>> first_;
    std::vector<std::optional<CaseTable>> second_;
};

/// Builds the first-set table for previous element ep and current element e of region c.
CaseTable build_first_set(const Workspace& w, std::size_t ep, std::size_t e, std::size_t c, const Window& wp);
/// Builds the second-set table.
CaseTable build_second_set(const Workspace& w, std::size_t ep, std::size_t e, std::size_t c, const Window& wp);

/// Translates a guess into a monotone 2-CSP instance over candidate ranks, or an early No.
BuildOutcome build(const Context& ctx, const Guess& guess);

/// Vertex held by each variable of a satisfying assignment.
std::vector<std::size_t> guards_of(const Workspace& w, const csp::Assignment& alpha);

}  // namespace gallery::karp
