#pragma once

#include "gallery/csp.h"
#include "gallery/guess.h"
#include "gallery/karp.h"
#include "gallery/workspace.h"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace gallery {

struct SolveOptions {
    int threads = 1;
    /// Called with (guesses evaluated so far, total if known else 0) after each batch.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
    /// Called in canonical order with the ordinal (1-based) of every guess that reached a CSP instance.
    std::function<void(std::uint64_t, const csp::CspInstance&)> on_instance;
};

struct GuardSolution {
    std::vector<std::size_t> guards;     // working-polygon vertices, ascending
    std::optional<Guess> witness;        // absent for the shortcut answers
    csp::Assignment assignment;          // values in candidate ranks
};

struct SolveResult {
    bool yes = false;
    std::optional<GuardSolution> solution;
    std::uint64_t guesses_tried = 0;
};

/// Yes iff at most k candidates of the workspace see every target.
SolveResult solve(const Workspace& w, int k, const SolveOptions& options = {});
SolveResult solve(const geom::Polygon& polygon, int k, Variant variant, const SolveOptions& options = {});
SolveResult solve_vb(const geom::Polygon& polygon, int k, const SolveOptions& options = {});
SolveResult solve_bv(const geom::Polygon& polygon, int k, const SolveOptions& options = {});

/// Guards are candidates and together see every target, checked on the visibility matrix.
bool certify(const Workspace& w, std::span<const std::size_t> guards);

/// Guess space of a workspace: capacities count candidates, reflex vertices and regions
/// without targets need no chain.
GuessSpace guess_space(const Workspace& w, int k);

/// Pruning the solver applies; every guess it drops has no structured solution.
GuessFilter solver_filter(const Workspace& w, const karp::Context& ctx);

/// Outcome of a single guess, with or without the pruning already applied.
struct GuessOutcome {
    enum class Kind { EarlyNo, Unsatisfiable, Satisfiable } kind = Kind::EarlyNo;
    std::optional<karp::EarlyNo> early;
    std::optional<csp::CspInstance> instance;
    csp::Assignment assignment;
};
GuessOutcome evaluate_guess(const karp::Context& ctx, const Guess& guess);

/// Same search as solve on the guess stream, one guess at a time, no threads.
SolveResult solve_serial(const Workspace& w, int k);

}  // namespace gallery
