#include "gallery/structured.h"

#include <algorithm>
#include <stdexcept>

namespace gallery {

bool certify(const Workspace& w, std::span<const std::size_t> guards) {
    for (std::size_t g : guards)
        if (g >= w.size() || !w.candidate[g]) return false;
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (!w.target[t]) continue;
        bool seen = std::any_of(guards.begin(), guards.end(), [&](std::size_t g) { return w.vis(g, t); });
        if (!seen) return false;
    }
    return true;
}

GuessSpace guess_space(const Workspace& w, int k) {
    GuessSpace s;
    s.k = k;
    for (std::size_t e = 0; e < w.dec.elements.size(); ++e) {
        s.capacity.push_back(static_cast<int>(std::min<std::size_t>(w.candidates_in(e), static_cast<std::size_t>(k))));
        s.reflex.push_back(w.dec.elements[e].is_reflex());
        s.needs_cover.push_back(w.has_targets(e));
    }
    return s;
}

GuessFilter solver_filter(const Workspace& w, const karp::Context& ctx) {
    GuessFilter f;
    // Later links must see strictly later targets, so a chain never outgrows the region's targets.
    f.max_chain = [&w](std::size_t x) { return static_cast<int>(w.region_targets[x].size()); };
    f.step = [&w, &ctx](std::size_t x, std::span<const GuardRef> chain, int length) {
        const GuardRef& last = chain.back();
        const std::size_t t = chain.size() - 1;
        // The same reasoning makes chains injective.
        if (std::find(chain.begin(), chain.end() - 1, last) != chain.end() - 1) return false;
        const auto& el = w.dec.elements[x];
        if (el.is_reflex()) return !ctx.cover(el.lo, last.element).empty();
        const auto& targets = w.region_targets[x];
        if (t == 0 && ctx.cover(targets.front(), last.element).empty()) return false;
        if (static_cast<int>(t) == length - 1 && ctx.cover(targets.back(), last.element).empty()) return false;
        if (length > 1 && ctx.window(last.element, x).empty()) return false;
        return true;
    };
    return f;
}

GuessOutcome evaluate_guess(const karp::Context& ctx, const Guess& guess) {
    GuessOutcome out;
    auto built = karp::build(ctx, guess);
    if (auto* no = std::get_if<karp::EarlyNo>(&built)) {
        out.early = *no;
        return out;
    }
    auto& inst = std::get<karp::Built>(built).instance;
    auto alpha = csp::solve_csp(inst);
    out.kind = alpha ? GuessOutcome::Kind::Satisfiable : GuessOutcome::Kind::Unsatisfiable;
    if (alpha) out.assignment = std::move(*alpha);
    out.instance = std::move(inst);
    return out;
}

namespace {

/// Answers that need no guess enumeration; nullopt when the search must run.
std::optional<SolveResult> shortcut(const Workspace& w, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    SolveResult out;
    bool any_target = std::find(w.target.begin(), w.target.end(), true) != w.target.end();
    if (!any_target) {
        out.yes = true;
        out.solution = GuardSolution{};
        return out;
    }
    if (w.convex) {
        if (k >= 1 && !w.by_rank.empty()) {
            out.yes = true;
            out.solution = GuardSolution{{w.by_rank.front()}, std::nullopt, {}};
            if (!certify(w, out.solution->guards)) throw std::logic_error("convex shortcut failed certification");
        }
        return out;
    }
    const auto& reflex = w.dec.reflex;
    bool reflex_candidates = std::all_of(reflex.begin(), reflex.end(), [&](std::size_t v) { return w.candidate[v]; });
    if (reflex_candidates && static_cast<std::size_t>(k) >= reflex.size()) {
        out.yes = true;
        out.solution = GuardSolution{reflex, std::nullopt, {}};
        if (!certify(w, reflex)) throw std::logic_error("reflex vertices fail to guard the polygon");
        return out;
    }
    return std::nullopt;
}

GuardSolution accept(const Workspace& w, const Guess& guess, const csp::Assignment& alpha) {
    GuardSolution sol{karp::guards_of(w, alpha), guess, alpha};
    std::sort(sol.guards.begin(), sol.guards.end());
    if (!certify(w, sol.guards)) throw std::logic_error("satisfiable guess produced guards that fail certification");
    return sol;
}

}  // namespace

SolveResult solve_serial(const Workspace& w, int k) {
    if (auto quick = shortcut(w, k)) return *quick;
    SolveResult out;
    karp::Context ctx(w);
    GuessFilter filter = solver_filter(w, ctx);
    for_each_guess(guess_space(w, k), &filter, [&](const Guess& g) {
        ++out.guesses_tried;
        GuessOutcome o = evaluate_guess(ctx, g);
        if (o.kind != GuessOutcome::Kind::Satisfiable) return true;
        out.yes = true;
        out.solution = accept(w, g, o.assignment);
        return false;
    });
    return out;
}

SolveResult solve(const Workspace& w, int k, const SolveOptions& options) {
    if (auto quick = shortcut(w, k)) return *quick;
    SolveResult out;
    karp::Context ctx(w);
    GuessFilter filter = solver_filter(w, ctx);
    const int threads = std::max(1, options.threads);
    const std::size_t batch_size = threads == 1 ? 1 : static_cast<std::size_t>(64 * threads);

    std::vector<Guess> batch;
    std::vector<GuessOutcome> outcomes;
    // Evaluates the pending batch; true when a satisfiable guess was found.
    auto flush = [&]() {
        outcomes.assign(batch.size(), {});
        const long count = static_cast<long>(batch.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
        for (long i = 0; i < count; ++i) outcomes[static_cast<std::size_t>(i)] = evaluate_guess(ctx, batch[static_cast<std::size_t>(i)]);

        for (std::size_t i = 0; i < batch.size(); ++i) {
            ++out.guesses_tried;
            const auto& o = outcomes[i];
            if (o.instance && options.on_instance) options.on_instance(out.guesses_tried, *o.instance);
            if (o.kind == GuessOutcome::Kind::Satisfiable) {
                out.yes = true;
                out.solution = accept(w, batch[i], o.assignment);
                break;
            }
        }
        batch.clear();
        if (options.progress) options.progress(out.guesses_tried, 0);
        return out.yes;
    };

    for_each_guess(guess_space(w, k), &filter, [&](const Guess& g) {
        batch.push_back(g);
        if (batch.size() < batch_size) return true;
        return !flush();
    });
    if (!out.yes && !batch.empty()) flush();
    return out;
}

SolveResult solve(const geom::Polygon& polygon, int k, Variant variant, const SolveOptions& options) {
    return solve(build_workspace(polygon, variant, options.threads), k, options);
}

SolveResult solve_vb(const geom::Polygon& polygon, int k, const SolveOptions& options) {
    return solve(polygon, k, Variant::VertexBoundary, options);
}

SolveResult solve_bv(const geom::Polygon& polygon, int k, const SolveOptions& options) {
    return solve(polygon, k, Variant::BoundaryVertex, options);
}

}  // namespace gallery
