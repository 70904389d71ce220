#include "gallery/karp.h"

namespace gallery::karp {

using csp::Cmp;
using csp::Constraint;
using csp::Direction;
using regions::kNil;
using regions::Orientation;

Monotonicity check_monotone(std::span<const int> table) {
    bool up = true, down = true;
    for (std::size_t d = 1; d < table.size(); ++d) {
        if (table[d] < table[d - 1]) up = false;
        if (table[d] > table[d - 1]) down = false;
    }
    if (up) return Monotonicity::NonDecreasing;
    if (down) return Monotonicity::NonIncreasing;
    return Monotonicity::Neither;
}

VariableMap::VariableMap(std::span<const int> ig) {
    for (std::size_t e = 0; e < ig.size(); ++e) {
        offset_.push_back(refs_.size());
        for (int i = 0; i < ig[e]; ++i) refs_.push_back({e, i});
    }
}

const char* to_string(EarlyNoReason reason) {
    switch (reason) {
        case EarlyNoReason::ReflexSourceBlind: return "reflex guard does not see its target";
        case EarlyNoReason::NoCoveringGuard: return "no candidate of the element sees the target";
        case EarlyNoReason::NoWindow: return "no candidate of the element sees the region";
        case EarlyNoReason::RepeatedGuard: return "consecutive chain links name the same guard";
    }
    return "?";
}

namespace {

enum class Fill { Zero, Top };

/// Parameters of one of the eight sweeps. Ascending sweeps start right after the block
/// below the window and propagate f(i-1); descending ones start above it and propagate f(i+1).
struct Sweep {
    Cmp cmp;
    bool ascending;
    Fill below;    // value for ranks under the window
    Fill above;    // value for ranks over the window
    bool largest;  // pick the largest qualifying vertex, else the smallest
};

// First set: previous element's last-view orientation, current element's first-view orientation.
constexpr Sweep kFirstSet[2][2] = {
    {
        {Cmp::Le, true, Fill::Zero, Fill::Top, true},    // 1: ND, ND
        {Cmp::Ge, true, Fill::Top, Fill::Zero, false},   // 2: ND, NI
    },
    {
        {Cmp::Le, false, Fill::Top, Fill::Zero, true},   // 3: NI, ND
        {Cmp::Ge, false, Fill::Zero, Fill::Top, false},  // 4: NI, NI
    },
};

// Second set: both last-view orientations.
constexpr Sweep kSecondSet[2][2] = {
    {
        {Cmp::Ge, false, Fill::Zero, Fill::Top, false},  // 1: ND, ND
        {Cmp::Le, false, Fill::Top, Fill::Zero, true},   // 2: ND, NI
    },
    {
        {Cmp::Ge, true, Fill::Top, Fill::Zero, false},   // 3: NI, ND
        {Cmp::Le, true, Fill::Zero, Fill::Top, true},    // 4: NI, NI
    },
};

int orientation_index(Orientation o) {
    return o == Orientation::NonDecreasing ? 0 : 1;
}

/// Rank of the largest/smallest candidate j of element e with `ok(j)`, or 0.
template <typename Pred>
int pick(const Workspace& w, std::size_t e, bool largest, Pred ok) {
    const auto& el = w.dec.elements[e];
    int lo = w.ceil_rank(el.lo), hi = w.floor_rank(el.hi);
    if (largest) {
        for (int r = hi; r >= lo; --r)
            if (ok(w.by_rank[static_cast<std::size_t>(r - 1)])) return r;
    } else {
        for (int r = lo; r <= hi; ++r)
            if (ok(w.by_rank[static_cast<std::size_t>(r - 1)])) return r;
    }
    return 0;
}

template <typename Pred>
CaseTable sweep(const Workspace& w, std::size_t c, const Window& wp, const Sweep& s, int case_number, Pred choose) {
    const int N = w.N;
    auto fill = [N](Fill f) { return f == Fill::Zero ? 0 : N; };
    CaseTable out;
    out.cmp = s.cmp;
    out.case_number = case_number;
    out.values.assign(static_cast<std::size_t>(N) + 1, 0);
    for (int i = 0; i < wp.lo; ++i) out.values[static_cast<std::size_t>(i)] = fill(s.below);
    for (int i = wp.hi + 1; i <= N; ++i) out.values[static_cast<std::size_t>(i)] = fill(s.above);

    auto value_at = [&](int i, int carried) {
        std::size_t v = w.by_rank[static_cast<std::size_t>(i - 1)];
        int a = w.target_views.last(v, c);
        if (a == kNil) return carried;
        int next = w.next_target(c, static_cast<std::size_t>(a));
        if (next == kNil) return carried;
        int j = choose(next, s.largest);
        return j == 0 ? carried : j;
    };
    if (s.ascending) {
        int carried = fill(s.below);
        for (int i = wp.lo; i <= wp.hi; ++i) carried = out.values[static_cast<std::size_t>(i)] = value_at(i, carried);
    } else {
        int carried = fill(s.above);
        for (int i = wp.hi; i >= wp.lo; --i) carried = out.values[static_cast<std::size_t>(i)] = value_at(i, carried);
    }

    switch (check_monotone(out.values)) {
        case Monotonicity::NonDecreasing: out.direction = Direction::NonDecreasing; break;
        case Monotonicity::NonIncreasing: out.direction = Direction::NonIncreasing; break;
        case Monotonicity::Neither:
            throw InternalError("case " + std::to_string(case_number) + " table for region " + std::to_string(c) +
                                " is not monotone");
    }
    return out;
}

}  // namespace

CaseTable build_first_set(const Workspace& w, std::size_t ep, std::size_t e, std::size_t c, const Window& wp) {
    int row = orientation_index(w.orientation[ep][c].last);
    int col = orientation_index(w.orientation[e][c].first);
    // j qualifies when the first target of C it sees is at most the target after a.
    auto choose = [&](int next, bool largest) {
        return pick(w, e, largest, [&](std::size_t j) {
            int f = w.target_views.first(j, c);
            return f != kNil && f <= next;
        });
    };
    return sweep(w, c, wp, kFirstSet[row][col], 2 * row + col + 1, choose);
}

CaseTable build_second_set(const Workspace& w, std::size_t ep, std::size_t e, std::size_t c, const Window& wp) {
    int row = orientation_index(w.orientation[ep][c].last);
    int col = orientation_index(w.orientation[e][c].last);
    // j qualifies when the last target of C it sees is at least the target after a.
    auto choose = [&](int next, bool largest) {
        return pick(w, e, largest, [&](std::size_t j) {
            int l = w.target_views.last(j, c);
            return l != kNil && l >= next;
        });
    };
    return sweep(w, c, wp, kSecondSet[row][col], 2 * row + col + 1, choose);
}

Context::Context(const Workspace& w) : w_(w) {
    if (w.convex) return;
    elements_ = w.dec.elements.size();
    regions_ = w.dec.regions.size();
    windows_.resize(elements_ * regions_);
    for (std::size_t e = 0; e < elements_; ++e) {
        const auto& el = w.dec.elements[e];
        for (std::size_t c = 0; c < regions_; ++c) {
            Window win;
            for (int r = w.ceil_rank(el.lo); r <= w.floor_rank(el.hi); ++r) {
                if (w.target_views.first(w.by_rank[static_cast<std::size_t>(r - 1)], c) == kNil) continue;
                if (win.empty()) win.lo = r;
                win.hi = r;
            }
            windows_[e * regions_ + c] = win;
        }
    }
    first_.resize(elements_ * elements_ * regions_);
    second_.resize(first_.size());
    for (std::size_t ep = 0; ep < elements_; ++ep)
        for (std::size_t e = 0; e < elements_; ++e)
            for (std::size_t c = 0; c < regions_; ++c) {
                const Window& wp = window(ep, c);
                if (wp.empty() || window(e, c).empty()) continue;
                first_[index(ep, e, c)] = build_first_set(w, ep, e, c, wp);
                second_[index(ep, e, c)] = build_second_set(w, ep, e, c, wp);
            }
}

Window Context::cover(std::size_t y, std::size_t e) const {
    const auto& el = w_.dec.elements[e];
    Window win;
    if (el.is_reflex()) {
        if (w_.candidate[el.lo] && w_.vis(el.lo, y)) win.lo = win.hi = w_.rank[el.lo];
        return win;
    }
    int f = w_.views.first(y, e);
    if (f == kNil) return win;
    // y sees every vertex between its first and last vertex of the region.
    win.lo = w_.ceil_rank(static_cast<std::size_t>(f));
    win.hi = w_.floor_rank(static_cast<std::size_t>(w_.views.last(y, e)));
    return win;
}

std::size_t Context::table_count() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < first_.size(); ++i) count += first_[i].has_value() + second_[i].has_value();
    return count;
}

namespace {

std::vector<int> successor_table(int N) {
    std::vector<int> f(static_cast<std::size_t>(N) + 1);
    for (int q = 0; q < N; ++q) f[static_cast<std::size_t>(q)] = q + 1;
    f[static_cast<std::size_t>(N)] = N;
    return f;
}

}  // namespace

BuildOutcome build(const Context& ctx, const Guess& guess) {
    const Workspace& w = ctx.workspace();
    const auto& dec = w.dec;
    Built out{csp::CspInstance{}, VariableMap(guess.ig)};
    auto& inst = out.instance;
    inst.var_count = out.vars.size();
    inst.N = w.N;
    auto& cs = inst.constraints;

    // Association.
    for (std::size_t x = 0; x < out.vars.size(); ++x) {
        const auto& el = dec.elements[out.vars.ref(x).element];
        if (el.is_reflex()) {
            cs.push_back(Constraint::constant(x, Cmp::Le, w.rank[el.lo]));
            cs.push_back(Constraint::constant(x, Cmp::Ge, w.rank[el.lo]));
        } else {
            cs.push_back(Constraint::constant(x, Cmp::Ge, w.ceil_rank(el.lo)));
            cs.push_back(Constraint::constant(x, Cmp::Le, w.floor_rank(el.hi)));
        }
    }

    // Order inside each region.
    const auto succ = successor_table(w.N);
    for (std::size_t e = 0; e < dec.regions.size(); ++e)
        for (int i = 0; i < guess.ig[e]; ++i)
            for (int j = i + 1; j < guess.ig[e]; ++j)
                cs.push_back(Constraint::function(out.vars.var({e, j}), Cmp::Ge, out.vars.var({e, i}), succ,
                                                  Direction::NonDecreasing));

    // The guard `ref` must see vertex y.
    auto guard = [&](std::size_t chain_of, const GuardRef& ref, std::size_t y) -> std::optional<EarlyNo> {
        const auto& el = dec.elements[ref.element];
        if (el.is_reflex()) {
            if (!w.vis(el.lo, y)) return EarlyNo{EarlyNoReason::ReflexSourceBlind, chain_of};
            return std::nullopt;
        }
        Window win = ctx.cover(y, ref.element);
        if (win.empty()) return EarlyNo{EarlyNoReason::NoCoveringGuard, chain_of};
        std::size_t x = out.vars.var(ref);
        cs.push_back(Constraint::constant(x, Cmp::Ge, win.lo));
        cs.push_back(Constraint::constant(x, Cmp::Le, win.hi));
        return std::nullopt;
    };

    // Reflex targets.
    for (std::size_t x = dec.regions.size(); x < dec.elements.size(); ++x) {
        if (guess.og[x] == 0) continue;
        if (auto no = guard(x, guess.how[x][0], dec.elements[x].lo)) return *no;
    }

    for (std::size_t c = 0; c < dec.regions.size(); ++c) {
        const int og = guess.og[c];
        if (og == 0) continue;
        const auto& chain = guess.how[c];
        const auto& targets = w.region_targets[c];
        if (auto no = guard(c, chain.front(), targets.front())) return *no;
        if (auto no = guard(c, chain[static_cast<std::size_t>(og - 1)], targets.back())) return *no;

        for (int t = 1; t < og; ++t) {
            const GuardRef& cur = chain[static_cast<std::size_t>(t)];
            const GuardRef& prev = chain[static_cast<std::size_t>(t - 1)];
            if (cur == prev) return EarlyNo{EarlyNoReason::RepeatedGuard, c};
            const Window& win = ctx.window(cur.element, c);
            const Window& winp = ctx.window(prev.element, c);
            if (win.empty() || winp.empty()) return EarlyNo{EarlyNoReason::NoWindow, c};
            std::size_t x = out.vars.var(cur), xp = out.vars.var(prev);
            cs.push_back(Constraint::constant(x, Cmp::Ge, win.lo));
            cs.push_back(Constraint::constant(x, Cmp::Le, win.hi));
            for (const auto* table : {&ctx.first_set(prev.element, cur.element, c),
                                      &ctx.second_set(prev.element, cur.element, c)}) {
                const CaseTable& f = **table;
                cs.push_back(Constraint::function(x, f.cmp, xp, f.values, f.direction));
            }
        }
    }
    return out;
}

std::vector<std::size_t> guards_of(const Workspace& w, const csp::Assignment& alpha) {
    std::vector<std::size_t> out;
    for (int value : alpha) {
        if (value < 1 || value >= w.N) throw std::logic_error("assignment value outside candidate ranks");
        out.push_back(w.by_rank[static_cast<std::size_t>(value - 1)]);
    }
    return out;
}

}  // namespace gallery::karp
