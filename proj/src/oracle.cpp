#include "gallery/oracle.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

namespace gallery::oracle {

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t i) {
    b[i / 64] |= std::uint64_t{1} << (i % 64);
}

}  // namespace

OracleResult brute_force(const geom::VisibilityMatrix& vis, const std::vector<bool>& candidate,
                         const std::vector<bool>& target, int k, const Caps& caps) {
    std::vector<std::size_t> cands;
    for (std::size_t v = 0; v < candidate.size(); ++v)
        if (candidate[v]) cands.push_back(v);
    if (cands.size() > caps.candidates) throw TooLarge("too many guard candidates for exhaustive search");
    if (k > caps.k) throw TooLarge("budget too large for exhaustive search");

    const std::size_t n = vis.size(), words = (n + 63) / 64;
    Bits need(words, 0);
    for (std::size_t t = 0; t < n; ++t)
        if (target[t]) set_bit(need, t);
    std::vector<Bits> sees(cands.size(), Bits(words, 0));
    for (std::size_t c = 0; c < cands.size(); ++c)
        for (std::size_t t = 0; t < n; ++t)
            if (vis(cands[c], t)) set_bit(sees[c], t);

    OracleResult out;
    const int limit = std::min<int>(k, static_cast<int>(cands.size()));
    std::vector<std::size_t> pick;
    for (int size = 0; size <= limit; ++size) {
        pick.resize(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            ++out.explored;
            Bits cover(words, 0);
            for (std::size_t p : pick)
                for (std::size_t wd = 0; wd < words; ++wd) cover[wd] |= sees[p][wd];
            bool ok = true;
            for (std::size_t wd = 0; wd < words && ok; ++wd) ok = (need[wd] & ~cover[wd]) == 0;
            if (ok) {
                out.yes = true;
                out.witness.emplace();
                for (std::size_t p : pick) out.witness->push_back(cands[p]);
                return out;
            }
            // Next combination in lexicographic order.
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == cands.size() - static_cast<std::size_t>(size - i)) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

OracleResult brute_force(const geom::Polygon& polygon, int k, Variant variant, const Caps& caps) {
    const std::size_t n = polygon.size();
    if (variant == Variant::VertexVertex)
        return brute_force(geom::vertex_visibility(polygon), std::vector<bool>(n, true), std::vector<bool>(n, true), k, caps);

    auto p1 = geom::subdivide(polygon, geom::essential_set(polygon));
    if (variant == Variant::BoundaryVertex) {
        const std::size_t m = p1.polygon.size();
        if (m > caps.candidates) throw TooLarge("too many guard candidates for exhaustive search");
        std::vector<bool> target(m, false);
        for (std::size_t v : p1.source_index) target[v] = true;
        return brute_force(geom::vertex_visibility(p1.polygon), std::vector<bool>(m, true), target, k, caps);
    }
    auto p2 = geom::midpoint_refine(p1.polygon);
    const std::size_t m = p2.polygon.size();
    std::vector<bool> candidate(m, false);
    for (std::size_t v : p1.source_index) candidate[p2.source_index[v]] = true;
    return brute_force(geom::vertex_visibility(p2.polygon), candidate, std::vector<bool>(m, true), k, caps);
}

bool check_structured_conditions(const Workspace& w, const Guess& guess, std::span<const std::size_t> S) {
    const auto& dec = w.dec;
    const std::size_t m = dec.elements.size();
    if (guess.ig.size() != m || guess.og.size() != m || guess.how.size() != m) return false;

    std::vector<std::size_t> sorted(S.begin(), S.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t s : sorted)
        if (s >= w.size() || !w.candidate[s]) return false;

    // Condition 1, and the i-th smallest guard of each element.
    std::vector<std::vector<std::size_t>> in(m);
    for (std::size_t s : sorted)
        for (std::size_t x = 0; x < m; ++x)
            if (dec.elements[x].contains(s)) in[x].push_back(s);
    for (std::size_t x = 0; x < m; ++x)
        if (static_cast<int>(in[x].size()) != guess.ig[x]) return false;

    auto guard = [&](const GuardRef& r) -> std::optional<std::size_t> {
        if (r.element >= m || r.index < 0 || r.index >= guess.ig[r.element]) return std::nullopt;
        return in[r.element][static_cast<std::size_t>(r.index)];
    };

    for (std::size_t x = 0; x < m; ++x) {
        const auto& el = dec.elements[x];
        if (static_cast<int>(guess.how[x].size()) != guess.og[x]) return false;

        // Targets of the element, ascending.
        std::vector<std::size_t> targets;
        for (std::size_t v = el.lo; v <= el.hi; ++v)
            if (w.target[v]) targets.push_back(v);
        if (targets.empty()) continue;
        if (guess.og[x] < 1) return false;

        if (el.is_reflex()) {
            // Condition 2.
            auto g = guard(guess.how[x][0]);
            if (!g || !w.vis(*g, el.lo)) return false;
            continue;
        }

        // Positions (in `targets`) of the first and last target each chain guard sees.
        std::vector<long> first, last;
        for (const auto& ref : guess.how[x]) {
            auto g = guard(ref);
            if (!g) return false;
            long f = -1, l = -1;
            for (std::size_t p = 0; p < targets.size(); ++p) {
                if (!w.vis(*g, targets[p])) continue;
                if (f < 0) f = static_cast<long>(p);
                l = static_cast<long>(p);
            }
            first.push_back(f);
            last.push_back(l);
        }
        const std::size_t og = first.size();
        if (first[0] != 0) return false;                                          // 3a
        if (last[og - 1] != static_cast<long>(targets.size()) - 1) return false;  // 3c
        for (std::size_t t = 0; t + 1 < og; ++t) {                                // 3b
            long i = last[t], j = first[t + 1], q = last[t + 1];
            if (i < 0 || j < 0 || q < 0) return false;
            if (!(i >= j - 1 && i <= q - 1)) return false;
        }
    }
    return true;
}

namespace {

bool crossing(const geom::Point& a, const geom::Point& b, const geom::Point& c, const geom::Point& d) {
    return geom::segments_intersect(a, b, c, d);
}

/// Reverses tours segments until no two non-adjacent edges touch; false when the budget runs out.
bool untangle(std::vector<geom::Point>& pts, int budget) {
    const std::size_t n = pts.size();
    for (int step = 0; step < budget; ++step) {
        bool changed = false;
        for (std::size_t i = 0; i < n && !changed; ++i) {
            for (std::size_t j = i + 2; j < n && !changed; ++j) {
                if (i == 0 && j == n - 1) continue;
                if (!crossing(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n])) continue;
                std::reverse(pts.begin() + static_cast<std::ptrdiff_t>(i + 1),
                             pts.begin() + static_cast<std::ptrdiff_t>(j + 1));
                changed = true;
            }
        }
        if (!changed) return true;
    }
    return false;
}

std::vector<geom::Point> draw_points(int n, std::mt19937_64& rng) {
    const int grid = std::max(8, 2 * n);
    std::uniform_int_distribution<int> coord(0, grid - 1);
    std::vector<geom::Point> pts;
    int attempts = 0;
    while (static_cast<int>(pts.size()) < n) {
        if (++attempts > 100000) throw GenerationFailed("could not place points in general position");
        geom::Point p{Rational(2 * coord(rng) + 1), Rational(2 * coord(rng) + 1)};
        bool ok = std::find(pts.begin(), pts.end(), p) == pts.end();
        for (std::size_t a = 0; a < pts.size() && ok; ++a)
            for (std::size_t b = a + 1; b < pts.size() && ok; ++b)
                if (geom::orientation(pts[a], pts[b], p) == 0) ok = false;
        if (ok) pts.push_back(p);
    }
    return pts;
}

}  // namespace

geom::Polygon random_polygon(const PolygonParams& params) {
    if (params.n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    std::mt19937_64 rng(params.seed);
    std::optional<geom::Polygon> best;
    const int tries = params.target_reflex < 0 ? 1 : 400;
    int failures = 0;
    for (int attempt = 0; attempt < tries; ++attempt) {
        auto pts = draw_points(params.n, rng);
        std::shuffle(pts.begin(), pts.end(), rng);
        if (!untangle(pts, 20 * params.n * params.n)) {
            if (++failures > 50) throw GenerationFailed("2-opt untangling did not converge");
            --attempt;
            continue;
        }
        geom::Polygon p = geom::validate_polygon(std::move(pts));
        if (params.target_reflex < 0) return p;
        auto gap = [&](const geom::Polygon& q) {
            return std::abs(static_cast<int>(q.reflex_count()) - params.target_reflex);
        };
        if (!best || gap(p) < gap(*best)) best = std::move(p);
        if (gap(*best) == 0) break;
    }
    return *best;
}

}  // namespace gallery::oracle
