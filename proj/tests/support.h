#pragma once

#include "gallery/csp.h"
#include "gallery/geom.h"
#include "gallery/oracle.h"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gallery::testing {

/// Canonical a/b; GMP arithmetic requires canonical operands.
inline Rational frac(long a, long b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

inline geom::Point pt(long x, long y) {
    return {Rational(x), Rational(y)};
}

inline geom::Point pt_text(const char* x, const char* y) {
    return {parse_rational(x), parse_rational(y)};
}

inline std::vector<geom::Point> square_points() {
    return {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
}

/// Notch at (1,1); the only reflex vertex.
inline std::vector<geom::Point> l_shape_points() {
    return {pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)};
}

/// Deeper notch: (3,0) and (0,3) no longer see each other.
inline std::vector<geom::Point> deep_l_points() {
    return {pt(0, 0), pt(3, 0), pt(3, 1), pt(1, 1), pt(1, 3), pt(0, 3)};
}

/// Fan around an apex at the origin: spikes alternate between radius 10 and 6 along
/// directions (1, t), so every inner spike point is reflex and the apex sees everything.
inline std::vector<geom::Point> fan_points(int spikes) {
    std::vector<geom::Point> pts{pt(0, 0)};
    const int steps = 2 * spikes;
    for (int i = 0; i <= steps; ++i) {
        Rational t = frac(i, steps);
        Rational r = i % 2 == 0 ? Rational(10) : Rational(6);
        pts.push_back({r, r * t});
    }
    return pts;
}

/// n points on the unit circle (rational parametrization), with the listed vertices pulled
/// halfway to the centre so that each becomes reflex.
inline geom::Polygon dented_circle(int n, std::initializer_list<int> dents) {
    std::vector<geom::Point> pts;
    for (int i = 0; i < n; ++i) {
        Rational t = frac(2 * i - n, n + 1);
        Rational t2 = t * t;
        pts.push_back({2 * t / (1 + t2), (1 - t2) / (1 + t2)});
    }
    for (int i : dents) {
        pts[static_cast<std::size_t>(i)].x /= 2;
        pts[static_cast<std::size_t>(i)].y /= 2;
    }
    return geom::validate_polygon(std::move(pts));
}

struct CorpusEntry {
    std::uint64_t seed;
    int n;
    geom::Polygon polygon;
};

/// Deterministic corpus of random simple polygons with 3 <= n <= 12 and 1 <= r <= 4.
inline std::vector<CorpusEntry> corpus(std::size_t count) {
    std::vector<CorpusEntry> out;
    for (std::uint64_t seed = 1; out.size() < count; ++seed) {
        int n = 4 + static_cast<int>(seed % 9);
        auto p = oracle::random_polygon({n, 1 + static_cast<int>(seed % 4), seed});
        if (p.reflex_count() < 1 || p.reflex_count() > 4) continue;
        out.push_back({seed, n, std::move(p)});
    }
    return out;
}

/// Random monotone 2-CSP instance; tables are sorted uniform samples, ascending or descending.
inline csp::CspInstance random_csp(std::mt19937_64& rng, std::size_t max_vars = 4, int max_N = 8) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    csp::CspInstance inst;
    inst.var_count = static_cast<std::size_t>(pick(1, static_cast<int>(max_vars)));
    inst.N = pick(0, max_N);
    const int count = pick(0, 6);
    for (int i = 0; i < count; ++i) {
        auto lhs = static_cast<std::size_t>(pick(0, static_cast<int>(inst.var_count) - 1));
        auto cmp = pick(0, 1) == 0 ? csp::Cmp::Le : csp::Cmp::Ge;
        if (inst.var_count == 1 || pick(0, 2) == 0) {
            inst.constraints.push_back(csp::Constraint::constant(lhs, cmp, pick(0, inst.N)));
            continue;
        }
        std::size_t var = lhs;
        while (var == lhs) var = static_cast<std::size_t>(pick(0, static_cast<int>(inst.var_count) - 1));
        std::vector<int> table;
        for (int d = 0; d <= inst.N; ++d) table.push_back(pick(0, inst.N));
        auto dir = pick(0, 1) == 0 ? csp::Direction::NonDecreasing : csp::Direction::NonIncreasing;
        std::sort(table.begin(), table.end());
        if (dir == csp::Direction::NonIncreasing) std::reverse(table.begin(), table.end());
        inst.constraints.push_back(csp::Constraint::function(lhs, cmp, var, std::move(table), dir));
    }
    return inst;
}

/// Tries all (N+1)^|X| assignments.
inline bool csp_satisfiable_by_enumeration(const csp::CspInstance& inst) {
    csp::Assignment alpha(inst.var_count, 0);
    while (true) {
        if (csp::satisfies(inst, alpha)) return true;
        std::size_t i = 0;
        while (i < alpha.size() && alpha[i] == inst.N) alpha[i++] = 0;
        if (i == alpha.size()) return false;
        ++alpha[i];
    }
}

/// Random 2-CNF over 1..max_vars variables.
inline csp::TwoSatInstance random_2sat(std::mt19937_64& rng, std::size_t max_vars = 12) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    csp::TwoSatInstance ts;
    ts.var_count = static_cast<std::size_t>(pick(1, static_cast<int>(max_vars)));
    const int count = pick(0, 3 * static_cast<int>(ts.var_count));
    auto lit = [&]() {
        auto v = static_cast<std::size_t>(pick(0, static_cast<int>(ts.var_count) - 1));
        return pick(0, 1) == 0 ? csp::Lit::pos(v) : csp::Lit::neg(v);
    };
    for (int i = 0; i < count; ++i) ts.add(lit(), lit());
    return ts;
}

inline bool clause_holds(const csp::Clause& c, const std::vector<bool>& model) {
    auto value = [&](csp::Lit l) { return model[l.var()] != l.negated(); };
    return value(c.first) || value(c.second);
}

inline bool model_satisfies(const csp::TwoSatInstance& ts, const std::vector<bool>& model) {
    if (ts.trivially_unsat) return false;
    return std::all_of(ts.clauses.begin(), ts.clauses.end(), [&](const auto& c) { return clause_holds(c, model); });
}

/// Tries all 2^n truth maps.
inline bool two_sat_by_enumeration(const csp::TwoSatInstance& ts) {
    std::vector<bool> model(ts.var_count, false);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << ts.var_count); ++bits) {
        for (std::size_t v = 0; v < ts.var_count; ++v) model[v] = (bits >> v) & 1U;
        if (model_satisfies(ts, model)) return true;
    }
    return false;
}

inline std::string data_path(const std::string& name) {
    return std::string(GALLERY_TEST_DATA) + "/" + name;
}

}  // namespace gallery::testing
