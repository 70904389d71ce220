#include "gallery/workspace.h"

#include <algorithm>

namespace gallery {

const char* short_name(Variant v) {
    switch (v) {
        case Variant::VertexVertex: return "vv";
        case Variant::VertexBoundary: return "vb";
        case Variant::BoundaryVertex: return "bv";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view text) {
    if (text == "vv") return Variant::VertexVertex;
    if (text == "vb") return Variant::VertexBoundary;
    if (text == "bv") return Variant::BoundaryVertex;
    return std::nullopt;
}

int Workspace::ceil_rank(std::size_t v) const {
    auto it = std::lower_bound(by_rank.begin(), by_rank.end(), v);
    return static_cast<int>(it - by_rank.begin()) + 1;
}

int Workspace::floor_rank(std::size_t v) const {
    auto it = std::upper_bound(by_rank.begin(), by_rank.end(), v);
    return static_cast<int>(it - by_rank.begin());
}

int Workspace::next_target(std::size_t c, std::size_t a) const {
    const auto& ts = region_targets[c];
    auto it = std::upper_bound(ts.begin(), ts.end(), a);
    return it == ts.end() ? regions::kNil : static_cast<int>(*it);
}

std::size_t Workspace::candidates_in(std::size_t element) const {
    const auto& e = dec.elements[element];
    return static_cast<std::size_t>(floor_rank(e.hi) - ceil_rank(e.lo) + 1);
}

bool Workspace::has_targets(std::size_t element) const {
    const auto& e = dec.elements[element];
    if (e.is_reflex()) return target[e.lo];
    return !region_targets[element].empty();
}

Workspace build_annotated(const geom::Polygon& polygon, std::vector<bool> candidate, std::vector<bool> target,
                          int threads) {
    Workspace w;
    w.polygon = polygon;
    w.source = polygon;
    w.candidate = std::move(candidate);
    w.target = std::move(target);
    w.source_vertex.resize(polygon.size());
    for (std::size_t v = 0; v < polygon.size(); ++v) w.source_vertex[v] = static_cast<int>(v);

    for (std::size_t v = 0; v < polygon.size(); ++v)
        if (w.candidate[v]) w.by_rank.push_back(v);
    w.rank.assign(polygon.size(), 0);
    for (std::size_t r = 0; r < w.by_rank.size(); ++r) w.rank[w.by_rank[r]] = static_cast<int>(r) + 1;
    w.N = static_cast<int>(w.by_rank.size()) + 1;

    w.vis = geom::vertex_visibility(polygon, threads);
    w.convex = polygon.reflex_count() == 0;
    if (w.convex) return w;

    w.dec = regions::decompose(polygon);
    w.views = regions::view_table(w.dec, w.vis);
    w.target_views = regions::view_table(w.dec, w.vis, &w.target);
    w.orientation = regions::classify_all(w.views, w.dec);
    for (const auto& r : w.dec.regions) {
        std::vector<std::size_t> ts;
        for (std::size_t v = r.lo; v <= r.hi; ++v)
            if (w.target[v]) ts.push_back(v);
        w.region_targets.push_back(std::move(ts));
    }
    return w;
}

Workspace build_workspace(const geom::Polygon& polygon, Variant variant, int threads) {
    const std::size_t n = polygon.size();
    if (variant == Variant::VertexVertex) {
        Workspace w = build_annotated(polygon, std::vector<bool>(n, true), std::vector<bool>(n, true), threads);
        w.variant = variant;
        return w;
    }

    auto p1 = geom::subdivide(polygon, geom::essential_set(polygon));
    if (variant == Variant::BoundaryVertex) {
        std::vector<bool> target(p1.polygon.size(), false);
        for (std::size_t v : p1.source_index) target[v] = true;
        Workspace w = build_annotated(p1.polygon, std::vector<bool>(p1.polygon.size(), true), std::move(target), threads);
        w.variant = variant;
        w.source = polygon;
        w.source_vertex.assign(w.polygon.size(), -1);
        for (std::size_t v = 0; v < n; ++v) w.source_vertex[p1.source_index[v]] = static_cast<int>(v);
        return w;
    }

    auto p2 = geom::midpoint_refine(p1.polygon);
    std::vector<bool> candidate(p2.polygon.size(), false);
    std::vector<int> source_vertex(p2.polygon.size(), -1);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t at = p2.source_index[p1.source_index[v]];
        candidate[at] = true;
        source_vertex[at] = static_cast<int>(v);
    }
    Workspace w = build_annotated(p2.polygon, std::move(candidate), std::vector<bool>(p2.polygon.size(), true), threads);
    w.variant = variant;
    w.source = polygon;
    w.source_vertex = std::move(source_vertex);
    return w;
}

}  // namespace gallery
