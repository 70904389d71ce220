#include "gallery/geom.h"

#include <algorithm>
#include <map>
#include <utility>

namespace gallery::geom {

bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

int orientation(const Point& a, const Point& b, const Point& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(cross);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

Polygon Polygon::from_trusted_ccw(std::vector<Point> boundary) {
    Polygon p;
    p.vertices_ = std::move(boundary);
    std::size_t n = p.vertices_.size();
    p.reflex_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        p.reflex_[i] = orientation(p.vertices_[p.prev(i)], p.vertices_[i], p.vertices_[p.next(i)]) < 0;
    return p;
}

std::vector<std::size_t> Polygon::reflex_vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (is_reflex(i)) out.push_back(i);
    return out;
}

std::size_t Polygon::reflex_count() const {
    return static_cast<std::size_t>(std::count(reflex_.begin(), reflex_.end(), 1));
}

namespace {

Rational twice_signed_area(const std::vector<Point>& pts) {
    Rational sum = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % pts.size()];
        sum += a.x * b.y - a.y * b.x;
    }
    return sum;
}

}  // namespace

Polygon validate_polygon(std::vector<Point> raw) {
    const std::size_t n = raw.size();
    if (n < 3) throw GeometryError(GeometryErrorKind::DegeneratePolygon, "polygon needs at least 3 vertices");
    for (auto& p : raw) {
        p.x.canonicalize();
        p.y.canonicalize();
    }

    auto sorted = raw;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw GeometryError(GeometryErrorKind::DegeneratePolygon, "repeated vertex");

    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(raw[(i + n - 1) % n], raw[i], raw[(i + 1) % n]) == 0)
            throw GeometryError(GeometryErrorKind::DegeneratePolygon,
                                "collinear consecutive vertices at index " + std::to_string(i + 1));
    }

    // Adjacent edges meet only at their shared vertex once no consecutive triple is collinear.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_intersect(raw[i], raw[i + 1], raw[j], raw[(j + 1) % n]))
                throw GeometryError(GeometryErrorKind::NotSimple,
                                    "edges " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " intersect");
        }
    }

    if (twice_signed_area(raw) < 0) std::reverse(raw.begin(), raw.end());

    Polygon probe = Polygon::from_trusted_ccw(raw);
    std::size_t start = 0;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!probe.is_reflex(i)) continue;
        if (!found || lex_less(raw[i], raw[start])) start = i;
        found = true;
    }
    std::rotate(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(start), raw.end());
    return Polygon::from_trusted_ccw(std::move(raw));
}

namespace {

bool on_boundary(const Polygon& polygon, const Point& p) {
    for (std::size_t i = 0; i < polygon.size(); ++i)
        if (on_segment(p, polygon.vertex(i), polygon.vertex(polygon.next(i)))) return true;
    return false;
}

}  // namespace

bool contains(const Polygon& polygon, const Point& p) {
    if (on_boundary(polygon, p)) return true;

    // Ray p + t(1, slope), t > 0. Retry slopes until no vertex lies on the supporting line.
    for (long step = 0;; ++step) {
        Rational slope(step, 97);
        Point ahead{p.x + 1, p.y + slope};
        bool clean = true;
        for (const auto& v : polygon.vertices()) {
            if (orientation(p, ahead, v) == 0) {
                clean = false;
                break;
            }
        }
        if (!clean) continue;

        bool inside = false;
        for (std::size_t i = 0; i < polygon.size(); ++i) {
            const Point& a = polygon.vertex(i);
            const Point& b = polygon.vertex(polygon.next(i));
            if (orientation(p, ahead, a) == orientation(p, ahead, b)) continue;
            // Parameter of the hit along the ray: cross(a - p, b - a) / cross(d, b - a).
            Rational ex = b.x - a.x, ey = b.y - a.y;
            Rational num = (a.x - p.x) * ey - (a.y - p.y) * ex;
            Rational den = ey - slope * ex;
            if (sgn(num) * sgn(den) > 0) inside = !inside;
        }
        return inside;
    }
}

bool sees(const Polygon& polygon, const Point& p, const Point& q) {
    if (p == q) return true;
    const bool use_x = p.x != q.x;
    auto param = [&](const Point& s) -> Rational {
        return use_x ? Rational((s.x - p.x) / (q.x - p.x)) : Rational((s.y - p.y) / (q.y - p.y));
    };

    std::vector<Rational> cuts{Rational(0), Rational(1)};
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Point& a = polygon.vertex(i);
        const Point& b = polygon.vertex(polygon.next(i));
        int o1 = orientation(p, q, a), o2 = orientation(p, q, b);
        int o3 = orientation(a, b, p), o4 = orientation(a, b, q);
        if (o1 * o2 < 0 && o3 * o4 < 0) return false;
        if (o1 == 0 && on_segment(a, p, q)) cuts.push_back(param(a));
        if (o2 == 0 && on_segment(b, p, q)) cuts.push_back(param(b));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational t = (cuts[i] + cuts[i + 1]) / 2;
        Point m{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
        if (!contains(polygon, m)) return false;
    }
    return true;
}

VisibilityMatrix visibility_table_serial(const Polygon& polygon, std::span<const Point> points) {
    const std::size_t n = points.size();
    VisibilityMatrix vis(n);
    for (std::size_t i = 0; i < n; ++i) {
        vis.set(i, i, true);
        for (std::size_t j = i + 1; j < n; ++j) vis.set(i, j, sees(polygon, points[i], points[j]));
    }
    return vis;
}

VisibilityMatrix visibility_table(const Polygon& polygon, std::span<const Point> points, int threads) {
    if (threads <= 1) return visibility_table_serial(polygon, points);
    const long n = static_cast<long>(points.size());
    VisibilityMatrix vis(points.size());
    // Each row writes cells (i, j) and (j, i) with j > i, so no two rows touch the same cell.
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < n; ++i) {
        vis.set(i, i, true);
        for (long j = i + 1; j < n; ++j) vis.set(i, j, sees(polygon, points[i], points[j]));
    }
    return vis;
}

VisibilityMatrix vertex_visibility(const Polygon& polygon, int threads) {
    return visibility_table(polygon, polygon.vertices(), threads);
}

namespace {

/// Boundary position of a point: (edge index, parameter in [0,1) along that edge).
using BoundaryKey = std::pair<std::size_t, Rational>;

struct KeyLess {
    bool operator()(const BoundaryKey& a, const BoundaryKey& b) const {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

BoundaryKey boundary_key(const Polygon& polygon, const Point& p) {
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Point& a = polygon.vertex(i);
        const Point& b = polygon.vertex(polygon.next(i));
        if (p == b) continue;  // belongs to the next edge at parameter 0
        if (!on_segment(p, a, b)) continue;
        Rational t = a.x != b.x ? Rational((p.x - a.x) / (b.x - a.x)) : Rational((p.y - a.y) / (b.y - a.y));
        return {i, t};
    }
    throw std::invalid_argument("point is not on the polygon boundary");
}

/// Ordered boundary points: all vertices plus the extra ones, deduplicated.
std::map<BoundaryKey, Point, KeyLess> boundary_points(const Polygon& polygon, std::span<const Point> extra) {
    std::map<BoundaryKey, Point, KeyLess> out;
    for (std::size_t i = 0; i < polygon.size(); ++i) out.emplace(BoundaryKey{i, Rational(0)}, polygon.vertex(i));
    for (const auto& p : extra) out.emplace(boundary_key(polygon, p), p);
    return out;
}

}  // namespace

EssentialSet essential_set(const Polygon& polygon) {
    const std::size_t n = polygon.size();
    std::vector<Point> crossings;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point& u = polygon.vertex(i);
            const Point& w = polygon.vertex(j);
            for (std::size_t e = 0; e < n; ++e) {
                const Point& a = polygon.vertex(e);
                const Point& b = polygon.vertex(polygon.next(e));
                int oa = orientation(u, w, a), ob = orientation(u, w, b);
                if (oa == 0 && ob == 0) continue;  // edge lies on the line
                if (oa * ob > 0) continue;
                if (oa == 0) {
                    crossings.push_back(a);
                } else if (ob == 0) {
                    crossings.push_back(b);
                } else {
                    // Solve a + t(b - a) on line uw.
                    Rational dx = w.x - u.x, dy = w.y - u.y;
                    Rational fa = dx * (a.y - u.y) - dy * (a.x - u.x);
                    Rational fb = dx * (b.y - u.y) - dy * (b.x - u.x);
                    Rational t = fa / (fa - fb);
                    crossings.push_back(Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
                }
            }
        }
    }
    EssentialSet out;
    for (auto& [key, p] : boundary_points(polygon, crossings)) {
        out.is_original.push_back(key.second == 0);
        out.points.push_back(p);
    }
    return out;
}

Refinement subdivide(const Polygon& polygon, const EssentialSet& extra) {
    Refinement out;
    out.source_index.assign(polygon.size(), 0);
    std::vector<Point> boundary;
    for (auto& [key, p] : boundary_points(polygon, extra.points)) {
        if (key.second == 0) out.source_index[key.first] = boundary.size();
        boundary.push_back(p);
    }
    out.polygon = Polygon::from_trusted_ccw(std::move(boundary));
    return out;
}

Refinement midpoint_refine(const Polygon& polygon) {
    Refinement out;
    std::vector<Point> boundary;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Point& a = polygon.vertex(i);
        const Point& b = polygon.vertex(polygon.next(i));
        out.source_index.push_back(boundary.size());
        boundary.push_back(a);
        boundary.push_back(Point{(a.x + b.x) / 2, (a.y + b.y) / 2});
    }
    out.polygon = Polygon::from_trusted_ccw(std::move(boundary));
    return out;
}

}  // namespace gallery::geom
