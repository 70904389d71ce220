#include <catch2/catch_amalgamated.hpp>

#include "gallery/geom.h"
#include "gallery/polygon_io.h"
#include "gallery/rational.h"
#include "support.h"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

using namespace gallery;
using namespace gallery::geom;
using gallery::testing::pt;
using gallery::testing::pt_text;

namespace {

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

/// Whether direction d leaves vertex v into the closed interior, judged from the two incident edges.
bool in_cone(const Polygon& p, std::size_t v, const Point& d) {
    const Point& at = p.vertex(v);
    Point a = sub(p.vertex(p.next(v)), at);
    Point b = sub(p.vertex(p.prev(v)), at);
    int turn = orientation(p.vertex(p.prev(v)), at, p.vertex(p.next(v)));
    if (turn > 0) return sgn(cross(a, d)) >= 0 && sgn(cross(d, b)) >= 0;
    if (turn == 0) return sgn(cross(a, d)) >= 0;
    return !(sgn(cross(b, d)) > 0 && sgn(cross(d, a)) > 0);
}

/// Visibility between two boundary points from local cone tests: pq stays inside iff it crosses
/// no edge transversally and enters the interior at every vertex it touches; an endpoint inside an
/// edge must head into the left half-plane of that edge.
bool sees_by_cones(const Polygon& poly, const Point& p, const Point& q) {
    if (p == q) return true;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point &a = poly.vertex(i), &b = poly.vertex(poly.next(i));
        int o1 = orientation(p, q, a), o2 = orientation(p, q, b);
        int o3 = orientation(a, b, p), o4 = orientation(a, b, q);
        if (o1 * o2 < 0 && o3 * o4 < 0) return false;
    }
    for (std::size_t v = 0; v < n; ++v) {
        const Point& at = poly.vertex(v);
        if (!on_segment(at, p, q)) continue;
        if (at != q && !in_cone(poly, v, sub(q, at))) return false;
        if (at != p && !in_cone(poly, v, sub(p, at))) return false;
    }
    for (const Point* end : {&p, &q}) {
        const Point& other = end == &p ? q : p;
        for (std::size_t i = 0; i < n; ++i) {
            const Point &a = poly.vertex(i), &b = poly.vertex(poly.next(i));
            if (*end == a || *end == b || !on_segment(*end, a, b)) continue;
            if (orientation(a, b, other) < 0) return false;
        }
    }
    return true;
}

/// Every line through two vertices met with every edge, by Cramer's rule on the two supporting lines.
std::set<std::pair<Rational, Rational>> essential_by_lines(const Polygon& p) {
    std::set<std::pair<Rational, Rational>> out;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) out.insert({p.vertex(i).x, p.vertex(i).y});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Point u = p.vertex(i), dir = sub(p.vertex(j), u);
            for (std::size_t e = 0; e < n; ++e) {
                Point a = p.vertex(e), ab = sub(p.vertex(p.next(e)), a);
                Rational det = cross(dir, ab);
                if (det == 0) continue;  // parallel or on the line
                Rational s = cross(sub(a, u), ab) / det;  // position along the line
                Rational t = cross(sub(a, u), dir) / det; // position along the edge
                if (t < 0 || t > 1) continue;
                out.insert({u.x + s * dir.x, u.y + s * dir.y});
            }
        }
    }
    return out;
}

/// Boundary point at parameter t of edge e.
Point on_edge(const Polygon& p, std::size_t e, const Rational& t) {
    const Point &a = p.vertex(e), &b = p.vertex(p.next(e));
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

bool on_boundary(const Polygon& p, const Point& q) {
    for (std::size_t e = 0; e < p.size(); ++e)
        if (on_segment(q, p.vertex(e), p.vertex(p.next(e)))) return true;
    return false;
}

}  // namespace

TEST_CASE("rational parsing accepts integers, fractions and decimals", "[rational]") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-3/6") == testing::frac(-1, 2));
    CHECK(parse_rational("1.25") == testing::frac(5, 4));
    CHECK(parse_rational("-0.5") == testing::frac(-1, 2));
    CHECK(parse_rational("010") == 10);
    CHECK(parse_rational("08/09") == testing::frac(8, 9));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7");
    for (const char* bad : {"", "abc", "1/0", "1.2.3", "1/", "/2", "1e5"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("rationals stay canonical under arithmetic", "[rational]") {
    Rational a = parse_rational("2/6") + parse_rational("-4/6");
    CHECK(a.get_den() > 0);
    CHECK(a == testing::frac(-1, 3));
    CHECK(to_string(parse_rational("1/3") * 3) == "1");
}

TEST_CASE("validate_polygon classifies and rotates", "[geom]") {
    SECTION("unit square is convex") {
        auto sq = validate_polygon(testing::square_points());
        CHECK(sq.size() == 4);
        CHECK(sq.reflex_count() == 0);
    }
    SECTION("L-shape puts its notch first") {
        auto l = validate_polygon(testing::l_shape_points());
        CHECK(l.vertex(0) == pt(1, 1));
        CHECK(l.reflex_vertices() == std::vector<std::size_t>{0});
    }
    SECTION("clockwise input is reversed") {
        auto raw = testing::l_shape_points();
        std::reverse(raw.begin(), raw.end());
        auto l = validate_polygon(raw);
        CHECK(l.vertex(0) == pt(1, 1));
        CHECK(l.vertex(1) == pt(1, 2));
        CHECK(l.reflex_count() == 1);
    }
}

TEST_CASE("validate_polygon rejects bad boundaries", "[geom]") {
    auto kind_of = [](std::vector<Point> raw) {
        try {
            validate_polygon(std::move(raw));
        } catch (const GeometryError& e) {
            return e.kind();
        }
        FAIL("accepted");
        return GeometryErrorKind::NotSimple;
    };
    CHECK(kind_of({pt(0, 0), pt(1, 1), pt(1, 0), pt(0, 1)}) == GeometryErrorKind::NotSimple);
    CHECK(kind_of({pt(0, 0), pt(1, 0), pt(1, 0), pt(0, 1)}) == GeometryErrorKind::DegeneratePolygon);
    CHECK(kind_of({pt(0, 0), pt(1, 1), pt(2, 2)}) == GeometryErrorKind::DegeneratePolygon);
    CHECK(kind_of({pt(0, 0), pt(1, 0)}) == GeometryErrorKind::DegeneratePolygon);
    CHECK(kind_of({pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1)}) == GeometryErrorKind::DegeneratePolygon);
    // Non-adjacent edges touching at a point.
    CHECK(kind_of({pt(0, 0), pt(4, 0), pt(4, 4), pt(2, 0), pt(0, 4)}) == GeometryErrorKind::NotSimple);
}

TEST_CASE("sees on the small examples", "[geom]") {
    auto sq = validate_polygon(testing::square_points());
    CHECK(sees(sq, pt(0, 0), pt(1, 1)));
    auto l = validate_polygon(testing::l_shape_points());
    CHECK(sees(l, pt(2, 0), pt(0, 2)));
    CHECK_FALSE(sees(l, pt(2, 1), pt(1, 2)));
    CHECK(sees(l, pt(2, 1), pt(2, 1)));
    auto deep = validate_polygon(testing::deep_l_points());
    CHECK_FALSE(sees(deep, pt(3, 0), pt(0, 3)));
    CHECK(sees(deep, pt(3, 0), pt(0, 0)));
}

TEST_CASE("sees agrees with the local cone oracle", "[geom][property]") {
    std::mt19937_64 rng(11);
    for (const auto& entry : testing::corpus(60)) {
        const Polygon& p = entry.polygon;
        std::vector<Point> pts = p.vertices();
        std::uniform_int_distribution<std::size_t> edge(0, p.size() - 1);
        std::uniform_int_distribution<int> num(1, 6);
        for (int s = 0; s < 4; ++s) pts.push_back(on_edge(p, edge(rng), testing::frac(num(rng), 7)));
        for (const auto& a : pts)
            for (const auto& b : pts) {
                INFO("seed " << entry.seed);
                REQUIRE(sees(p, a, b) == sees_by_cones(p, a, b));
                REQUIRE(sees(p, a, b) == sees(p, b, a));
            }
    }
}

TEST_CASE("visibility is invariant under rational scaling and translation", "[geom][property]") {
    const Rational scale(7, 3), dx(-5, 2), dy(11);
    for (const auto& entry : testing::corpus(40)) {
        std::vector<Point> moved;
        for (const auto& v : entry.polygon.vertices()) moved.push_back({v.x * scale + dx, v.y * scale + dy});
        auto q = validate_polygon(moved);
        REQUIRE(q.vertex(0) == moved[0]);
        CHECK(vertex_visibility(entry.polygon) == vertex_visibility(q));
    }
}

TEST_CASE("visibility_table basics", "[geom]") {
    auto sq = validate_polygon(testing::square_points());
    auto vs = vertex_visibility(sq);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(vs(i, j));

    auto l = validate_polygon(testing::l_shape_points());
    auto vl = vertex_visibility(l);
    for (std::size_t j = 0; j < l.size(); ++j) CHECK(vl(0, j));
    CHECK_FALSE(vl(1, 5));
}

TEST_CASE("visibility tables on random polygons", "[geom][property]") {
    for (const auto& entry : testing::corpus(80)) {
        const Polygon& p = entry.polygon;
        auto serial = visibility_table_serial(p, p.vertices());
        auto parallel = visibility_table(p, p.vertices(), 4);
        REQUIRE(serial == parallel);
        std::vector<bool> seen(p.size(), false);
        for (std::size_t v = 0; v < p.size(); ++v) {
            CHECK(serial(v, v));
            CHECK(serial(v, p.next(v)));
            CHECK(serial(v, p.prev(v)));
            for (std::size_t y : p.reflex_vertices())
                if (serial(y, v)) seen[v] = true;
        }
        // Every vertex is seen by some reflex vertex.
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        // Convex polygons see everything.
        std::vector<Point> ring;
        const int n = 3 + static_cast<int>(seed);
        for (int i = 0; i < n; ++i) {
            Rational t(2 * i - n, n + 1);
            ring.push_back({(1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)});
        }
        auto p = validate_polygon(ring);
        REQUIRE(p.reflex_count() == 0);
        auto vis = vertex_visibility(p);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j) CHECK(vis(i, j));
    }
}

TEST_CASE("essential_set on small polygons", "[geom]") {
    auto tri = validate_polygon({pt(0, 0), pt(4, 0), pt(1, 3)});
    auto et = essential_set(tri);
    CHECK(et.points == tri.vertices());
    auto sq = validate_polygon(testing::square_points());
    CHECK(essential_set(sq).points == sq.vertices());

    auto l = validate_polygon(testing::l_shape_points());
    auto el = essential_set(l);
    // The line through (1,1) and (0,2) leaves through (2,0); through (1,1) and (1,2) it meets (1,0).
    CHECK(std::find(el.points.begin(), el.points.end(), pt(1, 0)) != el.points.end());
    CHECK(std::find(el.points.begin(), el.points.end(), pt(0, 1)) != el.points.end());
}

TEST_CASE("essential_set matches the pairwise line oracle", "[geom][property]") {
    for (const auto& entry : testing::corpus(60)) {
        const Polygon& p = entry.polygon;
        auto ess = essential_set(p);
        std::set<std::pair<Rational, Rational>> got;
        for (const auto& q : ess.points) got.insert({q.x, q.y});
        REQUIRE(got.size() == ess.points.size());
        CHECK(got == essential_by_lines(p));

        std::size_t originals = 0;
        for (std::size_t i = 0; i < ess.points.size(); ++i) {
            CHECK(on_boundary(p, ess.points[i]));
            bool vertex = std::find(p.vertices().begin(), p.vertices().end(), ess.points[i]) != p.vertices().end();
            CHECK(vertex == static_cast<bool>(ess.is_original[i]));
            originals += vertex;
        }
        CHECK(originals == p.size());
        CHECK(ess.points.front() == p.vertex(0));
    }
}

TEST_CASE("subdivide keeps the boundary curve", "[geom]") {
    auto tri = validate_polygon({pt(0, 0), pt(4, 0), pt(1, 3)});
    auto same = subdivide(tri, essential_set(tri));
    CHECK(same.polygon.vertices() == tri.vertices());

    auto sq = validate_polygon(testing::square_points());
    EssentialSet extra{sq.vertices(), {true, true, true, true}};
    extra.points.insert(extra.points.begin() + 1, pt_text("1/2", "0"));
    extra.is_original.insert(extra.is_original.begin() + 1, false);
    auto five = subdivide(sq, extra);
    REQUIRE(five.polygon.size() == 5);
    CHECK(five.polygon.reflex_count() == 0);
    CHECK(orientation(five.polygon.vertex(0), five.polygon.vertex(1), five.polygon.vertex(2)) == 0);

    std::mt19937_64 rng(5);
    for (const auto& entry : testing::corpus(40)) {
        const Polygon& p = entry.polygon;
        auto p1 = subdivide(p, essential_set(p));
        std::vector<std::size_t> mapped_reflex;
        for (std::size_t v : p.reflex_vertices()) mapped_reflex.push_back(p1.source_index[v]);
        CHECK(p1.polygon.reflex_vertices() == mapped_reflex);
        for (std::size_t v = 0; v < p.size(); ++v) CHECK(p1.polygon.vertex(p1.source_index[v]) == p.vertex(v));
        std::uniform_int_distribution<std::size_t> e0(0, p.size() - 1), e1(0, p1.polygon.size() - 1);
        std::uniform_int_distribution<int> num(0, 12);
        for (int s = 0; s < 20; ++s) {
            CHECK(on_boundary(p1.polygon, on_edge(p, e0(rng), testing::frac(num(rng), 12))));
            CHECK(on_boundary(p, on_edge(p1.polygon, e1(rng), testing::frac(num(rng), 12))));
        }
    }
}

TEST_CASE("midpoint_refine doubles the boundary", "[geom]") {
    auto tri = validate_polygon({pt(0, 0), pt(4, 0), pt(1, 3)});
    auto hex = midpoint_refine(tri);
    REQUIRE(hex.polygon.size() == 6);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(hex.source_index[i] == 2 * i);
        CHECK(hex.polygon.vertex(2 * i) == tri.vertex(i));
    }
    CHECK(hex.polygon.vertex(1) == pt(2, 0));

    auto oct = midpoint_refine(validate_polygon(testing::square_points())).polygon;
    REQUIRE(oct.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
        int turn = orientation(oct.vertex(oct.prev(i)), oct.vertex(i), oct.vertex(oct.next(i)));
        CHECK(turn == (i % 2 == 0 ? 1 : 0));
    }

    for (const auto& entry : testing::corpus(30)) {
        auto p1 = subdivide(entry.polygon, essential_set(entry.polygon)).polygon;
        auto p2 = midpoint_refine(p1);
        CHECK(p2.polygon.size() == 2 * p1.size());
        std::vector<std::size_t> mapped;
        for (std::size_t v : p1.reflex_vertices()) mapped.push_back(2 * v);
        CHECK(p2.polygon.reflex_vertices() == mapped);
    }
}

TEST_CASE("polygon text format", "[io]") {
    std::istringstream in("# a comment\n4\n\n0 0\n1.5 0\n3/2 1\n0 1\n");
    auto pts = read_points(in);
    REQUIRE(pts.size() == 4);
    CHECK(pts[1] == pt_text("3/2", "0"));

    std::ostringstream out;
    write_polygon(out, pts);
    std::istringstream back(out.str());
    CHECK(read_points(back) == pts);

    for (const char* bad : {"", "3\n0 0\n1 0\n", "x\n", "3\n0 0\n1 x\n0 1\n", "3\n0 0 0\n1 0\n0 1\n",
                            "-1\n", "3\n0 0\n1 0\n0 1\n5 5\n"}) {
        std::istringstream s(bad);
        CHECK_THROWS_AS(read_points(s), ParseError);
    }
    CHECK_THROWS_AS(load_polygon("/nonexistent/file.poly"), ParseError);
    auto l = load_polygon(testing::data_path("l_shape.poly"));
    CHECK(l.reflex_count() == 1);
}
