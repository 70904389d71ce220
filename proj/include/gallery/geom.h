#pragma once

#include "gallery/rational.h"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gallery::geom {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Lexicographic (x, then y).
bool lex_less(const Point& a, const Point& b);

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// Closed-segment membership for a point already known to be anywhere in the plane.
bool on_segment(const Point& p, const Point& a, const Point& b);

/// True when closed segments ab and cd share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

enum class GeometryErrorKind { NotSimple, DegeneratePolygon };

class GeometryError : public std::runtime_error {
public:
    GeometryError(GeometryErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    GeometryErrorKind kind() const { return kind_; }

private:
    GeometryErrorKind kind_;
};

/// Simple polygon, counter-clockwise, vertex 0 reflex whenever any vertex is.
/// Indices are 0-based internally; file formats and reports use 1-based.
class Polygon {
public:
    Polygon() = default;

    /// Wraps an already counter-clockwise simple boundary without re-validating it.
    /// Used for refinements of a validated polygon, where straight angles are legal.
    static Polygon from_trusted_ccw(std::vector<Point> boundary);

    std::size_t size() const { return vertices_.size(); }
    const Point& vertex(std::size_t i) const { return vertices_[i]; }
    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t next(std::size_t i) const { return i + 1 == size() ? 0 : i + 1; }
    std::size_t prev(std::size_t i) const { return i == 0 ? size() - 1 : i - 1; }

    bool is_reflex(std::size_t i) const { return reflex_[i] != 0; }
    std::vector<std::size_t> reflex_vertices() const;
    std::size_t reflex_count() const;

private:
    std::vector<Point> vertices_;
    std::vector<std::uint8_t> reflex_;
};

/// Validates a user polygon (either orientation) and brings it to canonical form.
Polygon validate_polygon(std::vector<Point> raw);

/// Closed point-in-polygon test; boundary points count as inside.
bool contains(const Polygon& polygon, const Point& p);

/// True iff the whole segment pq lies in the closed interior of the polygon.
bool sees(const Polygon& polygon, const Point& p, const Point& q);

/// Dense symmetric boolean matrix over a list of points.
class VisibilityMatrix {
public:
    VisibilityMatrix() = default;
    explicit VisibilityMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}

    std::size_t size() const { return n_; }
    bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool value) {
        bits_[i * n_ + j] = value;
        bits_[j * n_ + i] = value;
    }

    friend bool operator==(const VisibilityMatrix&, const VisibilityMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Pairwise `sees` over the given boundary points; rows are split across threads.
VisibilityMatrix visibility_table(const Polygon& polygon, std::span<const Point> points, int threads = 1);
/// Single-threaded reference for visibility_table.
VisibilityMatrix visibility_table_serial(const Polygon& polygon, std::span<const Point> points);
/// Visibility between the polygon's own vertices.
VisibilityMatrix vertex_visibility(const Polygon& polygon, int threads = 1);

struct EssentialSet {
    std::vector<Point> points;       // boundary order, starting at vertex 0
    std::vector<bool> is_original;   // parallel to points
};

/// Vertices plus every crossing of a vertex-pair line with an edge not lying on that line.
EssentialSet essential_set(const Polygon& polygon);

/// A polygon obtained by inserting boundary points into another one.
struct Refinement {
    Polygon polygon;
    std::vector<std::size_t> source_index;  // source vertex i sits at polygon vertex source_index[i]
};

/// Inserts the essential points into the boundary.
Refinement subdivide(const Polygon& polygon, const EssentialSet& extra);

/// Splits every edge once at its midpoint; source vertex i becomes vertex 2i.
Refinement midpoint_refine(const Polygon& polygon);

}  // namespace gallery::geom
