#pragma once

#include "gallery/geom.h"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace gallery::regions {

/// Marker for "sees nothing in the region".
inline constexpr int kNil = -1;

/// Contiguous run of vertex indices [lo, hi].
struct ConvexRegion {
    std::size_t lo = 0;
    std::size_t hi = 0;

    std::size_t size() const { return hi - lo + 1; }
    bool contains(std::size_t v) const { return lo <= v && v <= hi; }
    friend bool operator==(const ConvexRegion&, const ConvexRegion&) = default;
};

enum class ElementKind { Region, Reflex };

/// A maximal convex region or a single reflex vertex (lo == hi).
struct Element {
    ElementKind kind = ElementKind::Region;
    std::size_t lo = 0;
    std::size_t hi = 0;

    bool is_reflex() const { return kind == ElementKind::Reflex; }
    std::size_t size() const { return hi - lo + 1; }
    bool contains(std::size_t v) const { return lo <= v && v <= hi; }
    friend bool operator==(const Element&, const Element&) = default;
};

struct RegionDecomposition {
    std::vector<ConvexRegion> regions;       // by lo ascending
    std::vector<std::size_t> reflex;         // ascending
    std::vector<Element> elements;           // regions first, then reflex vertices
    std::vector<std::size_t> element_of;     // vertex -> element index
    std::vector<int> region_of;              // vertex -> region index, or -1 for reflex vertices

    std::size_t vertex_count() const { return element_of.size(); }
};

/// Raised by decompose when the polygon has no reflex vertex.
class ConvexPolygonShortcut : public std::runtime_error {
public:
    ConvexPolygonShortcut() : std::runtime_error("polygon is convex") {}
};

RegionDecomposition decompose(const geom::Polygon& polygon);
/// Same, from per-vertex reflex flags with flag 0 set.
RegionDecomposition decompose(const std::vector<bool>& reflex_flags);

/// first/last seen vertex of every region, for every vertex.
class ViewTable {
public:
    ViewTable() = default;
    ViewTable(std::size_t vertex_count, std::vector<ConvexRegion> regions);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t region_count() const { return regions_.size(); }
    const ConvexRegion& region(std::size_t c) const { return regions_[c]; }

    int first(std::size_t v, std::size_t c) const { return first_[v * regions_.size() + c]; }
    int last(std::size_t v, std::size_t c) const { return last_[v * regions_.size() + c]; }
    void set(std::size_t v, std::size_t c, int first, int last);

    friend bool operator==(const ViewTable&, const ViewTable&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<ConvexRegion> regions_;
    std::vector<int> first_;
    std::vector<int> last_;
};

/// first/last over all vertices of each region; with `targets`, only vertices flagged there count.
ViewTable view_table(const RegionDecomposition& dec, const geom::VisibilityMatrix& vis,
                     const std::vector<bool>* targets = nullptr);

/// True iff every vertex sees the whole stretch between its first and last vertex of each region.
bool check_contiguity(const ViewTable& views, const geom::VisibilityMatrix& vis);

enum class Orientation { NonDecreasing, NonIncreasing };

struct ViewOrientation {
    Orientation first = Orientation::NonDecreasing;
    Orientation last = Orientation::NonDecreasing;
    friend bool operator==(const ViewOrientation&, const ViewOrientation&) = default;
};

class NotMonotone : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Monotone-view test on a sequence with kNil holes: the non-Nil values follow `dir`,
/// and no Nil sits between two equal values.
bool is_monotone_view(std::span<const int> sequence, Orientation dir);

/// Orientation of a view sequence; NonDecreasing when both hold. Throws NotMonotone.
Orientation classify_sequence(std::span<const int> sequence);

/// How element `e` views region `c`, in both senses. Reflex sources are NonDecreasing by convention.
ViewOrientation classify_view(const ViewTable& views, const RegionDecomposition& dec, std::size_t e, std::size_t c);

/// Orientation of every (element, region) pair, indexed [e][c].
std::vector<std::vector<ViewOrientation>> classify_all(const ViewTable& views, const RegionDecomposition& dec);

const char* to_string(Orientation o);

/// One line per (element, region): `e C first-orientation last-orientation`, 1-based ranges.
void dump_views(std::ostream& out, const ViewTable& views, const RegionDecomposition& dec, bool full_tables = false);

}  // namespace gallery::regions
