#pragma once

#include "gallery/geom.h"
#include "gallery/regions.h"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gallery {

enum class Variant { VertexVertex, VertexBoundary, BoundaryVertex };

/// "vv", "vb", "bv".
const char* short_name(Variant v);
std::optional<Variant> parse_variant(std::string_view text);

/// The polygon a variant actually works on, annotated with which vertices may hold guards
/// and which must be seen, plus every table the solver reads.
struct Workspace {
    Variant variant = Variant::VertexVertex;
    geom::Polygon source;                  // polygon as given
    geom::Polygon polygon;                 // P, its essential subdivision, or that split once more
    std::vector<bool> candidate;           // may hold a guard
    std::vector<bool> target;              // must be seen
    std::vector<int> source_vertex;        // working vertex -> source vertex, or -1

    geom::VisibilityMatrix vis;
    bool convex = false;                   // no reflex vertex; tables below stay empty
    regions::RegionDecomposition dec;
    regions::ViewTable views;              // over all vertices of each region
    regions::ViewTable target_views;       // over target vertices of each region only
    std::vector<std::vector<regions::ViewOrientation>> orientation;  // [element][region]

    // Candidate ranks: the solver's value domain is 0..N with candidates at 1..N-1.
    std::vector<int> rank;                 // vertex -> rank, 0 when not a candidate
    std::vector<std::size_t> by_rank;      // rank - 1 -> vertex
    int N = 0;

    std::vector<std::vector<std::size_t>> region_targets;  // per region, ascending

    std::size_t size() const { return polygon.size(); }
    std::size_t reflex_count() const { return dec.reflex.size(); }
    /// Rank of the smallest candidate >= v (N when none).
    int ceil_rank(std::size_t v) const;
    /// Rank of the largest candidate <= v (0 when none).
    int floor_rank(std::size_t v) const;
    /// Next target of region c after vertex a, or kNil.
    int next_target(std::size_t c, std::size_t a) const;
    /// Candidate count inside an element.
    std::size_t candidates_in(std::size_t element) const;
    /// Whether element needs covering at all.
    bool has_targets(std::size_t element) const;
};

/// Builds the working polygon for the variant and all derived tables.
Workspace build_workspace(const geom::Polygon& polygon, Variant variant, int threads = 1);

/// Annotated form over an arbitrary canonical polygon.
Workspace build_annotated(const geom::Polygon& polygon, std::vector<bool> candidate, std::vector<bool> target,
                          int threads = 1);

}  // namespace gallery
