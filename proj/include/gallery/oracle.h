#pragma once

#include "gallery/geom.h"
#include "gallery/guess.h"
#include "gallery/workspace.h"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace gallery::oracle {

struct OracleResult {
    bool yes = false;
    std::optional<std::vector<std::size_t>> witness;  // working-polygon vertices
    std::uint64_t explored = 0;                       // subsets tested
};

class TooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Caps {
    std::size_t candidates = 24;
    int k = 5;
};

/// Tries every candidate subset of size 0..k, smallest first, lexicographic within a size.
OracleResult brute_force(const geom::VisibilityMatrix& vis, const std::vector<bool>& candidate,
                         const std::vector<bool>& target, int k, const Caps& caps = {});

/// Builds the variant's working polygon straight from the geometry layer and runs the search on it.
OracleResult brute_force(const geom::Polygon& polygon, int k, Variant variant, const Caps& caps = {});

/// Checks conditions 1-3 of a structured instance for the guard set S, straight from the
/// visibility matrix and the definition.
bool check_structured_conditions(const Workspace& w, const Guess& guess, std::span<const std::size_t> S);

struct PolygonParams {
    int n = 3;
    int target_reflex = -1;  // best effort; negative means any
    std::uint64_t seed = 0;
};

class GenerationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Random simple polygon on an odd-coordinate grid, untangled by 2-opt moves.
geom::Polygon random_polygon(const PolygonParams& params);

}  // namespace gallery::oracle
