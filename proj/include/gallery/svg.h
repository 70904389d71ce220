#pragma once

#include "gallery/geom.h"

#include <span>
#include <string>

namespace gallery {

struct SvgOptions {
    bool visibility = false;  // draw a segment from each guard to every vertex it sees
    int canvas = 512;
};

/// Polygon outline, reflex vertices as squares, guards as filled circles.
/// Output depends only on the inputs (fixed transform from the bounding box, fixed element order).
std::string render_svg(const geom::Polygon& polygon, std::span<const geom::Point> guards, const SvgOptions& options = {});

}  // namespace gallery
