#pragma once

#include "gallery/geom.h"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace gallery::geom {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads the polygon text format: a count line, then one `x y` line per vertex.
/// Blank lines and lines starting with `#` are skipped.
std::vector<Point> read_points(std::istream& in);

/// Reads and validates a polygon file. Throws ParseError or GeometryError.
Polygon load_polygon(const std::string& path);

void write_polygon(std::ostream& out, const std::vector<Point>& points);

}  // namespace gallery::geom
