#include "gallery/polygon_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace gallery::geom {

namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

std::string where(int line_no) {
    return "line " + std::to_string(line_no) + ": ";
}

}  // namespace

std::vector<Point> read_points(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no)) throw ParseError("empty polygon file");

    std::istringstream header(line);
    long long count = -1;
    std::string extra;
    if (!(header >> count) || (header >> extra) || count < 0)
        throw ParseError(where(line_no) + "expected a vertex count");

    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
        if (!next_content_line(in, line, line_no))
            throw ParseError("expected " + std::to_string(count) + " vertices, found " + std::to_string(i));
        std::istringstream fields(line);
        std::string xs, ys;
        if (!(fields >> xs >> ys) || (fields >> extra)) throw ParseError(where(line_no) + "expected `x y`");
        try {
            points.push_back(Point{parse_rational(xs), parse_rational(ys)});
        } catch (const std::invalid_argument& e) {
            throw ParseError(where(line_no) + e.what());
        }
    }
    if (next_content_line(in, line, line_no)) throw ParseError(where(line_no) + "trailing content");
    return points;
}

Polygon load_polygon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return validate_polygon(read_points(in));
}

void write_polygon(std::ostream& out, const std::vector<Point>& points) {
    out << points.size() << '\n';
    for (const auto& p : points) out << to_string(p.x) << ' ' << to_string(p.y) << '\n';
}

}  // namespace gallery::geom
