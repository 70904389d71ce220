#include "gallery/svg.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace gallery {

namespace {

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string render_svg(const geom::Polygon& polygon, std::span<const geom::Point> guards, const SvgOptions& options) {
    Rational min_x = polygon.vertex(0).x, max_x = min_x, min_y = polygon.vertex(0).y, max_y = min_y;
    for (const auto& p : polygon.vertices()) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double margin = 24;
    const double side = options.canvas - 2 * margin;
    Rational span = std::max(Rational(max_x - min_x), Rational(max_y - min_y));
    const double scale = side / to_double(span);
    // y grows downwards in SVG.
    auto X = [&](const geom::Point& p) { return margin + to_double(p.x - min_x) * scale; };
    auto Y = [&](const geom::Point& p) { return margin + to_double(max_y - p.y) * scale; };
    auto px = [&](const geom::Point& p) { return fixed(X(p)); };
    auto py = [&](const geom::Point& p) { return fixed(Y(p)); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.canvas << "\" height=\"" << options.canvas
        << "\" viewBox=\"0 0 " << options.canvas << ' ' << options.canvas << "\">\n";
    out << "<polygon points=\"";
    for (std::size_t i = 0; i < polygon.size(); ++i)
        out << (i ? " " : "") << px(polygon.vertex(i)) << ',' << py(polygon.vertex(i));
    out << "\" fill=\"#f4f1e8\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";

    if (options.visibility) {
        out << "<g stroke=\"#3b7dd8\" stroke-width=\"0.6\" stroke-opacity=\"0.6\">\n";
        for (const auto& g : guards)
            for (const auto& v : polygon.vertices()) {
                if (v == g || !geom::sees(polygon, g, v)) continue;
                out << "<line x1=\"" << px(g) << "\" y1=\"" << py(g) << "\" x2=\"" << px(v) << "\" y2=\"" << py(v)
                    << "\"/>\n";
            }
        out << "</g>\n";
    }

    out << "<g fill=\"#333\">\n";
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const auto& v = polygon.vertex(i);
        if (polygon.is_reflex(i)) continue;
        out << "<circle class=\"vertex\" cx=\"" << px(v) << "\" cy=\"" << py(v) << "\" r=\"2.5\"/>\n";
    }
    out << "</g>\n<g fill=\"#c0392b\">\n";
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        if (!polygon.is_reflex(i)) continue;
        const auto& v = polygon.vertex(i);
        out << "<rect class=\"reflex\" x=\"" << fixed(X(v) - 4) << "\" y=\"" << fixed(Y(v) - 4)
            << "\" width=\"8\" height=\"8\"/>\n";
    }
    out << "</g>\n<g fill=\"#1f5fbf\" stroke=\"#fff\" stroke-width=\"1\">\n";
    for (const auto& g : guards)
        out << "<circle class=\"guard\" cx=\"" << px(g) << "\" cy=\"" << py(g) << "\" r=\"6\"/>\n";
    out << "</g>\n";
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const auto& v = polygon.vertex(i);
        out << "<text x=\"" << fixed(X(v) + 5) << "\" y=\"" << fixed(Y(v) - 5)
            << "\" font-size=\"10\" font-family=\"monospace\">" << i + 1 << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace gallery
