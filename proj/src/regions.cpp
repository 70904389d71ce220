#include "gallery/regions.h"

#include <ostream>

namespace gallery::regions {

RegionDecomposition decompose(const std::vector<bool>& reflex_flags) {
    const std::size_t n = reflex_flags.size();
    RegionDecomposition dec;
    for (std::size_t v = 0; v < n; ++v)
        if (reflex_flags[v]) dec.reflex.push_back(v);
    if (dec.reflex.empty()) throw ConvexPolygonShortcut();
    if (!reflex_flags[0]) throw std::invalid_argument("vertex 0 must be reflex");

    // Vertex 0 is reflex, so no run wraps around the end.
    for (std::size_t v = 1; v < n;) {
        if (reflex_flags[v]) {
            ++v;
            continue;
        }
        std::size_t hi = v;
        while (hi + 1 < n && !reflex_flags[hi + 1]) ++hi;
        dec.regions.push_back({v, hi});
        v = hi + 1;
    }

    dec.element_of.assign(n, 0);
    dec.region_of.assign(n, -1);
    for (std::size_t c = 0; c < dec.regions.size(); ++c) {
        const auto& r = dec.regions[c];
        dec.elements.push_back({ElementKind::Region, r.lo, r.hi});
        for (std::size_t v = r.lo; v <= r.hi; ++v) {
            dec.element_of[v] = c;
            dec.region_of[v] = static_cast<int>(c);
        }
    }
    for (std::size_t v : dec.reflex) {
        dec.element_of[v] = dec.elements.size();
        dec.elements.push_back({ElementKind::Reflex, v, v});
    }
    return dec;
}

RegionDecomposition decompose(const geom::Polygon& polygon) {
    std::vector<bool> flags(polygon.size());
    for (std::size_t v = 0; v < polygon.size(); ++v) flags[v] = polygon.is_reflex(v);
    return decompose(flags);
}

ViewTable::ViewTable(std::size_t vertex_count, std::vector<ConvexRegion> regions)
    : vertex_count_(vertex_count),
      regions_(std::move(regions)),
      first_(vertex_count * regions_.size(), kNil),
      last_(vertex_count * regions_.size(), kNil) {}

void ViewTable::set(std::size_t v, std::size_t c, int first, int last) {
    first_[v * regions_.size() + c] = first;
    last_[v * regions_.size() + c] = last;
}

ViewTable view_table(const RegionDecomposition& dec, const geom::VisibilityMatrix& vis,
                     const std::vector<bool>* targets) {
    ViewTable views(vis.size(), dec.regions);
    for (std::size_t v = 0; v < vis.size(); ++v) {
        for (std::size_t c = 0; c < dec.regions.size(); ++c) {
            int first = kNil, last = kNil;
            for (std::size_t t = dec.regions[c].lo; t <= dec.regions[c].hi; ++t) {
                if (targets && !(*targets)[t]) continue;
                if (!vis(v, t)) continue;
                if (first == kNil) first = static_cast<int>(t);
                last = static_cast<int>(t);
            }
            views.set(v, c, first, last);
        }
    }
    return views;
}

bool check_contiguity(const ViewTable& views, const geom::VisibilityMatrix& vis) {
    for (std::size_t v = 0; v < views.vertex_count(); ++v) {
        for (std::size_t c = 0; c < views.region_count(); ++c) {
            int first = views.first(v, c), last = views.last(v, c);
            if ((first == kNil) != (last == kNil)) return false;
            if (first == kNil) continue;
            for (int t = first; t <= last; ++t)
                if (!vis(v, static_cast<std::size_t>(t))) return false;
        }
    }
    return true;
}

bool is_monotone_view(std::span<const int> sequence, Orientation dir) {
    int prev = kNil;
    bool gap = false;
    for (int value : sequence) {
        if (value == kNil) {
            gap = prev != kNil;
            continue;
        }
        if (prev != kNil) {
            if (dir == Orientation::NonDecreasing ? value < prev : value > prev) return false;
            if (value == prev && gap) return false;
        }
        prev = value;
        gap = false;
    }
    return true;
}

Orientation classify_sequence(std::span<const int> sequence) {
    if (is_monotone_view(sequence, Orientation::NonDecreasing)) return Orientation::NonDecreasing;
    if (is_monotone_view(sequence, Orientation::NonIncreasing)) return Orientation::NonIncreasing;
    throw NotMonotone("view sequence is neither non-decreasing nor non-increasing");
}

ViewOrientation classify_view(const ViewTable& views, const RegionDecomposition& dec, std::size_t e, std::size_t c) {
    const Element& source = dec.elements[e];
    if (source.is_reflex()) return {};
    std::vector<int> firsts, lasts;
    for (std::size_t t = source.lo; t <= source.hi; ++t) {
        firsts.push_back(views.first(t, c));
        lasts.push_back(views.last(t, c));
    }
    try {
        return {classify_sequence(firsts), classify_sequence(lasts)};
    } catch (const NotMonotone&) {
        throw NotMonotone("element [" + std::to_string(source.lo + 1) + "," + std::to_string(source.hi + 1) +
                          "] does not view region [" + std::to_string(dec.regions[c].lo + 1) + "," +
                          std::to_string(dec.regions[c].hi + 1) + "] monotonically");
    }
}

std::vector<std::vector<ViewOrientation>> classify_all(const ViewTable& views, const RegionDecomposition& dec) {
    std::vector<std::vector<ViewOrientation>> out(dec.elements.size());
    for (std::size_t e = 0; e < dec.elements.size(); ++e)
        for (std::size_t c = 0; c < dec.regions.size(); ++c) out[e].push_back(classify_view(views, dec, e, c));
    return out;
}

const char* to_string(Orientation o) {
    return o == Orientation::NonDecreasing ? "non-decreasing" : "non-increasing";
}

namespace {

void print_range(std::ostream& out, std::size_t lo, std::size_t hi) {
    if (lo == hi)
        out << '[' << lo + 1 << ']';
    else
        out << '[' << lo + 1 << ',' << hi + 1 << ']';
}

void print_view(std::ostream& out, int value) {
    if (value == kNil)
        out << "nil";
    else
        out << value + 1;
}

}  // namespace

void dump_views(std::ostream& out, const ViewTable& views, const RegionDecomposition& dec, bool full_tables) {
    for (std::size_t e = 0; e < dec.elements.size(); ++e) {
        for (std::size_t c = 0; c < dec.regions.size(); ++c) {
            auto o = classify_view(views, dec, e, c);
            print_range(out, dec.elements[e].lo, dec.elements[e].hi);
            out << ' ';
            print_range(out, dec.regions[c].lo, dec.regions[c].hi);
            out << ' ' << to_string(o.first) << ' ' << to_string(o.last) << '\n';
        }
    }
    if (!full_tables) return;
    for (std::size_t v = 0; v < views.vertex_count(); ++v) {
        out << v + 1;
        for (std::size_t c = 0; c < views.region_count(); ++c) {
            out << ' ';
            print_view(out, views.first(v, c));
            out << ':';
            print_view(out, views.last(v, c));
        }
        out << '\n';
    }
}

}  // namespace gallery::regions
