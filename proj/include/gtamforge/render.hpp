#pragma once

#include <sstream>

#include "gtamforge/hindrance.hpp"

namespace gtam {

// ASCII tile-resolution view: one glyph per tile (first character of the tile
// name), '.' for empty cells, northernmost row first.
inline std::string render_ascii_tiles(const TileSystem& sys, const Supertile& st) {
    auto [lo, hi] = st.bbox();
    std::string out;
    for (int y = hi.y; y >= lo.y; --y) {
        for (int x = lo.x; x <= hi.x; ++x) {
            auto t = st.at(Pos{x, y});
            out += t ? sys.tiles[*t].name[0] : '.';
        }
        out += '\n';
    }
    return out;
}

// ASCII pixel-resolution view of a hindrance map, northernmost row first.
inline std::string render_ascii_pixels(const PixelMap& m) {
    std::string out;
    for (int j = m.max_y(); j >= m.min_y; --j) {
        for (int i = m.min_x; i <= m.max_x(); ++i) out += m.get(i, j) ? '#' : '.';
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::string color_for(const std::string& name) {
    static const char* palette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
    uint64_t h = 1469598103934665603ULL;
    for (char c : name) { h ^= static_cast<unsigned char>(c); h *= 1099511628211ULL; }
    return palette[h % 10];
}

} // namespace detail

// SVG of one or two hindrance maps at a relative translation of the first.
// Pixel-resolution; y grows upward, so rows are flipped for screen space.
inline std::string render_svg_pixels(const std::vector<std::pair<const PixelMap*, std::string>>& layers,
                                     std::vector<Translation> shifts = {}) {
    shifts.resize(layers.size());
    int lo_x = INT32_MAX, lo_y = INT32_MAX, hi_x = INT32_MIN, hi_y = INT32_MIN;
    for (size_t k = 0; k < layers.size(); ++k) {
        lo_x = std::min(lo_x, layers[k].first->min_x + shifts[k].dx);
        hi_x = std::max(hi_x, layers[k].first->max_x() + shifts[k].dx);
        lo_y = std::min(lo_y, layers[k].first->min_y + shifts[k].dy);
        hi_y = std::max(hi_y, layers[k].first->max_y() + shifts[k].dy);
    }
    const int cell = 4;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (hi_x - lo_x + 1) * cell
        << "\" height=\"" << (hi_y - lo_y + 1) * cell << "\">\n";
    for (size_t k = 0; k < layers.size(); ++k) {
        const auto& m = *layers[k].first;
        for (int j = m.min_y; j <= m.max_y(); ++j)
            for (int i = m.min_x; i <= m.max_x(); ++i)
                if (m.get(i, j)) {
                    int x = (i + shifts[k].dx - lo_x) * cell;
                    int y = (hi_y - (j + shifts[k].dy)) * cell;
                    svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\""
                        << cell << "\" fill=\"" << layers[k].second << "\" fill-opacity=\"0.7\"/>\n";
                }
    }
    svg << "</svg>\n";
    return svg.str();
}

// SVG tile-resolution view of an assembly, colored by tile name.
inline std::string render_svg_tiles(const TileSystem& sys, const Supertile& st) {
    auto [lo, hi] = st.bbox();
    const int cell = 8;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (hi.x - lo.x + 1) * cell
        << "\" height=\"" << (hi.y - lo.y + 1) * cell << "\">\n";
    for (auto& [p, t] : st.cells) {
        svg << "<rect x=\"" << (p.x - lo.x) * cell << "\" y=\"" << (hi.y - p.y) * cell << "\" width=\""
            << cell << "\" height=\"" << cell << "\" fill=\"" << detail::color_for(sys.tiles[t].name)
            << "\" stroke=\"#333\" stroke-width=\"0.5\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace gtam
