#pragma once

#include "gtamforge/core.hpp"

namespace gtam {

// Pixel-resolution occupancy with an origin offset. Pixel (i,j) is stored at
// grid cell (i - min_x, j - min_y).
struct PixelMap {
    int min_x = 0, min_y = 0;
    BitGrid grid;

    bool get(int i, int j) const {
        int c = i - min_x, r = j - min_y;
        return grid.in_bounds(c, r) && grid.get(c, r);
    }
    void set(int i, int j) { grid.set(i - min_x, j - min_y); }
    int count() const { return grid.count(); }
    int max_x() const { return min_x + grid.cols() - 1; }
    int max_y() const { return min_y + grid.rows() - 1; }

    // Any overlap between this map shifted by (dx,dy) and the other map.
    bool overlaps_shifted(const PixelMap& o, int dx, int dy) const {
        int alo_x = min_x + dx, ahi_x = max_x() + dx;
        int alo_y = min_y + dy, ahi_y = max_y() + dy;
        int lo_x = std::max(alo_x, o.min_x), hi_x = std::min(ahi_x, o.max_x());
        int lo_y = std::max(alo_y, o.min_y), hi_y = std::min(ahi_y, o.max_y());
        if (lo_x > hi_x || lo_y > hi_y) return false;
        for (int j = lo_y; j <= hi_y; ++j) {
            const uint64_t* arow = grid.words().data() +
                                   static_cast<size_t>(j - dy - min_y) * grid.words_per_row();
            const uint64_t* brow = o.grid.words().data() +
                                   static_cast<size_t>(j - o.min_y) * o.grid.words_per_row();
            // Compare columns [lo_x, hi_x]; a-column c_a = i - dx - min_x,
            // b-column c_b = i - o.min_x. Walk 64 columns at a time on b.
            int ca0 = lo_x - dx - min_x, cb0 = lo_x - o.min_x, len = hi_x - lo_x + 1;
            int k = 0;
            while (k < len) {
                int cb = cb0 + k;
                int word = cb / 64, bit = cb % 64;
                int chunk = std::min(64 - bit, len - k);
                uint64_t bw = (brow[word] >> bit);
                if (chunk < 64) bw &= (chunk == 64) ? ~0ULL : ((1ULL << chunk) - 1);
                if (bw) {
                    // Gather the matching a-bits.
                    int ca = ca0 + k;
                    int aw = ca / 64, ab = ca % 64;
                    uint64_t av = arow[aw] >> ab;
                    if (ab && aw + 1 < grid.words_per_row()) av |= arow[aw + 1] << (64 - ab);
                    if (chunk < 64) av &= ((chunk == 64) ? ~0ULL : ((1ULL << chunk) - 1));
                    if (av & bw) return true;
                }
                k += chunk;
            }
        }
        return false;
    }
};

// Builds the hindrance map of a supertile: for every tile at (x,y) the body
// block plus the four face-geometry bands. Bands of abutting faces coincide;
// a cell is set once regardless of how many faces fill it.
//
// Pixel layout for a tile at (x,y) with pitch p = w + l:
//   body:  [xp+w, xp+w+l) x [yp+w, yp+w+l)
//   west:  [xp,   xp+w)   x [yp+w, yp+w+l)   cell (c,r) of the west geometry
//   east:  [(x+1)p, (x+1)p+w) x same rows    cell (c,r) of the east geometry
//   south: [xp+w, xp+w+l) x [yp,   yp+w)
//   north: same cols x [(y+1)p, (y+1)p+w)
inline PixelMap hindrance_map(const TileSystem& sys, const Supertile& st) {
    int w = sys.w, l = sys.l, p = w + l;
    auto [lo, hi] = st.bbox();
    PixelMap m;
    m.min_x = lo.x * p;
    m.min_y = lo.y * p;
    int width = (hi.x - lo.x + 1) * p + w;
    int height = (hi.y - lo.y + 1) * p + w;
    m.grid = BitGrid(width, height);

    for (auto& [pos, t] : st.cells) {
        int bx = pos.x * p + w, by = pos.y * p + w;
        for (int j = 0; j < l; ++j)
            for (int i = 0; i < l; ++i) m.set(bx + i, by + j);
        auto wg = sys.face(t, W);
        for (int r = 0; r < l; ++r)
            for (int c = 0; c < w; ++c)
                if (wg.filled(c, r)) m.set(pos.x * p + c, by + r);
        auto eg = sys.face(t, E);
        for (int r = 0; r < l; ++r)
            for (int c = 0; c < w; ++c)
                if (eg.filled(c, r)) m.set((pos.x + 1) * p + c, by + r);
        auto sg = sys.face(t, S);
        for (int r = 0; r < w; ++r)
            for (int c = 0; c < l; ++c)
                if (sg.filled(c, r)) m.set(bx + c, pos.y * p + r);
        auto ng = sys.face(t, N);
        for (int r = 0; r < w; ++r)
            for (int c = 0; c < l; ++c)
                if (ng.filled(c, r)) m.set(bx + c, (pos.y + 1) * p + r);
    }
    return m;
}

// Net pixel shift applied to a moving supertile. Grid-locked when both
// components are multiples of w + l, i.e. the shift is a whole number of
// tile pitches and the lattices line up.
struct Translation {
    int dx = 0, dy = 0;
    bool grid_locked(int w, int l) const {
        int p = w + l;
        auto ok = [p](int v) { return ((v % p) + p) % p == 0; };
        return ok(dx) && ok(dy);
    }
    auto operator<=>(const Translation&) const = default;
};

} // namespace gtam
