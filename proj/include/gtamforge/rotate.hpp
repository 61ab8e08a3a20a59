#pragma once

#include "gtamforge/core.hpp"

namespace gtam {

// Clockwise quarter-turn of a tile type: glue sides permute N->E->S->W->N and
// face grids transform so that the hindrance map of a rotated supertile is
// the rotated hindrance map (tile positions map (x,y) -> (y,-1-x)).
inline GeometricTileType rotate_tile_cw(const GeometricTileType& t, int w, int l) {
    GeometricTileType r;
    r.name = t.name;
    r.glue[E] = t.glue[N];
    r.glue[S] = t.glue[E];
    r.glue[W] = t.glue[S];
    r.glue[N] = t.glue[W];

    auto get = [&](Side s) {
        const auto& g = t.geom[s];
        if (g.grid.cols() != 0) return g;
        return (s == N || s == S) ? FaceGeometry(l, w) : FaceGeometry(w, l);
    };
    FaceGeometry n = get(N), e = get(E), s = get(S), wg = get(W);
    FaceGeometry re(w, l), rs(l, w), rw(w, l), rn(l, w);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < w; ++j) {
            if (n.filled(i, j)) re.fill(j, l - 1 - i);
            if (s.filled(i, j)) rw.fill(j, l - 1 - i);
        }
    for (int c = 0; c < w; ++c)
        for (int rr = 0; rr < l; ++rr) {
            if (e.filled(c, rr)) rs.fill(rr, w - 1 - c);
            if (wg.filled(c, rr)) rn.fill(rr, w - 1 - c);
        }
    r.geom[E] = std::move(re);
    r.geom[S] = std::move(rs);
    r.geom[W] = std::move(rw);
    r.geom[N] = std::move(rn);
    return r;
}

inline TileSystem rotate_system_cw(const TileSystem& sys) {
    TileSystem r;
    r.temperature = sys.temperature;
    r.w = sys.w;
    r.l = sys.l;
    r.seed = sys.seed;
    for (auto& t : sys.tiles) r.add(rotate_tile_cw(t, sys.w, sys.l));
    return r;
}

inline Supertile rotate_supertile_cw(const Supertile& st) {
    std::vector<std::pair<Pos, int>> cells;
    for (auto& [p, t] : st.cells) cells.push_back({Pos{p.y, -1 - p.x}, t});
    return Supertile(std::move(cells));
}

} // namespace gtam
