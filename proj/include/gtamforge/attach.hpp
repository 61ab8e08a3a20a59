#pragma once

#include "gtamforge/core.hpp"

namespace gtam {

// Seeded attachment test: total matching-glue strength to occupied neighbors
// must reach tau and the tile must be geometry-compatible with every occupied
// neighbor on the abutting side. Null glues bond nothing but do not forbid
// adjacency.
template <typename Occupant>
bool attachable_at(const TileSystem& sys, Occupant&& occupant, int tile, Pos pos, int tau) {
    int total = 0;
    bool any_neighbor = false;
    const auto& t = sys.tiles[tile];
    for (auto s : kSides) {
        auto nb = occupant(pos + step(s));
        if (!nb) continue;
        any_neighbor = true;
        const auto& u = sys.tiles[*nb];
        if (!face_compatible(sys.face(tile, s), sys.face(*nb, opposite(s)))) return false;
        total += bond_strength(t.glue[s], u.glue[opposite(s)]);
    }
    return any_neighbor && total >= tau;
}

inline bool attachable(const TileSystem& sys, const Supertile& st, int tile, Pos pos, int tau) {
    if (st.at(pos)) throw InputError("attachable: position occupied");
    return attachable_at(sys, [&](Pos p) { return st.at(p); }, tile, pos, tau);
}

} // namespace gtam
