#pragma once

#include "gtamforge/core.hpp"

namespace gtam {

// 0/1 matrix with row-major storage; shared by the face-compatibility
// extraction and the geometry-design solvers.
struct BitMatrix {
    int m = 0, n = 0;
    std::vector<uint8_t> a;

    BitMatrix() = default;
    BitMatrix(int rows, int cols) : m(rows), n(cols), a(static_cast<size_t>(rows) * cols, 0) {}

    uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    uint8_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    bool operator==(const BitMatrix&) const = default;
};

// Face index convention: face 4*t + side for tile t, sides ordered N,E,S,W.
struct CompatibilityMatrix {
    BitMatrix m;
    int tile_count = 0;

    static int face_index(int tile, Side s) { return 4 * tile + s; }
};

// M[i][j] = 1 iff i indexes an east (resp. north) face, j a west (resp.
// south) face, and the two geometries intersect, i.e. the faces are
// incompatible.
inline CompatibilityMatrix compatibility_matrix(const TileSystem& sys) {
    int nt = static_cast<int>(sys.tiles.size());
    CompatibilityMatrix cm;
    cm.tile_count = nt;
    cm.m = BitMatrix(4 * nt, 4 * nt);
    for (int t = 0; t < nt; ++t)
        for (int r = 0; r < nt; ++r) {
            if (!face_compatible(sys.face(t, E), sys.face(r, W)))
                cm.m.at(CompatibilityMatrix::face_index(t, E), CompatibilityMatrix::face_index(r, W)) = 1;
            if (!face_compatible(sys.face(t, N), sys.face(r, S)))
                cm.m.at(CompatibilityMatrix::face_index(t, N), CompatibilityMatrix::face_index(r, S)) = 1;
        }
    return cm;
}

} // namespace gtam
