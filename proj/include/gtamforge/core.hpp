#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtamforge/bitgrid.hpp"
#include "gtamforge/util.hpp"

namespace gtam {

enum Side : int { N = 0, E = 1, S = 2, W = 3 };
constexpr Side kSides[4] = {N, E, S, W};
inline Side opposite(Side s) { return static_cast<Side>((s + 2) % 4); }
inline const char* side_name(Side s) {
    static const char* n[4] = {"n", "e", "s", "w"};
    return n[s];
}

struct Pos {
    int x = 0, y = 0;
    friend Pos operator+(Pos a, Pos b) { return {a.x + b.x, a.y + b.y}; }
    friend Pos operator-(Pos a, Pos b) { return {a.x - b.x, a.y - b.y}; }
    auto operator<=>(const Pos&) const = default;
};
inline Pos step(Side s) {
    switch (s) {
        case N: return {0, 1};
        case E: return {1, 0};
        case S: return {0, -1};
        default: return {-1, 0};
    }
}

// A glue is a label plus an integer strength in {0,1,2}. The null glue is the
// empty label with strength 0; strength 0 and the null label imply each other.
struct Glue {
    std::string label;
    int strength = 0;

    Glue() = default;
    Glue(std::string l, int s) : label(std::move(l)), strength(s) {
        if (strength < 0 || strength > 2) throw InputError("glue strength must be 0, 1 or 2");
        if ((strength == 0) != label.empty()) throw InputError("strength 0 iff null label: '" + label + "'");
    }
    static Glue null() { return Glue(); }
    bool is_null() const { return strength == 0; }
    bool operator==(const Glue& o) const { return label == o.label && strength == o.strength; }
};

// Filled-cell pattern on one face of a tile. The grid orientation follows the
// face: north/south faces are l cells wide and w tall, east/west faces are w
// wide and l tall. Row 0 is always the southern edge of the band the face
// occupies, column 0 the western edge.
struct FaceGeometry {
    BitGrid grid;

    FaceGeometry() = default;
    FaceGeometry(int cols, int rows) : grid(cols, rows) {}

    bool empty() const { return grid.empty(); }
    int filled_count() const { return grid.count(); }

    void fill(int c, int r) { grid.set(c, r); }
    void fill_rect(int c0, int r0, int c1, int r1) {
        for (int r = r0; r <= r1; ++r)
            for (int c = c0; c <= c1; ++c) grid.set(c, r);
    }
    bool filled(int c, int r) const { return grid.get(c, r); }
    bool operator==(const FaceGeometry& o) const { return grid == o.grid; }
};

enum class GeometryClass { Unrestricted, Connected, Bar, Bump };

// Two facing geometries are compatible when their filled sets are disjoint.
inline bool face_compatible(const FaceGeometry& a, const FaceGeometry& b) {
    if (a.grid.cols() != b.grid.cols() || a.grid.rows() != b.grid.rows())
        throw InputError("face_compatible: dimension mismatch");
    return a.grid.disjoint(b.grid);
}

struct GeometricTileType {
    std::string name;
    Glue glue[4];
    FaceGeometry geom[4];

    bool flat() const {
        for (auto s : kSides) if (!geom[s].empty()) return false;
        return true;
    }
};

// Classifies a face pattern. "Attached to the body" means: east face column 0
// touches its own body? No -- for an east geometry the body lies west of the
// band, so column 0 is the attached column; for a west geometry the body lies
// east, so column w-1 is attached. North: row 0 attached; south: row w-1.
inline GeometryClass classify_face(const FaceGeometry& g, Side side) {
    if (g.empty()) return GeometryClass::Bump;
    int cols = g.grid.cols(), rows = g.grid.rows();
    // Bump: every filled cell lies in the single body-adjacent line (w == 1).
    auto body_adjacent = [&](int c, int r) {
        switch (side) {
            case E: return c == 0;
            case W: return c == cols - 1;
            case N: return r == 0;
            default: return r == rows - 1;
        }
    };
    bool bump = true;
    for (int r = 0; r < rows && bump; ++r)
        for (int c = 0; c < cols && bump; ++c)
            if (g.filled(c, r) && !body_adjacent(c, r)) bump = false;
    if (bump) return GeometryClass::Bump;

    // Bar: straight filled runs extending away from the body.
    bool bar = true;
    if (side == E || side == W) {
        for (int r = 0; r < rows && bar; ++r) {
            int run = 0;
            while (run < cols && g.filled(side == E ? run : cols - 1 - run, r)) ++run;
            for (int c = run; c < cols && bar; ++c)
                if (g.filled(side == E ? c : cols - 1 - c, r)) bar = false;
        }
    } else {
        for (int c = 0; c < cols && bar; ++c) {
            int run = 0;
            while (run < rows && g.filled(c, side == N ? run : rows - 1 - run)) ++run;
            for (int r = run; r < rows && bar; ++r)
                if (g.filled(c, side == N ? r : rows - 1 - r)) bar = false;
        }
    }
    if (bar) return GeometryClass::Bar;

    // Connected: every filled cell reaches a body-adjacent filled cell
    // through filled 4-neighbours.
    std::vector<char> seen(static_cast<size_t>(cols) * rows, 0);
    std::vector<std::pair<int, int>> stack;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (g.filled(c, r) && body_adjacent(c, r)) {
                seen[static_cast<size_t>(r) * cols + c] = 1;
                stack.push_back({c, r});
            }
    while (!stack.empty()) {
        auto [c, r] = stack.back();
        stack.pop_back();
        const int dc[4] = {1, -1, 0, 0}, dr[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            int nc = c + dc[k], nr = r + dr[k];
            if (nc >= 0 && nc < cols && nr >= 0 && nr < rows && g.filled(nc, nr) &&
                !seen[static_cast<size_t>(nr) * cols + nc]) {
                seen[static_cast<size_t>(nr) * cols + nc] = 1;
                stack.push_back({nc, nr});
            }
        }
    }
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (g.filled(c, r) && !seen[static_cast<size_t>(r) * cols + c])
                return GeometryClass::Unrestricted;
    return GeometryClass::Connected;
}

// A tile system: tile types plus temperature and the shared geometry
// dimensions (w, l). Seeded semantics additionally require a seed type.
struct TileSystem {
    std::vector<GeometricTileType> tiles;
    int temperature = 2;
    int w = 1, l = 1;
    std::optional<int> seed; // index into tiles

    int add(GeometricTileType t) {
        for (auto& u : tiles)
            if (u.name == t.name) throw InputError("duplicate tile name: " + t.name);
        validate_dims(t);
        tiles.push_back(std::move(t));
        return static_cast<int>(tiles.size()) - 1;
    }

    void validate_dims(const GeometricTileType& t) const {
        for (auto s : kSides) {
            const auto& g = t.geom[s].grid;
            if (g.cols() == 0 && g.rows() == 0) continue; // unset == empty face
            int ec = (s == N || s == S) ? l : w;
            int er = (s == N || s == S) ? w : l;
            if (g.cols() != ec || g.rows() != er)
                throw InputError("tile " + t.name + " face " + side_name(s) + ": geometry dims mismatch");
        }
    }

    // Empty faces may be left with 0x0 grids in memory; normalize for compare.
    FaceGeometry face(int tile, Side s) const {
        const auto& g = tiles[tile].geom[s];
        if (g.grid.cols() != 0) return g;
        int ec = (s == N || s == S) ? l : w;
        int er = (s == N || s == S) ? w : l;
        return FaceGeometry(ec, er);
    }

    int index_of(const std::string& name) const {
        for (size_t i = 0; i < tiles.size(); ++i)
            if (tiles[i].name == name) return static_cast<int>(i);
        throw InputError("unknown tile name: " + name);
    }

    GeometricTileType& by_name(const std::string& name) { return tiles[index_of(name)]; }

    bool all_flat() const {
        for (auto& t : tiles) if (!t.flat()) return false;
        return true;
    }
};

// A positioning of tile types on the lattice. Canonical form translates the
// bounding box minimum to the origin; equality and hashing use the sorted
// placement list.
struct Supertile {
    std::vector<std::pair<Pos, int>> cells; // sorted by (y, x)

    Supertile() = default;
    explicit Supertile(std::vector<std::pair<Pos, int>> c) : cells(std::move(c)) { canonicalize(); }

    static Supertile singleton(int tile) { return Supertile({{Pos{0, 0}, tile}}); }

    size_t size() const { return cells.size(); }

    void canonicalize() {
        if (cells.empty()) throw InputError("supertile must be nonempty");
        std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
            return std::tie(a.first.y, a.first.x) < std::tie(b.first.y, b.first.x);
        });
        for (size_t i = 1; i < cells.size(); ++i)
            if (cells[i].first == cells[i - 1].first) throw InputError("supertile: duplicate position");
        int mx = cells[0].first.x, my = cells[0].first.y;
        for (auto& [p, t] : cells) { mx = std::min(mx, p.x); my = std::min(my, p.y); }
        for (auto& [p, t] : cells) { p.x -= mx; p.y -= my; }
    }

    std::optional<int> at(Pos p) const {
        auto it = std::lower_bound(cells.begin(), cells.end(), p, [](const auto& a, Pos q) {
            return std::tie(a.first.y, a.first.x) < std::tie(q.y, q.x);
        });
        if (it != cells.end() && it->first == p) return it->second;
        return std::nullopt;
    }

    std::pair<Pos, Pos> bbox() const {
        Pos lo = cells[0].first, hi = cells[0].first;
        for (auto& [p, t] : cells) {
            lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y);
        }
        return {lo, hi};
    }

    bool operator==(const Supertile& o) const { return cells == o.cells; }
    bool operator<(const Supertile& o) const { return cells_key() < o.cells_key(); }

    std::vector<std::tuple<int, int, int>> cells_key() const {
        std::vector<std::tuple<int, int, int>> k;
        k.reserve(cells.size());
        for (auto& [p, t] : cells) k.push_back({p.y, p.x, t});
        return k;
    }

    uint64_t hash() const {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (auto& [p, t] : cells) {
            h ^= (static_cast<uint64_t>(static_cast<uint32_t>(p.x)) << 32) ^ static_cast<uint32_t>(p.y);
            h *= 0x100000001b3ULL;
            h ^= static_cast<uint64_t>(t);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    // Edge-connected through any adjacency (bonded or not).
    bool connected() const {
        if (cells.empty()) return false;
        std::map<Pos, int> idx;
        for (size_t i = 0; i < cells.size(); ++i) idx[cells[i].first] = static_cast<int>(i);
        std::vector<char> seen(cells.size(), 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        size_t cnt = 1;
        while (!stack.empty()) {
            int i = stack.back(); stack.pop_back();
            for (auto s : kSides) {
                auto it = idx.find(cells[i].first + step(s));
                if (it != idx.end() && !seen[it->second]) {
                    seen[it->second] = 1; ++cnt;
                    stack.push_back(it->second);
                }
            }
        }
        return cnt == cells.size();
    }
};

namespace build {

inline GeometricTileType tile(std::string name) {
    GeometricTileType t;
    t.name = std::move(name);
    return t;
}
inline GeometricTileType& glue(GeometricTileType& t, Side s, const std::string& label, int strength) {
    t.glue[s] = Glue(label, strength);
    return t;
}

} // namespace build

// Bond strength between abutting faces: equal non-null glues interact with
// their strength; anything else contributes 0.
inline int bond_strength(const Glue& a, const Glue& b) {
    if (a.is_null() || b.is_null()) return 0;
    return (a == b) ? a.strength : 0;
}

// Both glues present and unequal.
inline bool glue_mismatch(const Glue& a, const Glue& b) {
    return !a.is_null() && !b.is_null() && !(a == b);
}

struct BondEdge {
    int a, b;     // indices into Supertile::cells
    int strength; // > 0
};

inline std::vector<BondEdge> binding_edges(const TileSystem& sys, const Supertile& st) {
    std::map<Pos, int> idx;
    for (size_t i = 0; i < st.cells.size(); ++i) idx[st.cells[i].first] = static_cast<int>(i);
    std::vector<BondEdge> edges;
    for (size_t i = 0; i < st.cells.size(); ++i) {
        for (Side s : {N, E}) { // each undirected adjacency once
            auto it = idx.find(st.cells[i].first + step(s));
            if (it == idx.end()) continue;
            const auto& ta = sys.tiles[st.cells[i].second];
            const auto& tb = sys.tiles[st.cells[it->second].second];
            int bs = bond_strength(ta.glue[s], tb.glue[opposite(s)]);
            if (bs > 0) edges.push_back({static_cast<int>(i), it->second, bs});
        }
    }
    return edges;
}

// A supertile is internally geometry-consistent when every abutting face pair
// is compatible (their shared band holds no doubly-filled pixel).
inline bool geometry_consistent(const TileSystem& sys, const Supertile& st) {
    std::map<Pos, int> idx;
    for (size_t i = 0; i < st.cells.size(); ++i) idx[st.cells[i].first] = static_cast<int>(i);
    for (size_t i = 0; i < st.cells.size(); ++i) {
        for (Side s : {N, E}) {
            auto it = idx.find(st.cells[i].first + step(s));
            if (it == idx.end()) continue;
            if (!face_compatible(sys.face(st.cells[i].second, s),
                                 sys.face(st.cells[it->second].second, opposite(s))))
                return false;
        }
    }
    return true;
}

} // namespace gtam
