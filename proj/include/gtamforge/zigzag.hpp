#pragma once

#include <set>

#include "gtamforge/design.hpp"
#include "gtamforge/seeded.hpp"

namespace gtam {

// simulate_atam is assemble_seeded on a geometry-free system; callers use the
// same entry point.
inline SeededResult simulate_atam(const TileSystem& sys, const SeededOptions& opt = {}) {
    return assemble_seeded(sys, opt);
}

struct ZigzagCheck {
    bool value = false;
    bool truncated = false;
    std::vector<std::pair<Pos, int>> sequence; // the unique sequence when value holds
};

namespace detail {

// All attachable (pos, tile) moves of a placement map.
inline std::vector<std::pair<Pos, int>> all_moves(const TileSystem& sys, const std::map<Pos, int>& placed) {
    std::set<Pos> fr;
    for (auto& [p, t] : placed)
        for (auto s : kSides) {
            Pos q = p + step(s);
            if (!placed.count(q)) fr.insert(q);
        }
    std::vector<std::pair<Pos, int>> moves;
    std::vector<int> cand;
    for (Pos q : fr) {
        candidates_at(sys, placed, q, sys.temperature, cand);
        for (int t : cand) moves.push_back({q, t});
    }
    return moves;
}

} // namespace detail

// A system is zig-zag when every assembly sequence places the same tile at
// the same position at every step -- equivalently, exactly one attachment is
// possible at each step -- and each placement is north, west or east of the
// previous one.
inline ZigzagCheck is_zigzag(const TileSystem& sys, size_t max_steps = 1u << 20) {
    if (!sys.seed) throw InputError("is_zigzag: system has no seed");
    ZigzagCheck res;
    std::map<Pos, int> placed{{Pos{0, 0}, *sys.seed}};
    res.sequence.push_back({Pos{0, 0}, *sys.seed});
    Pos prev{0, 0};
    while (true) {
        if (placed.size() >= max_steps) { res.truncated = true; res.value = true; return res; }
        auto moves = detail::all_moves(sys, placed);
        if (moves.empty()) break;
        if (moves.size() > 1) return res; // a choice point: not zig-zag
        auto [q, t] = moves[0];
        Pos d = q - prev;
        bool nwe = (d == Pos{0, 1}) || (d == Pos{1, 0}) || (d == Pos{-1, 0});
        if (!nwe) return res;
        placed[q] = t;
        res.sequence.push_back(moves[0]);
        prev = q;
    }
    res.value = true;
    return res;
}

struct NiceZigzagCheck {
    bool value = false;
    bool truncated = false;
};

// Nice zig-zag: additionally, no producible assembly contains a glue
// mismatch, and the terminal assembly exposes no east/west non-null glue.
inline NiceZigzagCheck is_nice_zigzag(const TileSystem& sys, size_t max_steps = 1u << 20) {
    auto zz = is_zigzag(sys, max_steps);
    NiceZigzagCheck res;
    res.truncated = zz.truncated;
    if (!zz.value) return res;
    std::map<Pos, int> placed;
    for (auto& [q, t] : zz.sequence) {
        for (auto s : kSides) {
            auto it = placed.find(q + step(s));
            if (it != placed.end() &&
                glue_mismatch(sys.tiles[t].glue[s], sys.tiles[it->second].glue[opposite(s)]))
                return res;
        }
        placed[q] = t;
    }
    if (!zz.truncated) {
        for (auto& [p, t] : placed)
            for (Side s : {E, W}) {
                if (placed.count(p + step(s))) continue;
                if (!sys.tiles[t].glue[s].is_null()) return res;
            }
    }
    res.value = true;
    return res;
}

// Tile-type map for simulation checking: F maps each tile of system 1 to the
// set of admissible tiles of system 2.
using TileMap = std::vector<std::vector<int>>;

inline TileMap identity_tile_map(const TileSystem& sys) {
    TileMap f(sys.tiles.size());
    for (size_t i = 0; i < f.size(); ++i) f[i] = {static_cast<int>(i)};
    return f;
}

struct SimulationWitness {
    bool value = false;
    bool truncated = false;
    std::vector<std::pair<Pos, int>> seq1, seq2; // paired sequences (identical positions)
    std::string divergence;                      // first divergence description when !value
};

// Lockstep co-simulation: at every step the two systems' attachable move sets
// must correspond under F in both directions (same positions; each type on
// one side matched by an F-related type on the other). Deterministic systems
// advance by their unique move; on matching choice points the first move is
// taken on both sides.
inline SimulationWitness check_simulation(const TileSystem& sys1, const TileSystem& sys2, const TileMap& F,
                                          size_t max_steps = 1u << 20) {
    if (!sys1.seed || !sys2.seed) throw InputError("check_simulation: both systems must be seeded");
    SimulationWitness w;
    if (F.size() != sys1.tiles.size()) throw InputError("check_simulation: F has wrong domain");
    auto in_f = [&](int t1, int t2) {
        for (int x : F[t1])
            if (x == t2) return true;
        return false;
    };
    if (!in_f(*sys1.seed, *sys2.seed)) {
        w.divergence = "seed types not F-related";
        return w;
    }
    std::map<Pos, int> p1{{Pos{0, 0}, *sys1.seed}}, p2{{Pos{0, 0}, *sys2.seed}};
    w.seq1.push_back({Pos{0, 0}, *sys1.seed});
    w.seq2.push_back({Pos{0, 0}, *sys2.seed});
    while (true) {
        if (p1.size() >= max_steps) { w.truncated = true; w.value = true; return w; }
        auto m1 = detail::all_moves(sys1, p1);
        auto m2 = detail::all_moves(sys2, p2);
        std::set<Pos> pos1, pos2;
        for (auto& [q, t] : m1) pos1.insert(q);
        for (auto& [q, t] : m2) pos2.insert(q);
        if (pos1 != pos2) {
            w.divergence = "attachable position sets differ at step " + std::to_string(p1.size());
            return w;
        }
        // Both directions of the correspondence.
        for (auto& [q, t1] : m1) {
            bool matched = false;
            for (auto& [q2, t2] : m2)
                if (q2 == q && in_f(t1, t2)) matched = true;
            if (!matched) {
                w.divergence = "no simulating type for a valid attachment at step " + std::to_string(p1.size());
                return w;
            }
        }
        for (auto& [q2, t2] : m2) {
            bool matched = false;
            for (auto& [q, t1] : m1)
                if (q2 == q && in_f(t1, t2)) matched = true;
            if (!matched) {
                w.divergence = "simulator admits an attachment with no preimage at step " +
                               std::to_string(p1.size());
                return w;
            }
        }
        if (m1.empty()) break; // mutual terminality
        auto [q, t1] = m1[0];
        int t2 = -1;
        for (auto& [q2, c2] : m2)
            if (q2 == q && in_f(t1, c2)) { t2 = c2; break; }
        p1[q] = t1;
        p2[q] = t2;
        w.seq1.push_back({q, t1});
        w.seq2.push_back({q, t2});
    }
    w.value = true;
    return w;
}

struct ConversionResult {
    TileSystem system;
    TileMap F;           // original tile -> {converted tile}
    int geometry_length; // bump length used by the glue-identity pairs
    int glue_types;      // distinct non-null glue labels in the output
};

namespace detail {

struct GlueKey {
    std::string label;
    int strength;
    auto operator<=>(const GlueKey&) const = default;
};

// Bumps enforcing glue identity: pair k of a diagonal-zero family over the
// given count, on faces of height len.
struct IdentityBumps {
    std::vector<BitVec> outs, ins; // complementary pattern pairs
    int len;

    IdentityBumps(int count, int min_len = 0) {
        int l = std::max(smallest_l_choose_half_at_least(std::max(count, 2)), min_len);
        if (l % 2) ++l; // even length, complement pairs keep weight l/2
        while (binomial(l, l / 2) < static_cast<uint64_t>(count)) l += 2;
        len = l;
        outs = constant_weight_strings(l, l / 2, count);
        for (auto& e : outs) {
            BitVec w(l);
            for (int k = 0; k < l; ++k) w[k] = 1 - e[k];
            ins.push_back(std::move(w));
        }
    }

    FaceGeometry face(bool outward, int k, int cols, int rows, Side side) const {
        // Bumps sit on the body-adjacent line of the face.
        FaceGeometry g(cols, rows);
        const BitVec& v = outward ? outs[k] : ins[k];
        for (int i = 0; i < len; ++i)
            if (v[i]) {
                switch (side) {
                    case N: g.fill(i, 0); break;
                    case S: g.fill(i, rows - 1); break;
                    case E: g.fill(0, i); break;
                    default: g.fill(cols - 1, i); break;
                }
            }
        return g;
    }
};

} // namespace detail

// Converts a nice zig-zag temperature-2 system to an equivalent temperature-1
// geometric system. Every east/west glue keeps a distinct strength-1 label;
// strength-2 north/south glues keep distinct strength-1 labels and strength-1
// north/south glues become null. All north/south faces carry bump pairs that
// make a south face compatible with a north face exactly when the original
// glues were equal.
inline ConversionResult convert_zigzag_to_gtam(const TileSystem& sys, size_t max_steps = 1u << 20) {
    if (sys.temperature != 2) throw InputError("convert: input must be a temperature-2 system");
    if (!sys.all_flat()) throw InputError("convert: input must be geometry-free");
    if (!is_nice_zigzag(sys, max_steps).value) throw InputError("convert: input is not a nice zig-zag system");

    std::map<detail::GlueKey, int> ns_index;
    for (auto& t : sys.tiles)
        for (Side s : {N, S}) {
            const Glue& g = t.glue[s];
            if (!g.is_null()) ns_index.try_emplace({g.label, g.strength}, static_cast<int>(ns_index.size()));
        }
    int sigma_n = std::max<int>(1, static_cast<int>(ns_index.size()));
    detail::IdentityBumps bumps(2 * sigma_n);

    ConversionResult out;
    out.geometry_length = bumps.len;
    out.system.temperature = 1;
    out.system.w = 1;
    out.system.l = bumps.len;
    out.system.seed = sys.seed;
    std::set<std::string> labels;
    for (auto& t : sys.tiles) {
        GeometricTileType r;
        r.name = t.name;
        for (Side s : {E, W})
            if (!t.glue[s].is_null()) {
                r.glue[s] = Glue("m:" + t.glue[s].label + "/" + std::to_string(t.glue[s].strength), 1);
                labels.insert(r.glue[s].label);
            }
        for (Side s : {N, S}) {
            const Glue& g = t.glue[s];
            if (g.is_null()) continue;
            if (g.strength == 2) {
                r.glue[s] = Glue("m:" + g.label + "/2", 1);
                labels.insert(r.glue[s].label);
            }
            int k = ns_index.at({g.label, g.strength});
            r.geom[s] = bumps.face(s == N, k, bumps.len, 1, s);
        }
        out.system.add(std::move(r));
    }
    out.glue_types = static_cast<int>(labels.size());
    out.F = identity_tile_map(sys);
    return out;
}

// Single-glue variant: every non-null glue maps to the one strength-1 label
// and east/west faces also carry identity bumps, drawn from one family over
// all glue types of the input.
inline ConversionResult convert_zigzag_single_glue(const TileSystem& sys, size_t max_steps = 1u << 20) {
    if (sys.temperature != 2) throw InputError("convert: input must be a temperature-2 system");
    if (!sys.all_flat()) throw InputError("convert: input must be geometry-free");
    if (!is_nice_zigzag(sys, max_steps).value) throw InputError("convert: input is not a nice zig-zag system");

    std::map<detail::GlueKey, int> index;
    for (auto& t : sys.tiles)
        for (Side s : kSides) {
            const Glue& g = t.glue[s];
            if (!g.is_null()) index.try_emplace({g.label, g.strength}, static_cast<int>(index.size()));
        }
    int sigma = std::max<int>(1, static_cast<int>(index.size()));
    detail::IdentityBumps bumps(2 * sigma);

    ConversionResult out;
    out.geometry_length = bumps.len;
    out.system.temperature = 1;
    out.system.w = 1;
    out.system.l = bumps.len;
    out.system.seed = sys.seed;
    for (auto& t : sys.tiles) {
        GeometricTileType r;
        r.name = t.name;
        for (Side s : kSides) {
            const Glue& g = t.glue[s];
            if (g.is_null()) continue;
            int k = index.at({g.label, g.strength});
            bool outward = (s == N || s == E); // treat N/E as the "east" role of the pair
            if (s == E || s == W || g.strength == 2) r.glue[s] = Glue("x", 1);
            r.geom[s] = (s == N || s == S) ? bumps.face(outward, k, bumps.len, 1, s)
                                           : bumps.face(outward, k, 1, bumps.len, s);
        }
        out.system.add(std::move(r));
    }
    out.glue_types = 1;
    out.F = identity_tile_map(sys);
    return out;
}

} // namespace gtam
