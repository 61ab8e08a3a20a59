#pragma once

#include <queue>
#include <unordered_map>

#include "gtamforge/hindrance.hpp"
#include "gtamforge/stability.hpp"

namespace gtam {

struct AttachOptions {
    uint64_t max_states = 1ULL << 25; // cap on translation-region area / visited states
    int extra_margin = 2;             // pixels beyond the w+l inflation
    bool full_stability = false;      // debug: re-verify the merged supertile globally
    std::optional<Translation> v0_override; // northwest start variant, for reachability tests
};

struct Combination {
    Supertile result;       // canonical union
    Pos tile_offset;        // moving supertile's placement shift, in tile units, in the fixed frame
    Translation v0;         // initial translation of the recorded path
    std::string path;       // unit steps N/E/S/W from v0 to the docking translation
    Translation target;     // net pixel translation at docking
    int seam_strength = 0;
};

struct AttachResult {
    std::vector<Combination> combos;
    bool complete = true;
};

namespace detail {

struct PlanContext {
    const TileSystem& sys;
    const Supertile& alpha; // moving
    const Supertile& beta;  // fixed
    PixelMap ha, hb;
    int pitch;
    int dx_lo, dx_hi, dy_lo, dy_hi; // translation-space region
    Translation v0;

    PlanContext(const TileSystem& s, const Supertile& a, const Supertile& b, const AttachOptions& opt)
        : sys(s), alpha(a), beta(b), ha(hindrance_map(s, a)), hb(hindrance_map(s, b)), pitch(s.w + s.l) {
        int aw = ha.grid.cols(), ah = ha.grid.rows();
        int sx = aw + pitch + opt.extra_margin, sy = ah + pitch + opt.extra_margin;
        dx_lo = hb.min_x - ha.max_x() - sx;
        dx_hi = hb.max_x() - ha.min_x + sx;
        dy_lo = hb.min_y - ha.max_y() - sy;
        dy_hi = hb.max_y() - ha.min_y + sy;
        v0 = opt.v0_override.value_or(Translation{hb.min_x - ha.max_x() - 2, hb.max_y() - ha.min_y + 2});
        if (!in_region(v0.dx, v0.dy)) throw InputError("planner: v0 outside search region");
    }

    bool in_region(int dx, int dy) const {
        return dx >= dx_lo && dx <= dx_hi && dy >= dy_lo && dy <= dy_hi;
    }
    bool free_at(int dx, int dy) const { return !ha.overlaps_shifted(hb, dx, dy); }
    uint64_t region_area() const {
        return static_cast<uint64_t>(dx_hi - dx_lo + 1) * static_cast<uint64_t>(dy_hi - dy_lo + 1);
    }

    // Tile-level merge at a grid-locked translation. Returns the combination
    // when placements are disjoint and the seam binds with strength >= tau.
    std::optional<Combination> try_dock(Translation t, int tau, const AttachOptions& opt) const {
        Pos off{t.dx / pitch, t.dy / pitch};
        std::map<Pos, int> occupied;
        for (auto& [p, tl] : beta.cells) occupied[p] = tl;
        int seam = 0;
        for (auto& [p, tl] : alpha.cells) {
            Pos q = p + off;
            if (occupied.count(q)) return std::nullopt;
        }
        for (auto& [p, tl] : alpha.cells) {
            Pos q = p + off;
            for (auto s : kSides) {
                auto it = occupied.find(q + step(s));
                if (it == occupied.end()) continue;
                seam += bond_strength(sys.tiles[tl].glue[s], sys.tiles[it->second].glue[opposite(s)]);
            }
        }
        if (seam < tau) return std::nullopt;
        std::vector<std::pair<Pos, int>> cells(beta.cells.begin(), beta.cells.end());
        for (auto& [p, tl] : alpha.cells) cells.push_back({p + off, tl});
        Combination c;
        c.result = Supertile(std::move(cells));
        c.tile_offset = off;
        c.target = t;
        c.seam_strength = seam;
        if (opt.full_stability && !is_tau_stable_fast(sys, c.result, tau)) return std::nullopt;
        return c;
    }
};

inline const char kDirName[4] = {'N', 'E', 'S', 'W'};
inline const int kDx[4] = {0, 1, 0, -1};
inline const int kDy[4] = {1, 0, -1, 0};

} // namespace detail

// Exhaustive planner: breadth-first flood over unit translations of the
// moving supertile, starting from a canonical placement strictly northwest of
// the fixed one, never overlapping hindrance maps. Every reachable
// grid-locked translation whose tile-level merge is glue-stable across the
// seam yields a combination, with the discovery path recorded.
inline AttachResult collision_free_attach(const TileSystem& sys, const Supertile& alpha,
                                          const Supertile& beta, int tau, const AttachOptions& opt = {}) {
    detail::PlanContext ctx(sys, alpha, beta, opt);
    if (ctx.region_area() > opt.max_states)
        throw BoundError("collision_free_attach: search region exceeds margin bound");

    int W = ctx.dx_hi - ctx.dx_lo + 1, H = ctx.dy_hi - ctx.dy_lo + 1;
    std::vector<uint8_t> state(static_cast<size_t>(W) * H, 0); // 0 unvisited, 1+dir parent, 5 start
    auto sidx = [&](int dx, int dy) { return static_cast<size_t>(dy - ctx.dy_lo) * W + (dx - ctx.dx_lo); };

    AttachResult res;
    if (!ctx.free_at(ctx.v0.dx, ctx.v0.dy))
        throw BoundError("collision_free_attach: canonical start overlaps");
    std::deque<Translation> work{ctx.v0};
    state[sidx(ctx.v0.dx, ctx.v0.dy)] = 5;
    std::map<std::vector<std::tuple<int, int, int>>, Combination> found;

    while (!work.empty()) {
        Translation t = work.front();
        work.pop_front();
        if (t.grid_locked(sys.w, sys.l)) {
            if (auto c = ctx.try_dock(t, tau, opt)) {
                // Reconstruct path by walking parents back to v0.
                std::string rev;
                Translation cur = t;
                while (state[sidx(cur.dx, cur.dy)] != 5) {
                    int d = state[sidx(cur.dx, cur.dy)] - 1;
                    rev += detail::kDirName[d];
                    cur = {cur.dx - detail::kDx[d], cur.dy - detail::kDy[d]};
                }
                std::reverse(rev.begin(), rev.end());
                c->path = rev;
                c->v0 = ctx.v0;
                auto key = c->result.cells_key();
                if (!found.count(key)) found.emplace(std::move(key), std::move(*c));
            }
        }
        for (int d = 0; d < 4; ++d) {
            Translation n{t.dx + detail::kDx[d], t.dy + detail::kDy[d]};
            if (!ctx.in_region(n.dx, n.dy)) continue;
            auto& st = state[sidx(n.dx, n.dy)];
            if (st) continue;
            if (!ctx.free_at(n.dx, n.dy)) continue;
            st = static_cast<uint8_t>(d + 1);
            work.push_back(n);
        }
    }
    for (auto& [k, c] : found) res.combos.push_back(std::move(c));
    return res;
}

// Targeted planner: certifies one docking translation (given in tile units)
// by A* search from a grid-locked far-northwest start. Returns nothing if the
// docking is geometrically valid but unreachable.
inline std::optional<Combination> collision_free_attach_to(const TileSystem& sys, const Supertile& alpha,
                                                           const Supertile& beta, int tau, Pos tile_offset,
                                                           const AttachOptions& opt = {}) {
    detail::PlanContext ctx(sys, alpha, beta, opt);
    Translation target{tile_offset.x * ctx.pitch, tile_offset.y * ctx.pitch};
    if (!ctx.free_at(target.dx, target.dy)) return std::nullopt;
    auto docked = ctx.try_dock(target, tau, opt);
    if (!docked) return std::nullopt;

    // Grid-locked start on the target's lattice, strictly northwest of beta.
    auto align_down = [&](int v, int bound) {
        int k = (v - bound) / ctx.pitch;
        while (v - k * ctx.pitch > bound) ++k;
        return v - k * ctx.pitch;
    };
    Translation v0;
    v0.dx = align_down(target.dx, ctx.hb.min_x - ctx.ha.max_x() - 2);
    v0.dy = -align_down(-target.dy, -(ctx.hb.max_y() - ctx.ha.min_y + 2));
    if (!ctx.in_region(v0.dx, v0.dy) || !ctx.free_at(v0.dx, v0.dy))
        throw BoundError("collision_free_attach_to: start placement failed");

    struct Node { int f, g; Translation t; };
    auto cmp = [](const Node& a, const Node& b) { return a.f > b.f; };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);
    auto key = [](Translation t) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(t.dx)) << 32) | static_cast<uint32_t>(t.dy);
    };
    std::unordered_map<uint64_t, std::pair<int, int>> visited; // key -> (g, parent dir or 5)
    auto heur = [&](Translation t) { return std::abs(t.dx - target.dx) + std::abs(t.dy - target.dy); };
    open.push({heur(v0), 0, v0});
    visited[key(v0)] = {0, 5};

    while (!open.empty()) {
        auto [f, g, t] = open.top();
        open.pop();
        if (visited.size() > opt.max_states) throw BoundError("collision_free_attach_to: state budget exhausted");
        if (t == target) {
            std::string rev;
            Translation cur = t;
            while (true) {
                auto [cg, pd] = visited[key(cur)];
                if (pd == 5) break;
                rev += detail::kDirName[pd];
                cur = {cur.dx - detail::kDx[pd], cur.dy - detail::kDy[pd]};
            }
            std::reverse(rev.begin(), rev.end());
            docked->path = rev;
            docked->v0 = v0;
            return docked;
        }
        if (visited[key(t)].first < g) continue;
        for (int d = 0; d < 4; ++d) {
            Translation n{t.dx + detail::kDx[d], t.dy + detail::kDy[d]};
            if (!ctx.in_region(n.dx, n.dy)) continue;
            auto it = visited.find(key(n));
            if (it != visited.end() && it->second.first <= g + 1) continue;
            if (!ctx.free_at(n.dx, n.dy)) continue;
            visited[key(n)] = {g + 1, d};
            open.push({g + 1 + heur(n), g + 1, n});
        }
    }
    return std::nullopt;
}

// Replays a recorded unit-step path: true iff every intermediate translation
// is overlap-free and the endpoint equals the target.
inline bool verify_planar_path(const TileSystem& sys, const Supertile& alpha, const Supertile& beta,
                               Translation v0, const std::string& path, Translation target) {
    PixelMap ha = hindrance_map(sys, alpha), hb = hindrance_map(sys, beta);
    Translation t = v0;
    if (ha.overlaps_shifted(hb, t.dx, t.dy)) return false;
    for (char c : path) {
        switch (c) {
            case 'N': t.dy += 1; break;
            case 'E': t.dx += 1; break;
            case 'S': t.dy -= 1; break;
            case 'W': t.dx -= 1; break;
            default: throw InputError("verify_planar_path: bad step character");
        }
        if (ha.overlaps_shifted(hb, t.dx, t.dy)) return false;
    }
    return t == target;
}

} // namespace gtam
