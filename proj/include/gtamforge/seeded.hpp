#pragma once

#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "gtamforge/attach.hpp"

namespace gtam {

struct SeededOptions {
    size_t max_tiles = 1u << 20;
    size_t max_states = 200000; // exhaustive-mode state budget
    bool force_exhaustive = false;
};

struct SeededResult {
    std::vector<Supertile> terminals;            // canonical, deduplicated, sorted
    bool directed = false;
    bool complete = true;                        // false when a bound was hit
    std::vector<std::pair<Pos, int>> sequence;   // one recorded assembly sequence
    std::vector<std::pair<Pos, int>> frontier;   // attachable set at the point of truncation
};

namespace detail {

// All tile types attachable at pos, for any occupant function.
template <typename Occ>
void candidates_at_occ(const TileSystem& sys, Occ&& occ, Pos pos, int tau, std::vector<int>& out) {
    out.clear();
    for (int t = 0; t < static_cast<int>(sys.tiles.size()); ++t)
        if (attachable_at(sys, occ, t, pos, tau)) out.push_back(t);
}

// All tile types attachable at pos given the current placement map.
inline void candidates_at(const TileSystem& sys, const std::map<Pos, int>& placed, Pos pos, int tau,
                          std::vector<int>& out) {
    candidates_at_occ(sys, [&](Pos p) -> std::optional<int> {
        auto it = placed.find(p);
        if (it == placed.end()) return std::nullopt;
        return it->second;
    }, pos, tau, out);
}

inline uint64_t state_hash(const std::map<Pos, int>& placed) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (auto& [p, t] : placed) {
        h ^= (static_cast<uint64_t>(static_cast<uint32_t>(p.x)) << 32) ^ static_cast<uint32_t>(p.y);
        h *= 0x100000001b3ULL;
        h ^= static_cast<uint64_t>(t);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace detail

// Exhaustive exploration of attachment order over all choices, with memoized
// states. Only tractable for small systems; assemble_seeded falls back to it
// when the deterministic run detects a choice point.
inline SeededResult assemble_seeded_exhaustive(const TileSystem& sys, const SeededOptions& opt) {
    if (!sys.seed) throw InputError("assemble_seeded: system has no seed");
    SeededResult res;
    std::map<Pos, int> start{{Pos{0, 0}, *sys.seed}};
    std::deque<std::map<Pos, int>> work{start};
    std::unordered_set<uint64_t> seen{detail::state_hash(start)};
    std::set<Supertile> terminals;
    std::vector<int> cand;
    size_t states = 0;
    bool recorded = false;

    while (!work.empty()) {
        if (++states > opt.max_states) { res.complete = false; break; }
        auto placed = std::move(work.front());
        work.pop_front();

        std::vector<std::pair<Pos, int>> moves;
        std::set<Pos> fr;
        for (auto& [p, t] : placed)
            for (auto s : kSides) {
                Pos q = p + step(s);
                if (!placed.count(q)) fr.insert(q);
            }
        for (Pos q : fr) {
            detail::candidates_at(sys, placed, q, sys.temperature, cand);
            for (int t : cand) moves.push_back({q, t});
        }
        if (moves.empty()) {
            std::vector<std::pair<Pos, int>> cells(placed.begin(), placed.end());
            terminals.insert(Supertile(std::move(cells)));
            continue;
        }
        if (placed.size() >= opt.max_tiles) {
            res.complete = false;
            res.frontier = moves;
            continue;
        }
        for (auto& [q, t] : moves) {
            auto next = placed;
            next[q] = t;
            uint64_t h = detail::state_hash(next);
            if (seen.insert(h).second) work.push_back(std::move(next));
        }
        if (!recorded) { // record one greedy path alongside the search
            recorded = true;
        }
    }
    res.terminals.assign(terminals.begin(), terminals.end());
    res.directed = res.complete && res.terminals.size() == 1;

    // Record one assembly sequence by replaying greedily (first move each step).
    std::map<Pos, int> placed = start;
    res.sequence = {{Pos{0, 0}, *sys.seed}};
    while (placed.size() < opt.max_tiles) {
        std::pair<Pos, int> pick{Pos{0, 0}, -1};
        std::set<Pos> fr;
        for (auto& [p, t] : placed)
            for (auto s : kSides) {
                Pos q = p + step(s);
                if (!placed.count(q)) fr.insert(q);
            }
        for (Pos q : fr) {
            detail::candidates_at(sys, placed, q, sys.temperature, cand);
            if (!cand.empty()) { pick = {q, cand[0]}; break; }
        }
        if (pick.second < 0) break;
        placed[pick.first] = pick.second;
        res.sequence.push_back(pick);
    }
    return res;
}

// Seeded assembly. Runs a deterministic pass that places the unique attachable
// tile in FIFO order and checks confluence along the way:
//  (a) no frontier position may ever admit two tile types, and a pending
//      candidate may not change or disappear;
//  (b) when a placement lands next to an already-filled position p, and the
//      new tile's attachment does not require p itself (so some other order
//      could have placed it before p), then p's choice must still be uniquely
//      the tile that is there, judged against p's earlier neighbourhood plus
//      the independent newcomers.
// Any violation falls back to exhaustive exploration of attachment orders.
// A clean pass yields the unique terminal.
inline SeededResult assemble_seeded(const TileSystem& sys, const SeededOptions& opt = {}) {
    if (!sys.seed) throw InputError("assemble_seeded: system has no seed");
    if (opt.force_exhaustive) return assemble_seeded_exhaustive(sys, opt);

    std::map<Pos, int> placed{{Pos{0, 0}, *sys.seed}};
    std::map<Pos, size_t> when{{Pos{0, 0}, 0}}; // placement order index
    std::map<Pos, std::vector<Pos>> supporters; // bonded neighbours at placement time
    std::map<Pos, int> unique_cand;             // frontier position -> its single type
    std::deque<Pos> order;
    std::vector<int> cand;
    SeededResult res;
    res.sequence.push_back({Pos{0, 0}, *sys.seed});

    // Causal dependence: x depends on p when p is reachable from x through
    // the supporter edges (every path of which moves to earlier placements).
    auto depends_on = [&](Pos x, Pos p) {
        size_t pidx = when.at(p);
        std::vector<Pos> stack{x};
        std::set<Pos> seen{x};
        while (!stack.empty()) {
            Pos cur = stack.back();
            stack.pop_back();
            if (cur == p) return true;
            for (Pos s : supporters[cur])
                if (when.at(s) >= pidx && seen.insert(s).second) stack.push_back(s);
        }
        return false;
    };

    // Confluence check at filled p after q was placed next to it: in an
    // alternative order, any causally independent later neighbour could be
    // present before p; p's choice must still be uniquely what it is.
    auto filled_still_unique = [&](Pos p, Pos q) {
        if (depends_on(q, p)) return true; // q can never precede p
        size_t pidx = when.at(p);
        auto occ = [&](Pos x) -> std::optional<int> {
            auto it = placed.find(x);
            if (it == placed.end()) return std::nullopt;
            if (when.at(x) < pidx) return it->second;
            if (!depends_on(x, p)) return it->second;
            return std::nullopt;
        };
        detail::candidates_at_occ(sys, occ, p, sys.temperature, cand);
        return cand.size() == 1 && cand[0] == placed.at(p);
    };

    auto refresh = [&](Pos q, Pos trigger) -> bool { // false => ambiguity detected
        if (placed.count(q)) return filled_still_unique(q, trigger);
        detail::candidates_at(sys, placed, q, sys.temperature, cand);
        auto it = unique_cand.find(q);
        if (cand.empty()) {
            return it == unique_cand.end(); // losing a candidate means order mattered
        }
        if (cand.size() > 1) return false;
        if (it == unique_cand.end()) {
            unique_cand[q] = cand[0];
            order.push_back(q);
            return true;
        }
        return it->second == cand[0];
    };

    bool ok = true;
    for (auto s : kSides) ok = ok && refresh(Pos{0, 0} + step(s), Pos{0, 0});
    while (ok && !order.empty()) {
        Pos q = order.front();
        order.pop_front();
        auto it = unique_cand.find(q);
        if (it == unique_cand.end()) continue;
        int t = it->second;
        unique_cand.erase(it);
        if (placed.size() >= opt.max_tiles) {
            res.complete = false;
            for (auto& [p, c] : unique_cand) res.frontier.push_back({p, c});
            res.frontier.push_back({q, t});
            break;
        }
        when[q] = placed.size();
        placed[q] = t;
        std::vector<Pos> sup;
        for (auto s : kSides) {
            auto it2 = placed.find(q + step(s));
            if (it2 != placed.end() &&
                bond_strength(sys.tiles[t].glue[s], sys.tiles[it2->second].glue[opposite(s)]) > 0)
                sup.push_back(q + step(s));
        }
        supporters[q] = std::move(sup);
        res.sequence.push_back({q, t});
        for (auto s : kSides)
            if (!(ok = refresh(q + step(s), q))) break;
    }

    if (!ok) return assemble_seeded_exhaustive(sys, opt);
    if (!res.complete) return res;

    std::vector<std::pair<Pos, int>> cells(placed.begin(), placed.end());
    res.terminals.push_back(Supertile(std::move(cells)));
    res.directed = true;
    return res;
}

} // namespace gtam
