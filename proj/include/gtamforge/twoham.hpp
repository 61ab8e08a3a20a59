#pragma once

#include <unordered_map>

#include "gtamforge/planner.hpp"

namespace gtam {

struct TwohamOptions {
    size_t max_supertile_size = 64;
    size_t max_count = 4000;
    AttachOptions attach;
};

struct ProducibleSet {
    std::vector<Supertile> items;    // discovery order, canonical, unique
    std::vector<char> combined;      // item took part in some successful combination
    bool complete = true;
    int temperature = 2;
};

namespace detail {

// Exposed non-null glues of a supertile, tallied per (side, label, strength).
inline std::map<std::tuple<int, std::string, int>, int> exposed_glues(const TileSystem& sys,
                                                                      const Supertile& st) {
    std::map<std::tuple<int, std::string, int>, int> out;
    for (auto& [p, t] : st.cells)
        for (auto s : kSides) {
            if (st.at(p + step(s))) continue;
            const Glue& g = sys.tiles[t].glue[s];
            if (!g.is_null()) ++out[{s, g.label, g.strength}];
        }
    return out;
}

// Upper bound on the seam strength any docking of a and b can achieve.
inline int seam_upper_bound(const std::map<std::tuple<int, std::string, int>, int>& a,
                            const std::map<std::tuple<int, std::string, int>, int>& b) {
    int total = 0;
    for (auto& [k, ca] : a) {
        auto [side, label, strength] = k;
        auto it = b.find({opposite(static_cast<Side>(side)), label, strength});
        if (it != b.end()) total += strength * std::min(ca, it->second);
    }
    return total;
}

} // namespace detail

// Two-handed producible-set enumeration: the fixed point of pairwise
// collision_free_attach starting from all singleton tiles, subject to size
// and count bounds. Deterministic: pairs are attempted in discovery order and
// new results are inserted in canonical order.
inline ProducibleSet enumerate_producibles(const TileSystem& sys, const TwohamOptions& opt = {}) {
    ProducibleSet ps;
    ps.temperature = sys.temperature;
    std::unordered_map<uint64_t, std::vector<int>> index; // hash -> item ids
    auto find = [&](const Supertile& st) -> int {
        auto it = index.find(st.hash());
        if (it == index.end()) return -1;
        for (int i : it->second)
            if (ps.items[i] == st) return i;
        return -1;
    };
    auto insert = [&](Supertile st) -> int {
        int i = find(st);
        if (i >= 0) return -1;
        ps.items.push_back(std::move(st));
        ps.combined.push_back(0);
        index[ps.items.back().hash()].push_back(static_cast<int>(ps.items.size()) - 1);
        return static_cast<int>(ps.items.size()) - 1;
    };
    for (int t = 0; t < static_cast<int>(sys.tiles.size()); ++t) insert(Supertile::singleton(t));

    std::vector<std::map<std::tuple<int, std::string, int>, int>> glues;
    for (size_t processed = 0; processed < ps.items.size(); ++processed) {
        while (glues.size() < ps.items.size())
            glues.push_back(detail::exposed_glues(sys, ps.items[glues.size()]));
        if (ps.items.size() > opt.max_count) { ps.complete = false; break; }
        std::vector<Supertile> fresh;
        for (size_t j = 0; j <= processed; ++j) {
            size_t i = processed;
            if (ps.items[i].size() + ps.items[j].size() > opt.max_supertile_size) continue;
            if (detail::seam_upper_bound(glues[i], glues[j]) < sys.temperature &&
                detail::seam_upper_bound(glues[j], glues[i]) < sys.temperature)
                continue;
            AttachResult r;
            try {
                r = collision_free_attach(sys, ps.items[i], ps.items[j], sys.temperature, opt.attach);
            } catch (const BoundError&) {
                ps.complete = false;
                continue;
            }
            if (!r.combos.empty()) {
                ps.combined[i] = 1;
                ps.combined[j] = 1;
                for (auto& c : r.combos) fresh.push_back(std::move(c.result));
            }
        }
        std::sort(fresh.begin(), fresh.end());
        for (auto& st : fresh) insert(std::move(st));
    }
    return ps;
}

// Members of a complete producible set that no producible can attach to.
inline std::vector<Supertile> terminal_set(const ProducibleSet& ps) {
    if (!ps.complete) throw InputError("terminal_set: producible set is incomplete");
    std::vector<Supertile> out;
    for (size_t i = 0; i < ps.items.size(); ++i)
        if (!ps.combined[i]) out.push_back(ps.items[i]);
    return out;
}

inline bool is_directed(const ProducibleSet& ps) { return terminal_set(ps).size() == 1; }

// Largest member (unique if strictly larger than all others).
inline const Supertile& maximal_producible(const ProducibleSet& ps) {
    const Supertile* best = &ps.items[0];
    for (auto& st : ps.items)
        if (st.size() > best->size()) best = &st;
    return *best;
}

} // namespace gtam
