#pragma once

#include <limits>
#include <queue>

#include "gtamforge/core.hpp"

namespace gtam {

namespace detail {

// Dinic max-flow on small graphs.
class MaxFlow {
public:
    explicit MaxFlow(int n) : g_(n), level_(n), it_(n) {}

    void add_edge(int a, int b, int cap) {
        g_[a].push_back({b, static_cast<int>(g_[b].size()), cap});
        g_[b].push_back({a, static_cast<int>(g_[a].size()) - 1, cap}); // undirected
    }

    int max_flow(int s, int t, int limit = std::numeric_limits<int>::max()) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            std::fill(it_.begin(), it_.end(), 0);
            int f;
            while (flow < limit && (f = dfs(s, t, limit - flow)) > 0) flow += f;
        }
        return flow;
    }

    void reset() {
        for (auto& es : g_)
            for (auto& e : es) e.cap = e.orig;
    }

    void freeze() {
        for (auto& es : g_)
            for (auto& e : es) e.orig = e.cap;
    }

private:
    struct Edge { int to, rev, cap; int orig = 0; };
    std::vector<std::vector<Edge>> g_;
    std::vector<int> level_, it_;

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0; q.push(s);
        while (!q.empty()) {
            int v = q.front(); q.pop();
            for (auto& e : g_[v])
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[v] + 1;
                    q.push(e.to);
                }
        }
        return level_[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = it_[v]; i < static_cast<int>(g_[v].size()); ++i) {
            Edge& e = g_[v][i];
            if (e.cap > 0 && level_[e.to] == level_[v] + 1) {
                int d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    g_[e.to][e.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }
};

} // namespace detail

// Exact global min cut of the binding graph, computed by max-flow between a
// fixed node and every other node. Returns a large value for single tiles
// (no cut exists).
inline int min_cut_strength(const TileSystem& sys, const Supertile& st) {
    int n = static_cast<int>(st.size());
    if (n == 1) return std::numeric_limits<int>::max();
    auto edges = binding_edges(sys, st);
    detail::MaxFlow mf(n);
    for (auto& e : edges) mf.add_edge(e.a, e.b, e.strength);
    mf.freeze();
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < n; ++t) {
        mf.reset();
        best = std::min(best, mf.max_flow(0, t, best));
        if (best == 0) break;
    }
    return best;
}

// True iff every cut of the binding graph has strength >= tau.
inline bool is_tau_stable(const TileSystem& sys, const Supertile& st, int tau) {
    if (!st.connected()) throw InputError("is_tau_stable: supertile not connected");
    if (st.size() == 1) return true;
    return min_cut_strength(sys, st) >= tau;
}

// Linear-time stability test valid for tau <= 2 (the only temperatures the
// model uses): stable at tau=1 iff the binding graph is connected; at tau=2
// additionally no strength-1 bond may be a bridge. Agrees with the max-flow
// route; used on large assemblies where per-node max-flow would be slow.
inline bool is_tau_stable_fast(const TileSystem& sys, const Supertile& st, int tau) {
    if (tau > 2) return is_tau_stable(sys, st, tau);
    int n = static_cast<int>(st.size());
    if (n == 1) return true;
    auto edges = binding_edges(sys, st);
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (neighbor, edge id)
    for (size_t i = 0; i < edges.size(); ++i) {
        adj[edges[i].a].push_back({edges[i].b, static_cast<int>(i)});
        adj[edges[i].b].push_back({edges[i].a, static_cast<int>(i)});
    }
    // Connectivity plus bridge detection (iterative Tarjan).
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> is_bridge(edges.size(), false);
    int timer = 0, visited = 0;
    struct Frame { int v, pe; size_t i; };
    std::vector<Frame> stack;
    disc[0] = low[0] = timer++;
    ++visited;
    stack.push_back({0, -1, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.i < adj[f.v].size()) {
            auto [to, eid] = adj[f.v][f.i++];
            if (eid == f.pe) continue;
            if (disc[to] == -1) {
                disc[to] = low[to] = timer++;
                ++visited;
                stack.push_back({to, eid, 0});
            } else {
                low[f.v] = std::min(low[f.v], disc[to]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                Frame& p = stack.back();
                low[p.v] = std::min(low[p.v], low[f.v]);
                if (low[f.v] > disc[p.v]) is_bridge[f.pe] = true;
            }
        }
    }
    if (visited != n) return false; // binding graph disconnected: cut of 0
    if (tau == 1) return true;
    for (size_t i = 0; i < edges.size(); ++i)
        if (is_bridge[i] && edges[i].strength < tau) return false;
    return true;
}

} // namespace gtam
