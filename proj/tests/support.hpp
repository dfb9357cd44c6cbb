#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include "treeaug/gen.hpp"
#include "treeaug/instance.hpp"

namespace treeaug::testing {

// Tiny builder: nodes named by index as "n0", "n1", ...
inline Instance mk(int n, int root, std::vector<std::pair<int, int>> arcs,
                   std::vector<std::pair<int, int>> edges, std::vector<Weight> weights = {}) {
    std::vector<std::string> names;
    int width = static_cast<int>(std::to_string(n > 1 ? n - 1 : 1).size());
    for (int i = 0; i < n; ++i) {
        std::string s = std::to_string(i);
        while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
        names.push_back("n" + s);
    }
    return Instance::build(std::move(names), root, std::move(arcs), std::move(edges),
                           std::move(weights));
}

// Rebuilds the tree as the BFS tree of the whole graph (smallest-index parent
// wins), so the result always passes the BFS-tree check.
inline Instance bfs_retree(const Instance& inst) {
    const int n = inst.node_count();
    std::vector<std::vector<int>> adj(n);
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (auto [c, p] : inst.tree_arcs) link(c, p);
    for (auto [u, v] : inst.edges) link(u, v);
    for (auto& l : adj) std::sort(l.begin(), l.end());

    std::vector<int> parent(n, -1), dist(n, -1);
    std::queue<int> q;
    dist[inst.root] = 0;
    q.push(inst.root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                q.push(w);
            }
    }

    std::vector<std::pair<int, int>> arcs;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        if (v != inst.root) arcs.emplace_back(v, parent[v]);
    auto is_arc = [&](int a, int b) {
        return parent[a] == b || parent[b] == a;
    };
    for (auto [c, p] : inst.tree_arcs)
        if (!is_arc(c, p)) edges.emplace_back(c, p);
    for (auto [u, v] : inst.edges)
        if (!is_arc(u, v)) edges.emplace_back(u, v);

    Instance out = Instance::build(inst.names, inst.root, std::move(arcs), std::move(edges),
                                   inst.weighted ? inst.weights : std::vector<Weight>{});
    return out;
}

// Random feasible partial orientation: a subset of edges, each given a
// feasible direction one at a time.
inline Orientation random_partial(const Instance& inst, Rng& rng) {
    Orientation o(inst.edge_count());
    for (int e = 0; e < inst.edge_count(); ++e) {
        if (rng.chance(0.4)) continue;
        Dir d = rng.chance(0.5) ? Dir::forward : Dir::backward;
        o.set(e, d);
        if (!is_acyclic(inst, o)) {
            o.set(e, d == Dir::forward ? Dir::backward : Dir::forward);
            if (!is_acyclic(inst, o)) o.unset(e);
        }
    }
    return o;
}

inline std::vector<Weight> random_weights(int n, Rng& rng) {
    std::vector<Weight> w;
    for (int i = 0; i < n; ++i) w.emplace_back(rng.range(1, 8), rng.range(1, 4));
    return w;
}

}  // namespace treeaug::testing
