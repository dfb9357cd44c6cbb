#include "treeaug/planar.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace treeaug {

std::vector<std::vector<int>> EmbeddedGraph::faces() const {
    const int dc = dart_count();
    std::vector<int> pos(dc, -1);  // dart -> index within its tail's rotation
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < rot[v].size(); ++i) pos[rot[v][i]] = static_cast<int>(i);

    auto next = [&](int d) {
        int v = head(d);
        int i = pos[rev(d)];
        return rot[v][(i + 1) % rot[v].size()];
    };

    std::vector<char> seen(dc, 0);
    std::vector<std::vector<int>> out;
    for (int d0 = 0; d0 < dc; ++d0) {
        if (seen[d0]) continue;
        std::vector<int> face;
        int d = d0;
        do {
            seen[d] = 1;
            face.push_back(d);
            d = next(d);
        } while (d != d0);
        out.push_back(std::move(face));
    }
    return out;
}

bool EmbeddedGraph::euler_ok() const {
    if (links.empty()) return true;
    // Union-find over link endpoints.
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (auto [u, v] : links) uf[find(u)] = find(v);

    std::map<int, long> verts, edges, fcs;
    std::vector<char> counted(n, 0);
    for (auto [u, v] : links) {
        int c = find(u);
        ++edges[c];
        for (int x : {u, v})
            if (!counted[x]) {
                counted[x] = 1;
                ++verts[c];
            }
    }
    for (const auto& face : faces()) ++fcs[find(tail(face[0]))];
    for (auto& [c, e] : edges)
        if (verts[c] - e + fcs[c] != 2) return false;
    return true;
}

std::optional<EmbeddedGraph> embed_from_rotation(
    int n, const std::vector<std::pair<int, int>>& links,
    const std::vector<std::vector<int>>& neighbor_rot) {
    EmbeddedGraph g;
    g.n = n;
    g.links = links;
    g.rot.assign(n, {});
    std::map<std::pair<int, int>, int> link_at;
    for (int l = 0; l < static_cast<int>(links.size()); ++l)
        link_at[std::minmax(links[l].first, links[l].second)] = l;
    std::vector<int> degree(n, 0);
    for (auto [u, v] : links) {
        ++degree[u];
        ++degree[v];
    }
    for (int v = 0; v < n; ++v) {
        if (static_cast<int>(neighbor_rot[v].size()) != degree[v]) return std::nullopt;
        for (int u : neighbor_rot[v]) {
            auto it = link_at.find(std::minmax(u, v));
            if (it == link_at.end()) return std::nullopt;
            int l = it->second;
            g.rot[v].push_back(links[l].first == v ? 2 * l : 2 * l + 1);
        }
    }
    return g;
}

bool attach_apex(EmbeddedGraph& g, int apex, const std::vector<int>& attach) {
    if (attach.empty()) return false;
    auto faces = g.faces();
    std::set<int> want(attach.begin(), attach.end());
    const std::vector<int>* host = nullptr;
    for (const auto& face : faces) {
        std::set<int> tails;
        for (int d : face) tails.insert(g.tail(d));
        bool all = true;
        for (int v : want)
            if (!tails.count(v)) {
                all = false;
                break;
            }
        if (all) {
            host = &face;
            break;
        }
    }
    if (!host) return false;

    // Spokes go in at each attach node's first occurrence along the walk; the
    // apex sees them in reverse walk order so the sector faces close up.
    std::vector<int> first_dart;  // outgoing dart d with tail(d) == v, walk order
    std::set<int> placed;
    for (int d : *host) {
        int v = g.tail(d);
        if (want.count(v) && !placed.count(v)) {
            placed.insert(v);
            first_dart.push_back(d);
        }
    }
    std::vector<int> spoke_out;  // dart v -> apex per attach occurrence
    for (int d : first_dart) {
        int v = g.tail(d);
        int l = static_cast<int>(g.links.size());
        g.links.emplace_back(v, apex);
        auto& rv = g.rot[v];
        rv.insert(std::find(rv.begin(), rv.end(), d), 2 * l);
        spoke_out.push_back(2 * l);
    }
    for (auto it = spoke_out.rbegin(); it != spoke_out.rend(); ++it)
        g.rot[apex].push_back(EmbeddedGraph::rev(*it));
    return true;
}

bool triangulate(EmbeddedGraph& g) {
    std::set<std::pair<int, int>> have;
    for (auto [u, v] : g.links) have.insert(std::minmax(u, v));

    auto faces = g.faces();
    for (auto& face : faces) {
        while (face.size() > 3) {
            const int L = static_cast<int>(face.size());
            int ear = -1;
            for (int i = 0; i < L; ++i) {
                int d1 = face[i], d2 = face[(i + 1) % L];
                int a = g.tail(d1), c = g.head(d2);
                if (a != c && !have.count(std::minmax(a, c))) {
                    ear = i;
                    break;
                }
            }
            if (ear == -1) return false;
            int d1 = face[ear], d2 = face[(ear + 1) % L], d3 = face[(ear + 2) % L];
            int a = g.tail(d1), c = g.head(d2);
            int l = static_cast<int>(g.links.size());
            g.links.emplace_back(a, c);
            have.insert(std::minmax(a, c));
            // Chord darts slot in so that next(prev) = a->c inside the big
            // face and next(d2) = c->a inside the split-off triangle.
            auto& ra = g.rot[a];
            ra.insert(std::find(ra.begin(), ra.end(), d1), 2 * l);
            auto& rc = g.rot[c];
            rc.insert(std::find(rc.begin(), rc.end(), d3), 2 * l + 1);
            // Rebuild the walk: ..., a->c, d3, ...
            std::vector<int> reduced;
            reduced.push_back(2 * l);
            for (int j = (ear + 2) % L; j != ear; j = (j + 1) % L) reduced.push_back(face[j]);
            face = std::move(reduced);
        }
    }
    return true;
}

}  // namespace treeaug
