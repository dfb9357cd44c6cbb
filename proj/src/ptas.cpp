#include "treeaug/ptas.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "treeaug/planar.hpp"

namespace treeaug {

std::optional<std::string> check_bfs_tree(const Instance& inst) {
    auto orders = compute_tree_orders(inst);
    const int n = inst.node_count();
    std::vector<std::vector<int>> adj(n);
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (auto [c, p] : inst.tree_arcs) link(c, p);
    for (auto [u, v] : inst.edges) link(u, v);

    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[inst.root] = 0;
    q.push(inst.root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    for (int v = 0; v < n; ++v)
        if (dist[v] != orders.depth[v])
            return "tree is not a BFS tree: node " + inst.names[v] + " has tree depth " +
                   std::to_string(orders.depth[v]) + " but graph distance " +
                   std::to_string(dist[v]);
    return std::nullopt;
}

Layering build_layering(const Instance& inst, int d) {
    if (d < 1) throw Error(ErrorKind::precondition, "layer parameter d must be >= 1");
    auto orders = compute_tree_orders(inst);
    Layering lay;
    lay.d = d;
    lay.level = orders.depth;
    lay.max_level = *std::max_element(lay.level.begin(), lay.level.end());
    lay.edge_boundary.assign(inst.edge_count(), -1);
    for (int e = 0; e < inst.edge_count(); ++e) {
        auto [u, v] = inst.edges[e];
        int lu = lay.level[u], lv = lay.level[v];
        if (lu == lv) continue;
        if (std::abs(lu - lv) != 1)
            throw Error(ErrorKind::precondition,
                        "edge spans non-adjacent levels (tree is not a BFS tree)");
        lay.edge_boundary[e] = std::min(lu, lv);
    }
    return lay;
}

namespace {

bool boundary_cut(int boundary, const Layering& lay, int shift) {
    return boundary >= 0 && boundary % lay.d == shift % lay.d;
}

// Rotation of the slice graph, with the synthetic root inserted in a face
// shared by all attachment nodes. Nullopt when the original instance has no
// embedding or the insertion fails.
std::optional<std::vector<std::vector<int>>> slice_rotation(const Instance& inst,
                                                            const Slice& slice,
                                                            const std::vector<int>& local_of) {
    if (!inst.embedding) return std::nullopt;
    const int q = slice.inst.node_count();  // synthetic root is q-1
    std::set<std::pair<int, int>> kept;     // local node pairs, real links only
    std::vector<std::pair<int, int>> links;
    for (auto [c, p] : slice.inst.tree_arcs)
        if (c != slice.artificial_root && p != slice.artificial_root) {
            kept.insert(std::minmax(c, p));
            links.emplace_back(c, p);
        }
    for (auto [u, v] : slice.inst.edges) {
        kept.insert(std::minmax(u, v));
        links.emplace_back(u, v);
    }

    std::vector<std::vector<int>> rot(q);
    for (int sv = 0; sv + 1 < q; ++sv) {
        int gv = slice.global_node[sv];
        for (int gn : (*inst.embedding)[gv]) {
            int sn = local_of[gn];
            if (sn == -1) continue;
            if (kept.count(std::minmax(sv, sn))) rot[sv].push_back(sn);
        }
    }
    auto g = embed_from_rotation(q, links, rot);
    if (!g) return std::nullopt;

    std::vector<int> attach;
    for (auto [c, p] : slice.inst.tree_arcs)
        if (p == slice.artificial_root) attach.push_back(c);
    if (!attach.empty()) {
        if (!attach_apex(*g, slice.artificial_root, attach)) return std::nullopt;
        if (!g->euler_ok()) return std::nullopt;
    }

    std::vector<std::vector<int>> out(q);
    for (int v = 0; v < q; ++v)
        for (int dart : g->rot[v]) out[v].push_back(g->head(dart));
    return out;
}

}  // namespace

std::vector<Slice> build_slices(const Instance& inst, const Layering& lay, int shift) {
    const int n = inst.node_count();
    auto orders = compute_tree_orders(inst);
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (auto [c, p] : inst.tree_arcs)
        if (!boundary_cut(lay.level[p], lay, shift)) uf[find(c)] = find(p);
    for (int e = 0; e < inst.edge_count(); ++e)
        if (!boundary_cut(lay.edge_boundary[e], lay, shift)) {
            auto [u, v] = inst.edges[e];
            uf[find(u)] = find(v);
        }

    std::map<int, std::vector<int>> comps;  // representative -> sorted members
    for (int v = 0; v < n; ++v) comps[find(v)].push_back(v);

    std::vector<Slice> out;
    for (auto& [rep, members] : comps) {
        Slice s;
        s.global_node = members;
        s.global_node.push_back(-1);  // synthetic root
        const int q = static_cast<int>(s.global_node.size());
        s.artificial_root = q - 1;

        std::vector<int> local_of(n, -1);
        for (int i = 0; i + 1 < q; ++i) local_of[members[i]] = i;

        s.min_level = lay.level[members[0]];
        for (int v : members) s.min_level = std::min(s.min_level, lay.level[v]);

        std::vector<std::string> names;
        std::vector<Weight> weights;
        for (int v : members) {
            names.push_back(inst.names[v]);
            weights.push_back(inst.weights[v]);
        }
        std::string root_name = "__slice_root__";
        while (std::find(names.begin(), names.end(), root_name) != names.end())
            root_name += "_";
        names.push_back(root_name);
        weights.push_back(Weight(1));  // never coverable, value irrelevant

        std::vector<std::pair<int, int>> arcs;
        for (int v : members) {
            int p = orders.parent[v];
            if (p != -1 && !boundary_cut(lay.level[p], lay, shift)) {
                arcs.emplace_back(local_of[v], local_of[p]);  // same component by construction
            } else {
                if (lay.level[v] != s.min_level)
                    throw Error(ErrorKind::internal, "slice node above the band floor lost its parent");
                arcs.emplace_back(local_of[v], s.artificial_root);
            }
        }

        std::vector<std::pair<int, int>> edges;
        for (int e = 0; e < inst.edge_count(); ++e) {
            if (boundary_cut(lay.edge_boundary[e], lay, shift)) continue;
            auto [u, v] = inst.edges[e];
            if (local_of[u] == -1 || local_of[v] == -1) continue;
            edges.emplace_back(local_of[u], local_of[v]);
            s.global_edge.push_back(e);
        }

        s.inst = Instance::build(std::move(names), s.artificial_root, std::move(arcs),
                                 std::move(edges), std::move(weights));
        s.inst.weighted = inst.weighted;
        s.depth = 0;
        auto so = compute_tree_orders(s.inst);
        for (int v = 0; v < q; ++v) s.depth = std::max(s.depth, so.depth[v]);

        if (auto rot = slice_rotation(inst, s, local_of)) s.inst.embedding = std::move(*rot);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

// Face-based construction: triangulate, take the three root paths of each
// face's corners as a bag, connect faces across non-tree links.
std::optional<TreeDecomposition> baker_decomposition(const Slice& slice) {
    const Instance& si = slice.inst;
    const int q = si.node_count();
    if (!si.embedding) return std::nullopt;
    if (q <= 3) {
        TreeDecomposition td;
        std::vector<int> all(q);
        for (int i = 0; i < q; ++i) all[i] = i;
        td.bags.push_back(all);
        td.parent.push_back(-1);
        return td;
    }

    std::vector<std::pair<int, int>> links;
    std::set<std::pair<int, int>> tree_links;
    for (auto [c, p] : si.tree_arcs) {
        links.emplace_back(c, p);
        tree_links.insert(std::minmax(c, p));
    }
    for (auto [u, v] : si.edges) links.emplace_back(u, v);
    auto g = embed_from_rotation(q, links, *si.embedding);
    if (!g || !g->euler_ok()) return std::nullopt;
    if (!triangulate(*g)) return std::nullopt;

    auto faces = g->faces();
    const int nf = static_cast<int>(faces.size());
    std::vector<int> face_of(g->dart_count(), -1);
    for (int f = 0; f < nf; ++f)
        for (int d : faces[f]) face_of[d] = f;

    std::vector<std::vector<int>> dual(nf);
    int dual_edges = 0;
    for (int l = 0; l < static_cast<int>(g->links.size()); ++l) {
        auto key = std::minmax(g->links[l].first, g->links[l].second);
        if (tree_links.count(key)) continue;
        int f1 = face_of[2 * l], f2 = face_of[2 * l + 1];
        if (f1 == f2) return std::nullopt;
        dual[f1].push_back(f2);
        dual[f2].push_back(f1);
        ++dual_edges;
    }
    if (dual_edges != nf - 1) return std::nullopt;

    TreeDecomposition td;
    td.parent.assign(nf, -2);
    std::queue<int> bfs;
    bfs.push(0);
    td.parent[0] = -1;
    int reached = 0;
    std::vector<int> order;
    while (!bfs.empty()) {
        int f = bfs.front();
        bfs.pop();
        ++reached;
        order.push_back(f);
        for (int o : dual[f])
            if (td.parent[o] == -2) {
                td.parent[o] = f;
                bfs.push(o);
            }
    }
    if (reached != nf) return std::nullopt;

    auto so = compute_tree_orders(si);
    td.bags.resize(nf);
    for (int f = 0; f < nf; ++f) {
        std::set<int> bag;
        for (int d : faces[f]) {
            for (int v = g->tail(d); v != -1; v = so.parent[v]) bag.insert(v);
        }
        td.bags[f].assign(bag.begin(), bag.end());
    }
    return td;
}

}  // namespace

TreeDecomposition shallow_decomposition(const Slice& slice, int d, bool strict_embedding) {
    if (slice.depth > d)
        throw Error(ErrorKind::precondition, "slice tree deeper than the layer parameter");
    const int q = slice.inst.node_count();
    std::optional<TreeDecomposition> td;
    if (q <= 3) {
        // One bag covers everything at width <= 2; no embedding needed.
        TreeDecomposition one;
        std::vector<int> all(q);
        for (int i = 0; i < q; ++i) all[i] = i;
        one.bags = {all};
        one.parent = {-1};
        td = one;
    } else if (slice.inst.embedding) {
        td = baker_decomposition(slice);
        if (td) td = binarize(*td);
        if (!td && strict_embedding)
            throw Error(ErrorKind::precondition,
                        "face construction failed on the provided embedding");
    } else if (strict_embedding) {
        throw Error(ErrorKind::precondition, "slice carries no embedding");
    }
    if (!td) td = heuristic_decomposition(slice.inst);
    if (td->width() > 3 * d)
        throw Error(ErrorKind::precondition,
                    "slice decomposition width " + std::to_string(td->width()) + " exceeds 3d = " +
                        std::to_string(3 * d));
    return *td;
}

namespace {

std::pair<Orientation, Weight> solve_shift(const Instance& inst, const Layering& lay, int shift,
                                           bool require_embedding) {
    Orientation o(inst.edge_count());
    for (int e = 0; e < inst.edge_count(); ++e) {
        if (!boundary_cut(lay.edge_boundary[e], lay, shift)) continue;
        auto [u, v] = inst.edges[e];
        // Deleted edges run from the deeper endpoint to the shallower one,
        // matching every tree arc that crosses the same boundary.
        o.set(e, lay.level[u] > lay.level[v] ? Dir::forward : Dir::backward);
    }

    for (const auto& slice : build_slices(inst, lay, shift)) {
        TreeDecomposition chosen;
        if (require_embedding) {
            chosen = shallow_decomposition(slice, lay.d, true);
        } else {
            // The min-fill heuristic usually beats the face construction on
            // width (table cost is factorial in bag size), so prefer it and
            // reach for the face construction only when it is out of bounds.
            chosen = heuristic_decomposition(slice.inst);
            if (chosen.width() > 3 * lay.d && slice.inst.embedding) {
                auto baker = shallow_decomposition(slice, lay.d, false);
                if (baker.width() < chosen.width()) chosen = baker;
            }
        }
        if (chosen.width() > 3 * lay.d)
            throw Error(ErrorKind::precondition,
                        "slice decomposition width " + std::to_string(chosen.width()) +
                            " exceeds 3d = " + std::to_string(3 * lay.d));
        auto [so, srep] = solve_twdp(slice.inst, chosen, 3 * lay.d);
        for (int se = 0; se < slice.inst.edge_count(); ++se)
            o.set(slice.global_edge[se], so.get(se));
    }

    if (!o.total()) throw Error(ErrorKind::internal, "shift orientation left an edge unassigned");
    if (!is_acyclic(inst, o))
        throw Error(ErrorKind::internal, "shift orientation is cyclic");
    Weight value = coverage(inst, o).value;
    return {std::move(o), value};
}

}  // namespace

Orientation ptas_shift_orientation(const Instance& inst, const Layering& lay, int shift,
                                   bool require_embedding) {
    return solve_shift(inst, lay, shift, require_embedding).first;
}

std::pair<Orientation, CoverageReport> solve_ptas(const Instance& inst, int d,
                                                  bool require_embedding) {
    if (d < 2) throw Error(ErrorKind::precondition, "PTAS parameter d must be >= 2");
    if (auto bad = check_bfs_tree(inst))
        throw Error(ErrorKind::precondition, *bad);
    if (require_embedding && !inst.embedding)
        throw Error(ErrorKind::precondition, "instance carries no embedding");
    if (inst.embedding) {
        std::vector<std::pair<int, int>> links = inst.tree_arcs;
        links.insert(links.end(), inst.edges.begin(), inst.edges.end());
        auto g = embed_from_rotation(inst.node_count(), links, *inst.embedding);
        if (!g || !g->euler_ok())
            throw Error(ErrorKind::precondition, "embedding fails the Euler check (not planar)");
    }

    Layering lay = build_layering(inst, d);
    std::optional<std::pair<Orientation, Weight>> best;
    for (int k = 1; k <= d; ++k) {
        auto cand = solve_shift(inst, lay, k, require_embedding);
        if (!best || cand.second > best->second) best = std::move(cand);
    }
    Orientation o = complete_orientation(inst, best->first);
    return {o, coverage(inst, o)};
}

}  // namespace treeaug
