#include "treeaug/treewidth.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace treeaug {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

int TreeDecomposition::root() const {
    int r = -1;
    for (int i = 0; i < node_count(); ++i)
        if (parent[i] == -1) {
            if (r != -1) return -1;
            r = i;
        }
    return r;
}

std::vector<std::string> verify_decomposition(const Instance& inst, const TreeDecomposition& td) {
    std::vector<std::string> out;
    const int n = inst.node_count();
    const int m = td.node_count();
    if (m == 0) {
        out.push_back("decomposition has no bags");
        return out;
    }
    if (static_cast<int>(td.parent.size()) != m) {
        out.push_back("bags and parent lists differ in length");
        return out;
    }
    for (const auto& bag : td.bags)
        for (int v : bag)
            if (v < 0 || v >= n) {
                out.push_back("bag references unknown node");
                return out;
            }

    if (td.root() == -1) out.push_back("shape has no unique root");
    std::vector<int> kids(m, 0);
    for (int i = 0; i < m; ++i) {
        int p = td.parent[i];
        if (p == -1) continue;
        if (p < 0 || p >= m) {
            out.push_back("parent pointer out of range");
            return out;
        }
        ++kids[p];
    }
    for (int i = 0; i < m; ++i)
        if (kids[i] > 2) out.push_back("shape is not binary (bag with >2 children)");
    // Cycle check: each bag must reach the root.
    for (int i = 0; i < m; ++i) {
        int x = i, steps = 0;
        while (x != -1 && steps <= m) {
            x = td.parent[x];
            ++steps;
        }
        if (steps > m) {
            out.push_back("shape contains a parent cycle");
            break;
        }
    }

    // Property 2: every node occurs somewhere.
    std::vector<char> seen(n, 0);
    for (const auto& bag : td.bags)
        for (int v : bag) seen[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!seen[v]) out.push_back("node in no bag: " + inst.names[v]);

    // Property 3: endpoints of every arc and edge share a bag.
    auto cobagged = [&](int u, int v) {
        for (const auto& bag : td.bags)
            if (std::binary_search(bag.begin(), bag.end(), u) &&
                std::binary_search(bag.begin(), bag.end(), v))
                return true;
        return false;
    };
    for (auto [c, p] : inst.tree_arcs)
        if (!cobagged(c, p))
            out.push_back("tree arc endpoints never share a bag: " + inst.names[c] + "," +
                          inst.names[p]);
    for (auto [u, v] : inst.edges)
        if (!cobagged(u, v))
            out.push_back("edge endpoints never share a bag: " + inst.names[u] + "," +
                          inst.names[v]);

    // Property 4: the bags containing any one node induce a connected subtree.
    for (int v = 0; v < n; ++v) {
        std::vector<int> holders;
        for (int i = 0; i < m; ++i)
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) holders.push_back(i);
        if (holders.size() <= 1) continue;
        std::set<int> holder_set(holders.begin(), holders.end());
        // Walk each holder toward the root until another holder is reached;
        // connected iff all but the topmost holder reach one without leaving
        // the holder set... the topmost holder is the one whose parent chain
        // contains no other holder.
        int tops = 0;
        for (int h : holders) {
            int p = td.parent[h];
            if (p != -1 && holder_set.count(p)) continue;
            ++tops;
        }
        if (tops != 1) out.push_back("bags containing " + inst.names[v] + " are disconnected");
    }
    return out;
}

TreeDecomposition heuristic_decomposition(const Instance& inst) {
    const int n = inst.node_count();
    std::vector<std::set<int>> adj(n);
    auto link = [&](int a, int b) {
        if (a != b) {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    };
    for (auto [c, p] : inst.tree_arcs) link(c, p);
    for (auto [u, v] : inst.edges) link(u, v);

    std::vector<char> alive(n, 1);
    std::vector<std::vector<int>> bags;
    std::vector<int> elim_pos(n, -1);
    std::vector<int> elim_node;

    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = -1;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            std::vector<int> nb(adj[v].begin(), adj[v].end());
            long fill = 0;
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (!adj[nb[i]].count(nb[j])) ++fill;
            if (best == -1 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        std::vector<int> bag(adj[best].begin(), adj[best].end());
        bag.push_back(best);
        std::sort(bag.begin(), bag.end());
        bags.push_back(std::move(bag));
        elim_pos[best] = step;
        elim_node.push_back(best);

        std::vector<int> nb(adj[best].begin(), adj[best].end());
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) link(nb[i], nb[j]);
        for (int w : nb) adj[w].erase(best);
        adj[best].clear();
        alive[best] = 0;
    }

    TreeDecomposition td;
    td.bags = bags;
    td.parent.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        // Parent: the bag of the earliest-eliminated other member.
        int best_pos = -1;
        for (int v : bags[i]) {
            if (v == elim_node[i]) continue;
            if (best_pos == -1 || elim_pos[v] < best_pos) best_pos = elim_pos[v];
        }
        td.parent[i] = best_pos == -1 ? -1 : best_pos;
    }
    return binarize(td);
}

TreeDecomposition binarize(const TreeDecomposition& td) {
    std::vector<std::vector<int>> children(td.node_count());
    int root = td.root();
    for (int i = 0; i < td.node_count(); ++i)
        if (td.parent[i] != -1) children[td.parent[i]].push_back(i);
    TreeDecomposition out;
    std::vector<std::pair<int, int>> stack{{root, -1}};  // (old bag, new parent)
    while (!stack.empty()) {
        auto [old_bag, new_parent] = stack.back();
        stack.pop_back();
        int idx = out.node_count();
        out.bags.push_back(td.bags[old_bag]);
        out.parent.push_back(new_parent);
        const auto& kids = children[old_bag];
        if (kids.size() <= 2) {
            for (int k : kids) stack.emplace_back(k, idx);
        } else {
            stack.emplace_back(kids[0], idx);
            int cur = idx;
            for (std::size_t i = 1; i < kids.size(); ++i) {
                if (i + 1 == kids.size()) {
                    stack.emplace_back(kids[i], cur);
                } else {
                    int copy = out.node_count();
                    out.bags.push_back(td.bags[old_bag]);
                    out.parent.push_back(cur);
                    stack.emplace_back(kids[i], copy);
                    cur = copy;
                }
            }
        }
    }
    return out;
}

namespace {

constexpr int kMaxBagSize = 9;  // 9! orders is the practical ceiling

struct BagContext {
    std::vector<int> nodes;                 // sorted bag content
    std::vector<int> pos_of;                // instance node -> position, or -1
    std::vector<std::vector<char>> must_precede;  // position x before position y
};

std::uint64_t entry_key(std::uint32_t perm, std::uint32_t cover, int bag_size) {
    return (static_cast<std::uint64_t>(perm) << bag_size) | cover;
}

// Relative order of the shared positions under a permutation, packed 4 bits
// per element.
std::uint64_t shared_order_key(const BagPerm& perm, const std::vector<int>& shared_pos) {
    std::vector<int> rank(kMaxBagSize, 0);
    for (std::size_t r = 0; r < perm.size(); ++r) rank[perm[r]] = static_cast<int>(r);
    std::vector<int> idx(shared_pos.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return rank[shared_pos[a]] < rank[shared_pos[b]]; });
    std::uint64_t key = 1;  // leading 1 distinguishes lengths
    for (int i : idx) key = (key << 4) | static_cast<std::uint64_t>(i);
    return key;
}

}  // namespace

TwdpTables compute_twdp_tables(const Instance& inst, const TreeDecomposition& td, int width_cap) {
    {
        auto bad = verify_decomposition(inst, td);
        if (!bad.empty())
            throw Error(ErrorKind::invalid_input, "invalid tree decomposition: " + bad.front());
    }
    if (td.width() > width_cap)
        throw Error(ErrorKind::precondition,
                    "decomposition width " + std::to_string(td.width()) + " exceeds cap " +
                        std::to_string(width_cap));
    if (td.width() + 1 > kMaxBagSize)
        throw Error(ErrorKind::precondition, "decomposition width exceeds implementation limit");

    const int n = inst.node_count();
    const int m = td.node_count();
    auto orders = compute_tree_orders(inst);

    TwdpTables out;
    out.td = td;
    out.tables.resize(m);
    out.edge_owner.assign(inst.edge_count(), -1);
    out.in_subtree.assign(m, {});

    std::vector<std::vector<int>> children(m);
    int root = td.root();
    for (int i = 0; i < m; ++i)
        if (td.parent[i] != -1) children[td.parent[i]].push_back(i);

    // Children-before-parent order via DFS from the root.
    std::vector<int> dfs{root};
    for (std::size_t i = 0; i < dfs.size(); ++i)
        for (int k : children[dfs[i]]) dfs.push_back(k);
    out.order.assign(dfs.rbegin(), dfs.rend());

    // Depth of each bag; an edge is owned by the shallowest bag containing
    // both endpoints so it is oriented exactly once.
    std::vector<int> bag_depth(m, 0);
    for (int b : dfs)
        if (td.parent[b] != -1) bag_depth[b] = bag_depth[td.parent[b]] + 1;
    for (int e = 0; e < inst.edge_count(); ++e) {
        auto [u, v] = inst.edges[e];
        int owner = -1;
        for (int b = 0; b < m; ++b) {
            if (!std::binary_search(td.bags[b].begin(), td.bags[b].end(), u)) continue;
            if (!std::binary_search(td.bags[b].begin(), td.bags[b].end(), v)) continue;
            if (owner == -1 || bag_depth[b] < bag_depth[owner]) owner = b;
        }
        out.edge_owner[e] = owner;  // verify guarantees owner != -1
    }

    std::vector<BagContext> ctx(m);
    for (int b : out.order) {
        // U_nu membership: own bag plus children's subtrees.
        std::vector<char> in_sub(n, 0);
        for (int v : td.bags[b]) in_sub[v] = 1;
        for (int k : children[b])
            for (int v = 0; v < n; ++v)
                if (out.in_subtree[k][v]) in_sub[v] = 1;
        out.in_subtree[b] = std::move(in_sub);

        BagContext& bc = ctx[b];
        bc.nodes = td.bags[b];
        bc.pos_of.assign(n, -1);
        for (std::size_t i = 0; i < bc.nodes.size(); ++i) bc.pos_of[bc.nodes[i]] = static_cast<int>(i);
        const int s = static_cast<int>(bc.nodes.size());
        bc.must_precede.assign(s, std::vector<char>(s, 0));
        // u precedes v whenever the tree path from u up to v stays inside U_nu.
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                if (i == j) continue;
                int u = bc.nodes[i], v = bc.nodes[j];
                if (!orders.ancestor_or_self(v, u)) continue;
                bool inside = true;
                for (int x = orders.parent[u]; x != v; x = orders.parent[x])
                    if (!out.in_subtree[b][x]) {
                        inside = false;
                        break;
                    }
                if (inside) bc.must_precede[i][j] = 1;
            }
    }

    // Owned edge lists.
    for (int e = 0; e < inst.edge_count(); ++e)
        out.tables[out.edge_owner[e]].owned_edges.push_back(e);

    for (int b : out.order) {
        DpTable& tab = out.tables[b];
        tab.bag = b;
        const BagContext& bc = ctx[b];
        const int s = static_cast<int>(bc.nodes.size());

        // All bag orders compatible with the forced precedences.
        BagPerm base(s);
        for (int i = 0; i < s; ++i) base[i] = static_cast<std::uint8_t>(i);
        std::sort(base.begin(), base.end());
        do {
            bool ok = true;
            for (int a = 0; a < s && ok; ++a)
                for (int c = a + 1; c < s && ok; ++c)
                    if (bc.must_precede[base[c]][base[a]]) ok = false;
            if (ok) tab.perms.push_back(base);
        } while (std::next_permutation(base.begin(), base.end()));
        if (tab.perms.empty())
            throw Error(ErrorKind::internal, "bag admits no consistent order");

        // Child summaries: per relative order of the shared nodes, the best
        // achievable contribution for each shared-coverage pattern.
        struct Summary {
            std::vector<int> shared_nodes;  // ascending instance ids
            std::vector<int> child_pos, parent_pos;
            std::map<std::uint64_t, std::map<std::uint32_t, std::pair<Weight, int>>> buckets;
        };
        std::vector<Summary> sums;
        for (int k : children[b]) {
            Summary sm;
            for (int v : bc.nodes)
                if (ctx[k].pos_of[v] != -1) {
                    sm.shared_nodes.push_back(v);
                    sm.child_pos.push_back(ctx[k].pos_of[v]);
                    sm.parent_pos.push_back(bc.pos_of[v]);
                }
            const DpTable& kt = out.tables[k];
            for (int ei = 0; ei < static_cast<int>(kt.entries.size()); ++ei) {
                const DpEntry& en = kt.entries[ei];
                std::uint64_t sigma = shared_order_key(kt.perms[en.perm], sm.child_pos);
                std::uint32_t d = 0;
                Weight shared_w = 0;
                for (std::size_t i = 0; i < sm.child_pos.size(); ++i)
                    if (en.cover & (1u << sm.child_pos[i])) {
                        d |= 1u << i;
                        shared_w += inst.weights[sm.shared_nodes[i]];
                    }
                Weight contrib = en.value - shared_w;
                auto& slot = sm.buckets[sigma];
                auto it = slot.find(d);
                if (it == slot.end() || contrib > it->second.first)
                    slot[d] = {contrib, ei};
            }
            sums.push_back(std::move(sm));
        }

        std::map<std::uint64_t, int> where;
        auto upsert = [&](std::uint32_t perm, std::uint32_t cover, const Weight& value, int c0,
                          int c1) {
            std::uint64_t key = entry_key(perm, cover, s);
            auto it = where.find(key);
            if (it == where.end()) {
                DpEntry en;
                en.perm = perm;
                en.cover = cover;
                en.value = value;
                en.child_entry[0] = c0;
                en.child_entry[1] = c1;
                where[key] = static_cast<int>(tab.entries.size());
                tab.entries.push_back(en);
            } else if (value > tab.entries[it->second].value) {
                DpEntry& en = tab.entries[it->second];
                en.value = value;
                en.child_entry[0] = c0;
                en.child_entry[1] = c1;
            }
        };

        for (std::uint32_t pi = 0; pi < tab.perms.size(); ++pi) {
            const BagPerm& perm = tab.perms[pi];
            std::vector<int> rank(s);
            for (int r = 0; r < s; ++r) rank[perm[r]] = r;

            // Owned edges run from the earlier endpoint to the later one.
            std::uint32_t own_cover = 0;
            for (int e : tab.owned_edges) {
                auto [u, v] = inst.edges[e];
                int pu = bc.pos_of[u], pv = bc.pos_of[v];
                own_cover |= 1u << (rank[pu] < rank[pv] ? pu : pv);
            }

            auto weight_of_mask = [&](std::uint32_t mask) {
                Weight w = 0;
                for (int i = 0; i < s; ++i)
                    if (mask & (1u << i)) w += inst.weights[bc.nodes[i]];
                return w;
            };

            if (sums.empty()) {
                upsert(pi, own_cover, weight_of_mask(own_cover), -1, -1);
                continue;
            }

            auto sigma0 = shared_order_key(perm, sums[0].parent_pos);
            auto b0 = sums[0].buckets.find(sigma0);
            if (b0 == sums[0].buckets.end()) continue;

            if (sums.size() == 1) {
                for (const auto& [d0, v0] : b0->second) {
                    std::uint32_t cover = own_cover;
                    for (std::size_t i = 0; i < sums[0].parent_pos.size(); ++i)
                        if (d0 & (1u << i)) cover |= 1u << sums[0].parent_pos[i];
                    upsert(pi, cover, weight_of_mask(cover) + v0.first, v0.second, -1);
                }
                continue;
            }

            auto sigma1 = shared_order_key(perm, sums[1].parent_pos);
            auto b1 = sums[1].buckets.find(sigma1);
            if (b1 == sums[1].buckets.end()) continue;
            for (const auto& [d0, v0] : b0->second) {
                std::uint32_t c0 = own_cover;
                for (std::size_t i = 0; i < sums[0].parent_pos.size(); ++i)
                    if (d0 & (1u << i)) c0 |= 1u << sums[0].parent_pos[i];
                for (const auto& [d1, v1] : b1->second) {
                    std::uint32_t cover = c0;
                    for (std::size_t i = 0; i < sums[1].parent_pos.size(); ++i)
                        if (d1 & (1u << i)) cover |= 1u << sums[1].parent_pos[i];
                    upsert(pi, cover, weight_of_mask(cover) + v0.first + v1.first, v0.second,
                           v1.second);
                }
            }
        }
        if (tab.entries.empty())
            throw Error(ErrorKind::internal, "empty dynamic programming table at a bag");
    }
    return out;
}

namespace {

void reconstruct(const Instance& inst, const TwdpTables& tables, int bag, int entry_index,
                 Orientation& o) {
    const DpTable& tab = tables.tables[bag];
    const DpEntry& en = tab.entries[entry_index];
    const BagPerm& perm = tab.perms[en.perm];
    std::vector<int> pos_of(inst.node_count(), -1);
    for (std::size_t i = 0; i < tables.td.bags[bag].size(); ++i)
        pos_of[tables.td.bags[bag][i]] = static_cast<int>(i);
    std::vector<int> rank(perm.size());
    for (std::size_t r = 0; r < perm.size(); ++r) rank[perm[r]] = static_cast<int>(r);
    for (int e : tab.owned_edges) {
        auto [u, v] = inst.edges[e];
        o.set(e, rank[pos_of[u]] < rank[pos_of[v]] ? Dir::forward : Dir::backward);
    }
    std::vector<int> kids;
    for (int i = 0; i < tables.td.node_count(); ++i)
        if (tables.td.parent[i] == bag) kids.push_back(i);
    for (std::size_t k = 0; k < kids.size(); ++k)
        if (en.child_entry[k] >= 0) reconstruct(inst, tables, kids[k], en.child_entry[k], o);
}

}  // namespace

Orientation entry_witness(const Instance& inst, const TwdpTables& tables, int bag,
                          int entry_index) {
    Orientation o(inst.edge_count());
    reconstruct(inst, tables, bag, entry_index, o);
    return o;
}

std::pair<Orientation, CoverageReport> solve_twdp(const Instance& inst,
                                                  const TreeDecomposition& td, int width_cap) {
    auto tables = compute_twdp_tables(inst, td, width_cap);
    int root = tables.td.root();
    const DpTable& rt = tables.tables[root];
    int best = 0;
    for (int i = 1; i < static_cast<int>(rt.entries.size()); ++i)
        if (rt.entries[i].value > rt.entries[best].value) best = i;

    Orientation o = entry_witness(inst, tables, root, best);
    o = complete_orientation(inst, o);
    if (!is_acyclic(inst, o))
        throw Error(ErrorKind::internal, "treewidth DP produced a cyclic orientation");
    auto rep = coverage(inst, o);
    if (rep.value != rt.entries[best].value)
        throw Error(ErrorKind::internal, "treewidth DP value does not match its witness");
    return {std::move(o), std::move(rep)};
}

}  // namespace treeaug
