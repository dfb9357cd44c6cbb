#include "treeaug/instance.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>

namespace treeaug {

int Instance::index_of(const std::string& name) const {
    for (int i = 0; i < node_count(); ++i)
        if (names[i] == name) return i;
    return -1;
}

Instance Instance::build(std::vector<std::string> names, int root,
                         std::vector<std::pair<int, int>> tree_arcs,
                         std::vector<std::pair<int, int>> edges,
                         std::vector<Weight> weights) {
    Instance inst;
    inst.names = std::move(names);
    inst.root = root;
    inst.tree_arcs = std::move(tree_arcs);
    inst.edges = std::move(edges);
    if (weights.empty()) {
        inst.weights.assign(inst.names.size(), Weight(1));
        inst.weighted = false;
    } else {
        inst.weights = std::move(weights);
        inst.weighted = true;
    }
    return inst;
}

bool Orientation::total() const {
    for (auto d : dir_)
        if (d == unset_) return false;
    return true;
}

int Orientation::assigned_count() const {
    int c = 0;
    for (auto d : dir_)
        if (d != unset_) ++c;
    return c;
}

std::pair<int, int> Orientation::arc(const Instance& inst, int e) const {
    auto [u, v] = inst.edges[e];
    return get(e) == Dir::forward ? std::make_pair(u, v) : std::make_pair(v, u);
}

std::vector<std::string> validate(const Instance& inst) {
    std::vector<std::string> out;
    const int n = inst.node_count();

    std::unordered_set<std::string> seen;
    for (const auto& name : inst.names) {
        if (name.empty()) out.push_back("empty node identifier");
        if (!seen.insert(name).second) out.push_back("duplicate node identifier: " + name);
    }
    if (n == 0) {
        out.push_back("no nodes");
        return out;
    }
    if (inst.root < 0 || inst.root >= n) {
        out.push_back("root is not a node");
        return out;
    }

    auto in_range = [&](int v) { return v >= 0 && v < n; };

    // Arborescence: |nodes|-1 arcs, one out-arc per non-root node, none at the
    // root, and every parent chain reaches the root.
    if (static_cast<int>(inst.tree_arcs.size()) != n - 1)
        out.push_back("tree arc count is not |nodes|-1");
    std::vector<int> out_arcs(n, 0);
    std::vector<int> parent(n, -1);
    bool arcs_ok = true;
    for (auto [c, p] : inst.tree_arcs) {
        if (!in_range(c) || !in_range(p)) {
            out.push_back("tree arc references unknown node");
            arcs_ok = false;
            continue;
        }
        if (c == p) {
            out.push_back("tree arc is a self-loop: " + inst.names[c]);
            arcs_ok = false;
            continue;
        }
        ++out_arcs[c];
        parent[c] = p;
    }
    if (arcs_ok) {
        if (out_arcs[inst.root] != 0) out.push_back("root has an outgoing tree arc");
        for (int v = 0; v < n; ++v)
            if (v != inst.root && out_arcs[v] != 1)
                out.push_back("non-root node with != 1 outgoing tree arc: " + inst.names[v]);
    }
    if (out.empty()) {
        // Parent chains terminate at the root iff there is no cycle.
        for (int v = 0; v < n; ++v) {
            int x = v, steps = 0;
            while (x != inst.root && steps <= n) {
                x = parent[x];
                ++steps;
            }
            if (x != inst.root) {
                out.push_back("tree arcs contain a cycle (node " + inst.names[v] +
                              " does not reach root)");
                break;
            }
        }
    }

    std::set<std::pair<int, int>> arc_pairs;
    for (auto [c, p] : inst.tree_arcs)
        if (in_range(c) && in_range(p)) arc_pairs.insert(std::minmax(c, p));
    std::set<std::pair<int, int>> edge_pairs;
    for (auto [u, v] : inst.edges) {
        if (!in_range(u) || !in_range(v)) {
            out.push_back("edge references unknown node");
            continue;
        }
        if (u == v) {
            out.push_back("edge is a self-loop: " + inst.names[u]);
            continue;
        }
        auto key = std::minmax(u, v);
        if (arc_pairs.count(key))
            out.push_back("edge duplicates tree arc endpoints: " + inst.names[u] + "," +
                          inst.names[v]);
        if (!edge_pairs.insert(key).second)
            out.push_back("parallel undirected edge: " + inst.names[u] + "," + inst.names[v]);
    }

    if (static_cast<int>(inst.weights.size()) != n) {
        out.push_back("weight count does not match node count");
    } else {
        for (int v = 0; v < n; ++v)
            if (inst.weights[v] <= Weight(0))
                out.push_back("non-positive weight at node " + inst.names[v]);
    }

    if (inst.embedding) {
        const auto& rot = *inst.embedding;
        if (static_cast<int>(rot.size()) != n) {
            out.push_back("embedding size does not match node count");
        } else {
            std::vector<std::multiset<int>> nbr(n);
            for (auto [c, p] : inst.tree_arcs)
                if (in_range(c) && in_range(p)) {
                    nbr[c].insert(p);
                    nbr[p].insert(c);
                }
            for (auto [u, v] : inst.edges)
                if (in_range(u) && in_range(v)) {
                    nbr[u].insert(v);
                    nbr[v].insert(u);
                }
            for (int v = 0; v < n; ++v) {
                std::multiset<int> listed(rot[v].begin(), rot[v].end());
                if (listed != nbr[v])
                    out.push_back("embedding rotation at " + inst.names[v] +
                                  " does not list the node's neighbors");
            }
        }
    }
    return out;
}

TreeOrders compute_tree_orders(const Instance& inst) {
    const int n = inst.node_count();
    TreeOrders t;
    t.parent.assign(n, -1);
    t.children.assign(n, {});
    t.preorder.assign(n, -1);
    t.postorder.assign(n, -1);
    t.depth.assign(n, 0);
    for (auto [c, p] : inst.tree_arcs) {
        t.parent[c] = p;
        t.children[p].push_back(c);
    }
    for (auto& ch : t.children)
        std::sort(ch.begin(), ch.end(),
                  [&](int a, int b) { return inst.names[a] < inst.names[b]; });

    int pre = 0, post = 0;
    // Iterative DFS; second visit assigns the postorder number.
    std::vector<std::pair<int, bool>> stack{{inst.root, false}};
    while (!stack.empty()) {
        auto [v, done] = stack.back();
        stack.pop_back();
        if (done) {
            t.postorder[v] = post++;
            continue;
        }
        t.preorder[v] = pre++;
        stack.emplace_back(v, true);
        for (auto it = t.children[v].rbegin(); it != t.children[v].rend(); ++it) {
            t.depth[*it] = t.depth[v] + 1;
            stack.emplace_back(*it, false);
        }
    }
    return t;
}

EdgeClasses classify_edges(const Instance& inst) {
    EdgeClasses ec;
    ec.orders = compute_tree_orders(inst);
    ec.forced.assign(inst.edge_count(), -1);
    for (int e = 0; e < inst.edge_count(); ++e) {
        auto [u, v] = inst.edges[e];
        if (ec.orders.ancestor_or_self(v, u)) {
            ec.back.push_back(e);
            ec.forced[e] = static_cast<std::int8_t>(Dir::forward);  // u -> v (descendant first)
        } else if (ec.orders.ancestor_or_self(u, v)) {
            ec.back.push_back(e);
            ec.forced[e] = static_cast<std::int8_t>(Dir::backward);
        } else {
            ec.cross.push_back(e);
        }
    }
    return ec;
}

std::vector<int> topological_order(const Instance& inst, const Orientation& o) {
    const int n = inst.node_count();
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    auto add = [&](int a, int b) {
        succ[a].push_back(b);
        ++indeg[b];
    };
    for (auto [c, p] : inst.tree_arcs) add(c, p);
    for (int e = 0; e < inst.edge_count(); ++e)
        if (o.assigned(e)) {
            auto [a, b] = o.arc(inst, e);
            add(a, b);
        }

    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : succ[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) order.clear();
    return order;
}

bool is_acyclic(const Instance& inst, const Orientation& o) {
    // Kahn without the priority queue; cheaper for the oracle's hot loop.
    const int n = inst.node_count();
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (auto [c, p] : inst.tree_arcs) {
        succ[c].push_back(p);
        ++indeg[p];
    }
    for (int e = 0; e < inst.edge_count(); ++e)
        if (o.assigned(e)) {
            auto [a, b] = o.arc(inst, e);
            succ[a].push_back(b);
            ++indeg[b];
        }
    std::vector<int> stack;
    stack.reserve(n);
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : succ[v])
            if (--indeg[w] == 0) stack.push_back(w);
    }
    return seen == n;
}

CoverageReport coverage(const Instance& inst, const Orientation& o) {
    if (!is_acyclic(inst, o))
        throw Error(ErrorKind::invalid_input, "orientation is infeasible (directed cycle)");
    const int n = inst.node_count();
    std::vector<char> covered(n, 0), touched(n, 0);
    for (int e = 0; e < inst.edge_count(); ++e) {
        auto [u, v] = inst.edges[e];
        touched[u] = touched[v] = 1;
        if (o.assigned(e)) covered[o.arc(inst, e).first] = 1;
    }
    CoverageReport rep;
    for (int v = 0; v < n; ++v) {
        if (covered[v]) {
            rep.covered.push_back(v);
            rep.value += inst.weights[v];
        }
        if (!touched[v] || v == inst.root)
            rep.uncoverable.push_back(v);
    }
    return rep;
}

Orientation complete_orientation(const Instance& inst, const Orientation& o) {
    auto order = topological_order(inst, o);
    if (order.empty() && inst.node_count() > 0)
        throw Error(ErrorKind::invalid_input, "orientation is infeasible (directed cycle)");
    std::vector<int> pos(inst.node_count());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    Orientation done = o;
    for (int e = 0; e < inst.edge_count(); ++e) {
        if (done.assigned(e)) continue;
        auto [u, v] = inst.edges[e];
        done.set(e, pos[u] < pos[v] ? Dir::forward : Dir::backward);
    }
    return done;
}

}  // namespace treeaug
