#include "treeaug/twoarm.hpp"

#include <algorithm>

namespace treeaug {

std::optional<TwoArmInstance> recognize_two_arm(const Instance& inst) {
    auto orders = compute_tree_orders(inst);
    const int n = inst.node_count();
    for (int v = 0; v < n; ++v) {
        std::size_t limit = v == inst.root ? 2 : 1;
        if (orders.children[v].size() > limit) return std::nullopt;
    }

    TwoArmInstance ta;
    std::vector<std::vector<int>*> arms{&ta.left, &ta.right};
    const auto& top = orders.children[inst.root];  // already in identifier order
    for (std::size_t a = 0; a < top.size(); ++a) {
        for (int v = top[a]; ; v = orders.children[v].empty() ? -1 : orders.children[v][0]) {
            if (v == -1) break;
            arms[a]->push_back(v);
        }
    }

    std::vector<int> arm_of(n, 0), pos_of(n, 0);  // root: arm 0, pos 0
    for (int i = 0; i < ta.nl(); ++i) {
        arm_of[ta.left[i]] = 1;
        pos_of[ta.left[i]] = i + 1;
    }
    for (int i = 0; i < ta.nr(); ++i) {
        arm_of[ta.right[i]] = 2;
        pos_of[ta.right[i]] = i + 1;
    }

    auto ec = classify_edges(inst);
    ta.back_edges = ec.back;
    for (int e : ec.back) ta.back_dir.push_back(ec.forced[e]);

    ta.delta = inst.weights;
    for (int e : ec.back) {
        auto [u, v] = inst.edges[e];
        int covered = ec.forced_dir(e) == Dir::forward ? u : v;
        ta.delta[covered] = Weight(0);
    }

    for (int e : ec.cross) {
        auto [u, v] = inst.edges[e];
        // Endpoints of a cross edge sit strictly on different arms.
        int lnode = arm_of[u] == 1 ? u : v;
        int rnode = arm_of[u] == 1 ? v : u;
        ta.cross.push_back({e, pos_of[lnode], pos_of[rnode]});
    }
    std::sort(ta.cross.begin(), ta.cross.end(),
              [](const TwoArmInstance::CrossEdge& a, const TwoArmInstance::CrossEdge& b) {
                  return a.li != b.li ? a.li < b.li : a.ri < b.ri;
              });
    return ta;
}

TwoArmTable compute_two_arm_table(const TwoArmInstance& ta) {
    const int m = static_cast<int>(ta.cross.size());
    const int rows = ta.nr() + 2;  // rows 1..nr+1; row nr+1 sees every edge
    TwoArmTable tab;
    tab.c.assign(rows, std::vector<Weight>(m + 1, Weight(0)));
    tab.choice.assign(rows, std::vector<TwoArmTable::Cell>(m + 1));

    // last_lt[k]: number of leading edges whose left endpoint is strictly
    // below e_k's (they form the prefix, by the sort order).
    std::vector<int> last_lt(m + 1, 0);
    for (int k = 1; k <= m; ++k) {
        int t = 0;
        for (int i = k - 1; i >= 1; --i)
            if (ta.cross[i - 1].li < ta.cross[k - 1].li) {
                t = i;
                break;
            }
        last_lt[k] = t;
    }
    // below[j][i]: last edge index <= i whose right endpoint is below row j.
    std::vector<std::vector<int>> below(rows, std::vector<int>(m + 1, 0));
    for (int j = 1; j < rows; ++j)
        for (int i = 1; i <= m; ++i)
            below[j][i] = ta.cross[i - 1].ri < j ? i : below[j][i - 1];

    std::vector<char> seen(rows, 0);
    for (int k = 1; k <= m; ++k) {
        const auto& ek = ta.cross[k - 1];
        for (int j = 1; j < rows; ++j) {
            if (ek.ri >= j) {
                tab.c[j][k] = tab.c[j][k - 1];
                tab.choice[j][k] = {0, k - 1};
                continue;
            }
            // Left-to-right: edge e_k's whole left fan inside C_{j,k} points
            // right, crediting the shared left endpoint once.
            int t_fan = below[j][last_lt[k]];
            Weight fwd = tab.c[j][t_fan] + ta.delta[ta.left[ek.li - 1]];

            // Right-to-left: every edge at or above e_k's right endpoint
            // points left, crediting each distinct right endpoint once.
            int t_row = ek.ri;
            Weight bwd = tab.c[t_row][k];
            std::fill(seen.begin(), seen.end(), 0);
            for (int i = 1; i <= k; ++i) {
                int ri = ta.cross[i - 1].ri;
                if (ri >= t_row && ri < j && !seen[ri]) {
                    seen[ri] = 1;
                    bwd += ta.delta[ta.right[ri - 1]];
                }
            }
            if (fwd >= bwd)
                tab.choice[j][k] = {1, t_fan};
            else
                tab.choice[j][k] = {2, t_row};
            tab.c[j][k] = std::max(fwd, bwd);
        }
    }
    return tab;
}

std::pair<Orientation, CoverageReport> solve_two_arm(const Instance& inst,
                                                     const TwoArmInstance& ta) {
    auto tab = compute_two_arm_table(ta);
    const int m = static_cast<int>(ta.cross.size());

    Orientation o(inst.edge_count());
    for (std::size_t i = 0; i < ta.back_edges.size(); ++i)
        o.set(ta.back_edges[i], static_cast<Dir>(ta.back_dir[i]));

    auto orient = [&](const TwoArmInstance::CrossEdge& ce, bool left_to_right) {
        int lnode = ta.left[ce.li - 1];
        int from = left_to_right ? lnode : ta.right[ce.ri - 1];
        o.set(ce.edge, inst.edges[ce.edge].first == from ? Dir::forward : Dir::backward);
    };

    int j = ta.nr() + 1, k = m;
    while (k > 0) {
        const auto& ek = ta.cross[k - 1];
        if (ek.ri >= j) {
            --k;
            continue;
        }
        const auto& cell = tab.choice[j][k];
        if (cell.decision == 1) {
            for (int i = 1; i <= k; ++i) {
                const auto& ce = ta.cross[i - 1];
                if (ce.li == ek.li && ce.ri < j) orient(ce, true);
            }
            k = cell.t;
        } else {
            for (int i = 1; i <= k; ++i) {
                const auto& ce = ta.cross[i - 1];
                if (ce.ri >= cell.t && ce.ri < j) orient(ce, false);
            }
            j = cell.t;
        }
    }

    if (!o.total()) throw Error(ErrorKind::internal, "two-arm witness left an edge unassigned");
    if (!is_acyclic(inst, o))
        throw Error(ErrorKind::internal, "two-arm DP produced a cyclic orientation");
    auto rep = coverage(inst, o);

    Weight back_value = 0;
    std::vector<char> back_covered(inst.node_count(), 0);
    for (std::size_t i = 0; i < ta.back_edges.size(); ++i) {
        auto [u, v] = inst.edges[ta.back_edges[i]];
        back_covered[static_cast<Dir>(ta.back_dir[i]) == Dir::forward ? u : v] = 1;
    }
    for (int v = 0; v < inst.node_count(); ++v)
        if (back_covered[v]) back_value += inst.weights[v];
    if (rep.value != back_value + tab.c[ta.nr() + 1][m])
        throw Error(ErrorKind::internal, "two-arm DP value does not match its witness");
    return {std::move(o), std::move(rep)};
}

}  // namespace treeaug
