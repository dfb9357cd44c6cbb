#include "treeaug/gen.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "treeaug/approx.hpp"
#include "treeaug/oracle.hpp"

namespace treeaug {

namespace {

std::string padded(const std::string& prefix, int i, int width) {
    std::string num = std::to_string(i);
    while (static_cast<int>(num.size()) < width) num.insert(num.begin(), '0');
    return prefix + num;
}

int id_width(int n) { return static_cast<int>(std::to_string(n ? n : 1).size()); }

}  // namespace

std::vector<std::string> validate_set_cover(const SetCoverInstance& sc) {
    std::vector<std::string> out;
    if (sc.elements < 1) out.push_back("no elements");
    if (sc.sets.empty()) out.push_back("no sets");
    if (sc.budget < 1 || sc.budget > static_cast<int>(sc.sets.size()))
        out.push_back("budget must satisfy 0 < k <= m");
    for (const auto& s : sc.sets) {
        if (s.empty()) out.push_back("empty set");
        for (int x : s)
            if (x < 1 || x > sc.elements) out.push_back("set contains unknown element");
    }
    return out;
}

bool set_cover_solvable(const SetCoverInstance& sc) {
    const int m = static_cast<int>(sc.sets.size());
    const std::uint64_t full = (1ULL << sc.elements) - 1;
    std::vector<std::uint64_t> bits(m, 0);
    for (int j = 0; j < m; ++j)
        for (int x : sc.sets[j]) bits[j] |= 1ULL << (x - 1);
    for (std::uint64_t pick = 0; pick < (1ULL << m); ++pick) {
        if (__builtin_popcountll(pick) > sc.budget) continue;
        std::uint64_t got = 0;
        for (int j = 0; j < m; ++j)
            if (pick & (1ULL << j)) got |= bits[j];
        if (got == full) return true;
    }
    return false;
}

std::pair<Instance, long long> reduce_set_cover(const SetCoverInstance& sc) {
    {
        auto bad = validate_set_cover(sc);
        if (!bad.empty())
            throw Error(ErrorKind::invalid_input, "invalid set cover instance: " + bad.front());
    }
    const int n = sc.elements, m = static_cast<int>(sc.sets.size()), k = sc.budget;
    const int wid = id_width(std::max(n, m));

    std::vector<std::string> names;
    auto add = [&](const std::string& name) {
        names.push_back(name);
        return static_cast<int>(names.size()) - 1;
    };

    int u = add("u");
    std::vector<int> r(m), s(m), t(m), l(m), p(m);
    for (int j = 0; j < m; ++j) {
        r[j] = add(padded("r", j + 1, wid));
        s[j] = add(padded("s", j + 1, wid));
        t[j] = add(padded("t", j + 1, wid));
        l[j] = add(padded("l", j + 1, wid));
        p[j] = add(padded("p", j + 1, wid));
    }
    std::vector<std::vector<int>> x(n, std::vector<int>(k + 1));
    for (int i = 0; i < n; ++i)
        for (int h = 0; h <= k; ++h)
            x[i][h] = add(padded("x", i + 1, wid) + "_" + std::to_string(h + 1));

    std::vector<std::pair<int, int>> arcs;
    for (int j = 0; j + 1 < m; ++j) arcs.emplace_back(p[j], p[j + 1]);  // collection path
    arcs.emplace_back(p[m - 1], u);
    for (int j = 0; j < m; ++j) {  // set paths
        arcs.emplace_back(r[j], s[j]);
        arcs.emplace_back(s[j], t[j]);
        arcs.emplace_back(t[j], u);
    }
    for (int i = 0; i < n; ++i)  // element paths
        for (int h = 0; h < k; ++h) arcs.emplace_back(x[i][h], x[i][h + 1]);
    // The element chains run one into the next so the l_j -> elements -> p_1
    // route is a single directed path.
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(x[i][k], x[i + 1][0]);
    arcs.emplace_back(x[n - 1][k], p[0]);
    for (int j = 0; j < m; ++j) arcs.emplace_back(l[j], x[0][0]);

    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < m; ++j)
        for (int xi : sc.sets[j])
            for (int h = 0; h <= k; ++h) edges.emplace_back(s[j], x[xi - 1][h]);
    for (int j = 0; j < m; ++j) {
        edges.emplace_back(l[j], u);
        edges.emplace_back(r[j], u);
        edges.emplace_back(l[j], t[j]);
        edges.emplace_back(p[j], r[j]);
    }

    long long threshold = static_cast<long long>(k + 1) * n + 4LL * m - k;
    return {Instance::build(std::move(names), u, std::move(arcs), std::move(edges)), threshold};
}

Instance random_instance(int n, double p, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::invalid_input, "need at least one node");
    Rng rng(seed);
    const int w = id_width(n - 1);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(padded("v", i, w));

    // Uniform labeled tree via a Prüfer sequence, rooted uniformly.
    std::vector<std::pair<int, int>> undirected;
    if (n == 2) undirected.emplace_back(0, 1);
    if (n > 2) {
        std::vector<int> prufer(n - 2);
        for (auto& x : prufer) x = static_cast<int>(rng.below(n));
        std::vector<int> degree(n, 1);
        for (int x : prufer) ++degree[x];
        std::set<int> leaves;
        for (int i = 0; i < n; ++i)
            if (degree[i] == 1) leaves.insert(i);
        for (int x : prufer) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            undirected.emplace_back(leaf, x);
            if (--degree[x] == 1) leaves.insert(x);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        undirected.emplace_back(a, b);
    }
    int root = static_cast<int>(rng.below(n));

    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : undirected) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> stack{root};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int wv : adj[v])
            if (!seen[wv]) {
                seen[wv] = 1;
                arcs.emplace_back(wv, v);
                stack.push_back(wv);
            }
    }

    std::set<std::pair<int, int>> tree_pairs;
    for (auto [c, pr] : arcs) tree_pairs.insert(std::minmax(c, pr));
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (tree_pairs.count({a, b})) continue;
            if (rng.chance(p)) edges.emplace_back(a, b);
        }
    return Instance::build(std::move(names), root, std::move(arcs), std::move(edges));
}

Instance grid_instance(int rows, int cols) {
    if (rows < 1 || cols < 1) throw Error(ErrorKind::invalid_input, "grid needs rows, cols >= 1");
    const int wr = id_width(rows - 1), wc = id_width(cols - 1);
    auto id = [&](int r, int c) { return r * cols + c; };
    std::vector<std::string> names;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) names.push_back(padded("g", r, wr) + "_" + padded("", c, wc));

    // BFS tree from (0,0); ties prefer the same-row parent.
    std::vector<std::pair<int, int>> arcs, edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (r == 0 && c == 0) continue;
            if (c > 0)
                arcs.emplace_back(id(r, c), id(r, c - 1));
            else
                arcs.emplace_back(id(r, c), id(r - 1, c));
        }
    std::set<std::pair<int, int>> tree_pairs;
    for (auto [c, p] : arcs) tree_pairs.insert(std::minmax(c, p));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols && !tree_pairs.count(std::minmax(id(r, c), id(r, c + 1))))
                edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows && !tree_pairs.count(std::minmax(id(r, c), id(r + 1, c))))
                edges.emplace_back(id(r, c), id(r + 1, c));
        }

    Instance inst = Instance::build(std::move(names), id(0, 0), std::move(arcs), std::move(edges));
    std::vector<std::vector<int>> rot(inst.node_count());
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            auto& list = rot[id(r, c)];
            if (r > 0) list.push_back(id(r - 1, c));
            if (c + 1 < cols) list.push_back(id(r, c + 1));
            if (r + 1 < rows) list.push_back(id(r + 1, c));
            if (c > 0) list.push_back(id(r, c - 1));
        }
    inst.embedding = std::move(rot);
    return inst;
}

Instance two_arm_instance(int n_l, int n_r, int m_cross, double p_back, std::uint64_t seed) {
    if (n_l < 0 || n_r < 0) throw Error(ErrorKind::invalid_input, "arm lengths must be >= 0");
    Rng rng(seed);
    const int wl = id_width(n_l), wr = id_width(n_r);
    std::vector<std::string> names{"d"};
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> left, right;
    for (int i = 1; i <= n_l; ++i) {
        names.push_back(padded("a", i, wl));
        left.push_back(static_cast<int>(names.size()) - 1);
        arcs.emplace_back(left.back(), i == 1 ? 0 : left[i - 2]);
    }
    for (int i = 1; i <= n_r; ++i) {
        names.push_back(padded("b", i, wr));
        right.push_back(static_cast<int>(names.size()) - 1);
        arcs.emplace_back(right.back(), i == 1 ? 0 : right[i - 2]);
    }

    std::set<std::pair<int, int>> used;
    std::vector<std::pair<int, int>> edges;
    if (n_l > 0 && n_r > 0) {
        int want = std::min<long long>(m_cross, static_cast<long long>(n_l) * n_r);
        int guard = 0;
        while (static_cast<int>(edges.size()) < want && guard++ < 100000) {
            int li = rng.range(1, n_l), ri = rng.range(1, n_r);
            auto key = std::minmax(left[li - 1], right[ri - 1]);
            if (!used.insert(key).second) continue;
            edges.emplace_back(left[li - 1], right[ri - 1]);
        }
    }
    // Within-arm candidates skip chain neighbors (those duplicate tree arcs).
    auto arm_backs = [&](const std::vector<int>& arm) {
        std::vector<int> chain{0};
        chain.insert(chain.end(), arm.begin(), arm.end());
        for (std::size_t i = 0; i < chain.size(); ++i)
            for (std::size_t j = i + 2; j < chain.size(); ++j)
                if (rng.chance(p_back)) edges.emplace_back(chain[j], chain[i]);
    };
    arm_backs(left);
    arm_backs(right);
    return Instance::build(std::move(names), 0, std::move(arcs), std::move(edges));
}

TightnessResult search_tightness_family(int max_n, std::uint64_t seed) {
    if (max_n < 1) throw Error(ErrorKind::invalid_input, "max_n must be >= 1");

    auto evaluate = [&](const Instance& inst) {
        auto [canon, rep] = half_approx(inst);
        auto [opt, orep] = solve_exact(inst, 18);
        TightnessResult res;
        res.instance = inst;
        res.optimum = orep.value;
        res.better_of_two = rep.value;
        res.ratio = rep.value == Weight(0)
                        ? 1.0
                        : boost::rational_cast<double>(orep.value / rep.value);
        return res;
    };

    TightnessResult best;
    best.ratio = 0.0;
    auto consider = [&](const Instance& inst) {
        if (inst.node_count() > max_n || inst.edge_count() > 18) return;
        auto res = evaluate(inst);
        if (res.ratio > best.ratio) best = res;
    };

    // Structured family: a star whose leaves carry a zig-zag path between the
    // early-identifier half and the late-identifier half. The optimum covers
    // all but one leaf while either sweep covers only one side.
    for (int p = 1; 2 * p + 1 <= max_n; ++p) {
        std::vector<std::string> names{"d"};
        std::vector<std::pair<int, int>> arcs;
        for (int i = 1; i <= p; ++i) names.push_back(padded("a", i, id_width(p)));
        for (int i = 1; i <= p; ++i) names.push_back(padded("b", i, id_width(p)));
        for (int v = 1; v <= 2 * p; ++v) arcs.emplace_back(v, 0);
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= p; ++i) {
            edges.emplace_back(i, p + i);              // a_i - b_i
            if (i < p) edges.emplace_back(i + 1, p + i);  // b_i - a_{i+1}
        }
        consider(Instance::build(std::move(names), 0, std::move(arcs), std::move(edges)));
    }

    // Random probing around the structured family.
    Rng rng(seed);
    for (int round = 0; round < 400; ++round) {
        int n = std::min(max_n, 3 + static_cast<int>(rng.below(std::max(1, max_n - 2))));
        double p = 0.15 + 0.5 * static_cast<double>(rng.below(100)) / 100.0;
        auto inst = random_instance(n, p, rng.next());
        if (inst.edge_count() > 14) continue;
        auto res = evaluate(inst);
        if (res.ratio > best.ratio) best = res;
    }

    if (best.ratio == 0.0) {  // max_n too small for any edge; report a trivial case
        best = evaluate(random_instance(1, 0.0, seed));
        best.ratio = 1.0;
    }
    return best;
}

}  // namespace treeaug
