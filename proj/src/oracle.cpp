#include "treeaug/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace treeaug {

Weight upper_bound(const Instance& inst) {
    std::vector<char> touched(inst.node_count(), 0);
    for (auto [u, v] : inst.edges) touched[u] = touched[v] = 1;
    Weight total = 0;
    for (int v = 0; v < inst.node_count(); ++v)
        if (touched[v] && v != inst.root) total += inst.weights[v];
    return total;
}

namespace {

using int128 = __int128;

// One enumeration worker; scans [lo, hi) of the cross-edge mask space and
// keeps the first (= lexicographically smallest) mask attaining the best
// value. Masks map cross edges in ascending edge-index order onto bits from
// most significant down, so ascending masks scan assignment vectors in
// lexicographic order.
struct Enumerator {
    const Instance& inst;
    const std::vector<int>& cross;              // cross edge indices, ascending
    const std::vector<std::vector<int>>& base_succ;
    const std::vector<int>& base_indeg;
    const std::vector<char>& base_covered;
    const std::vector<int128>& w;               // scaled integral weights

    int128 best_value = -1;
    std::uint64_t best_mask = 0;
    bool found = false;

    void run(std::uint64_t lo, std::uint64_t hi) {
        const int n = inst.node_count();
        const int c = static_cast<int>(cross.size());
        std::vector<int> indeg(n);
        std::vector<char> covered(n);
        std::vector<int> stack;
        stack.reserve(n);
        std::vector<int> src(c), dst(c);

        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            covered = base_covered;
            for (int i = 0; i < c; ++i) {
                auto [u, v] = inst.edges[cross[i]];
                bool back = (mask >> (c - 1 - i)) & 1u;
                src[i] = back ? v : u;
                dst[i] = back ? u : v;
                covered[src[i]] = 1;
            }
            int128 value = 0;
            for (int v = 0; v < n; ++v)
                if (covered[v] && v != inst.root) value += w[v];
            if (value <= best_value && found) continue;

            indeg = base_indeg;
            for (int i = 0; i < c; ++i) ++indeg[dst[i]];
            stack.clear();
            for (int v = 0; v < n; ++v)
                if (indeg[v] == 0) stack.push_back(v);
            int seen = 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++seen;
                for (int t : base_succ[v])
                    if (--indeg[t] == 0) stack.push_back(t);
                for (int i = 0; i < c; ++i)
                    if (src[i] == v && --indeg[dst[i]] == 0) stack.push_back(dst[i]);
            }
            if (seen == n) {
                best_value = value;
                best_mask = mask;
                found = true;
            }
        }
    }
};

}  // namespace

std::pair<Orientation, CoverageReport> solve_exact(const Instance& inst, int limit) {
    if (inst.edge_count() > limit)
        throw Error(ErrorKind::precondition,
                    "instance too large for exact enumeration: " +
                        std::to_string(inst.edge_count()) + " edges > limit " +
                        std::to_string(limit));
    auto violations = validate(inst);
    if (!violations.empty())
        throw Error(ErrorKind::invalid_input, "invalid instance: " + violations.front());

    const int n = inst.node_count();
    auto ec = classify_edges(inst);
    const auto& cross = ec.cross;
    const int c = static_cast<int>(cross.size());
    if (c > 62)
        throw Error(ErrorKind::precondition, "too many cross edges to enumerate");

    // Scaled integral weights keep the hot loop off rational arithmetic.
    long long lcm = 1;
    for (const auto& wt : inst.weights) {
        lcm = std::lcm(lcm, wt.denominator());
        if (lcm > (1LL << 50))
            throw Error(ErrorKind::precondition, "weight denominators too large for the oracle");
    }
    std::vector<int128> w(n);
    for (int v = 0; v < n; ++v)
        w[v] = static_cast<int128>(inst.weights[v].numerator()) *
               (lcm / inst.weights[v].denominator());

    // Tree arcs plus forced back arcs are common to every candidate.
    std::vector<std::vector<int>> base_succ(n);
    std::vector<int> base_indeg(n, 0);
    std::vector<char> base_covered(n, 0);
    for (auto [child, parent] : inst.tree_arcs) {
        base_succ[child].push_back(parent);
        ++base_indeg[parent];
    }
    for (int e : ec.back) {
        auto [u, v] = inst.edges[e];
        int from = ec.forced_dir(e) == Dir::forward ? u : v;
        int to = from == u ? v : u;
        base_succ[from].push_back(to);
        ++base_indeg[to];
        base_covered[from] = 1;
    }

    const std::uint64_t total = 1ULL << c;
    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = (c >= 16 && hw > 1) ? std::min<unsigned>(hw, 8) : 1;

    std::vector<Enumerator> enums;
    enums.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        enums.push_back(Enumerator{inst, cross, base_succ, base_indeg, base_covered, w});
    if (workers == 1) {
        enums[0].run(0, total);
    } else {
        std::vector<std::thread> threads;
        std::uint64_t chunk = total / workers;
        for (unsigned t = 0; t < workers; ++t) {
            std::uint64_t lo = t * chunk;
            std::uint64_t hi = (t + 1 == workers) ? total : lo + chunk;
            threads.emplace_back([&enums, t, lo, hi] { enums[t].run(lo, hi); });
        }
        for (auto& th : threads) th.join();
    }

    int128 best_value = -1;
    std::uint64_t best_mask = 0;
    bool found = false;
    for (const auto& en : enums) {
        if (!en.found) continue;
        if (!found || en.best_value > best_value) {
            best_value = en.best_value;
            best_mask = en.best_mask;
            found = true;
        }
    }
    if (!found)
        throw Error(ErrorKind::internal, "no feasible total orientation found");  // cannot happen

    Orientation best(inst.edge_count());
    for (int e : ec.back) best.set(e, ec.forced_dir(e));
    for (int i = 0; i < c; ++i)
        best.set(cross[i], ((best_mask >> (c - 1 - i)) & 1u) ? Dir::backward : Dir::forward);
    return {best, coverage(inst, best)};
}

}  // namespace treeaug
