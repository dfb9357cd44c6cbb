#include "treeaug/approx.hpp"

namespace treeaug {

CanonicalPair canonical_cross_orientations(const Instance& inst) {
    auto ec = classify_edges(inst);
    CanonicalPair pair{Orientation(inst.edge_count()), Orientation(inst.edge_count())};
    for (int e : ec.back) {
        pair.forward.set(e, ec.forced_dir(e));
        pair.reverse.set(e, ec.forced_dir(e));
    }
    for (int e : ec.cross) {
        auto [u, v] = inst.edges[e];
        Dir low_pre_first = ec.orders.preorder[u] < ec.orders.preorder[v] ? Dir::forward
                                                                          : Dir::backward;
        pair.forward.set(e, low_pre_first);
        pair.reverse.set(e, low_pre_first == Dir::forward ? Dir::backward : Dir::forward);
    }
    return pair;
}

std::pair<Orientation, CoverageReport> half_approx(const Instance& inst) {
    auto pair = canonical_cross_orientations(inst);
    auto fwd = coverage(inst, pair.forward);
    auto rev = coverage(inst, pair.reverse);
    if (rev.value > fwd.value) return {std::move(pair.reverse), std::move(rev)};
    return {std::move(pair.forward), std::move(fwd)};
}

}  // namespace treeaug
