#include <set>

#include "doctest.h"
#include "support.hpp"
#include "treeaug/approx.hpp"
#include "treeaug/gen.hpp"
#include "treeaug/oracle.hpp"

using namespace treeaug;
using treeaug::testing::mk;

TEST_CASE("no cross edges: both canonical orientations are the forced back edges") {
    auto inst = mk(3, 0, {{1, 0}, {2, 1}}, {{2, 0}});
    auto pair = canonical_cross_orientations(inst);
    CHECK(pair.forward == pair.reverse);
    CHECK(pair.forward.total());
}

TEST_CASE("sibling cross edge flips between the two canonical orientations") {
    // n1, n2 children of n0; n1 has the earlier identifier hence earlier preorder
    auto inst = mk(3, 0, {{1, 0}, {2, 0}}, {{1, 2}});
    auto pair = canonical_cross_orientations(inst);
    CHECK(pair.forward.arc(inst, 0) == std::make_pair(1, 2));
    CHECK(pair.reverse.arc(inst, 0) == std::make_pair(2, 1));
}

TEST_CASE("both canonical orientations are total and feasible on random instances") {
    Rng rng(5);
    for (int round = 0; round < 2000; ++round) {
        auto inst = random_instance(2 + rng.range(0, 10), 0.1 + 0.06 * rng.range(0, 8), rng.next());
        auto pair = canonical_cross_orientations(inst);
        CHECK(pair.forward.total());
        CHECK(pair.reverse.total());
        CHECK(is_acyclic(inst, pair.forward));
        CHECK(is_acyclic(inst, pair.reverse));
    }
}

TEST_CASE("half_approx value is within a factor two of the optimum") {
    Rng rng(11);
    int done = 0;
    while (done < 250) {
        auto inst = random_instance(3 + rng.range(0, 7), 0.15 + 0.05 * rng.range(0, 6), rng.next());
        if (inst.edge_count() > 16) continue;
        ++done;
        auto [o, rep] = half_approx(inst);
        auto [oo, orep] = solve_exact(inst);
        CHECK(Weight(2) * rep.value >= orep.value);
        CHECK(rep.value <= orep.value);
    }
}

TEST_CASE("half_approx with no undirected edges has value zero") {
    auto inst = random_instance(6, 0.0, 3);
    auto [o, rep] = half_approx(inst);
    CHECK(rep.value == Weight(0));
}

TEST_CASE("every cross endpoint outside V_B and V_X is covered by one of the sweeps") {
    Rng rng(17);
    for (int round = 0; round < 300; ++round) {
        auto inst = random_instance(3 + rng.range(0, 8), 0.3, rng.next());
        auto ec = classify_edges(inst);
        auto pair = canonical_cross_orientations(inst);
        auto fwd = coverage(inst, pair.forward);
        auto rev = coverage(inst, pair.reverse);
        std::set<int> fs(fwd.covered.begin(), fwd.covered.end());
        std::set<int> rs(rev.covered.begin(), rev.covered.end());
        for (int e : ec.cross) {
            auto [u, v] = inst.edges[e];
            for (int x : {u, v}) {
                if (x == inst.root) continue;
                CHECK((fs.count(x) || rs.count(x)));
            }
        }
    }
}

TEST_CASE("ties break toward the preorder sweep") {
    // one cross edge: both sweeps cover exactly one node; forward must win
    auto inst = mk(3, 0, {{1, 0}, {2, 0}}, {{1, 2}});
    auto pair = canonical_cross_orientations(inst);
    auto [o, rep] = half_approx(inst);
    CHECK(o == pair.forward);
}
