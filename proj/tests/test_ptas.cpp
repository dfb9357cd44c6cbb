#include <set>

#include "doctest.h"
#include "support.hpp"
#include "treeaug/gen.hpp"
#include "treeaug/oracle.hpp"
#include "treeaug/planar.hpp"
#include "treeaug/ptas.hpp"

using namespace treeaug;
using treeaug::testing::bfs_retree;
using treeaug::testing::mk;

TEST_CASE("a bare tree passes the BFS check") {
    auto inst = random_instance(9, 0.0, 2);
    CHECK(!check_bfs_tree(inst).has_value());
}

TEST_CASE("a shortcut edge breaks the BFS check") {
    // path n0 <- n1 <- n2 with edge {n2, n0}: n2 is at tree depth 2, distance 1
    auto inst = mk(3, 0, {{1, 0}, {2, 1}}, {{2, 0}});
    auto bad = check_bfs_tree(inst);
    REQUIRE(bad.has_value());
    CHECK(bad->find("n2") != std::string::npos);
}

TEST_CASE("grid instances pass the BFS check and the Euler check") {
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c) {
            auto g = grid_instance(r, c);
            CHECK(!check_bfs_tree(g).has_value());
            std::vector<std::pair<int, int>> links = g.tree_arcs;
            links.insert(links.end(), g.edges.begin(), g.edges.end());
            auto emb = embed_from_rotation(g.node_count(), links, *g.embedding);
            REQUIRE(emb.has_value());
            CHECK(emb->euler_ok());
        }
}

TEST_CASE("boundary classes partition the level-crossing edges") {
    auto g = grid_instance(4, 4);
    for (int d = 2; d <= 4; ++d) {
        auto lay = build_layering(g, d);
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges[e];
            if (lay.level[u] == lay.level[v]) {
                CHECK(lay.edge_boundary[e] == -1);
            } else {
                int hits = 0;
                for (int k = 1; k <= d; ++k)
                    if (lay.edge_boundary[e] % d == k % d) ++hits;
                CHECK(hits == 1);  // exactly one shift deletes it
            }
        }
    }
}

TEST_CASE("slices are shallow, valid, and jointly cover the edge set") {
    auto g = grid_instance(4, 4);
    for (int d = 2; d <= 3; ++d) {
        auto lay = build_layering(g, d);
        for (int k = 1; k <= d; ++k) {
            auto slices = build_slices(g, lay, k);
            std::set<int> covered_edges;
            for (const auto& s : slices) {
                CHECK(validate(s.inst).empty());
                CHECK(s.depth <= d);
                for (int e : s.global_edge) covered_edges.insert(e);
            }
            for (int e = 0; e < g.edge_count(); ++e) {
                bool cut = lay.edge_boundary[e] >= 0 && lay.edge_boundary[e] % d == k % d;
                CHECK(covered_edges.count(e) == (cut ? 0u : 1u));
            }
        }
    }
}

TEST_CASE("face construction yields verified decompositions within 3d on grid slices") {
    for (int cols = 2; cols <= 5; ++cols) {
        auto g = grid_instance(3, cols);
        int d = 3;
        auto lay = build_layering(g, d);
        for (int k = 1; k <= d; ++k) {
            for (const auto& s : build_slices(g, lay, k)) {
                if (!s.inst.embedding) continue;  // attachment can fall back
                auto td = shallow_decomposition(s, d, true);
                CHECK(verify_decomposition(s.inst, td).empty());
                CHECK(td.width() <= 3 * d);
            }
        }
    }
}

TEST_CASE("a tree slice trivially meets the width bound") {
    auto t = random_instance(8, 0.0, 3);
    auto lay = build_layering(t, 3);
    for (const auto& s : build_slices(t, lay, 1)) {
        auto td = shallow_decomposition(s, 3);
        CHECK(verify_decomposition(s.inst, td).empty());
        CHECK(td.width() <= 9);
    }
}

TEST_CASE("the face-construction decomposition solves slices to the same optimum") {
    auto g = grid_instance(3, 4);
    auto lay = build_layering(g, 2);
    for (const auto& s : build_slices(g, lay, 1)) {
        if (!s.inst.embedding || s.inst.edge_count() == 0) continue;
        auto baker = shallow_decomposition(s, 2, true);
        auto [o1, r1] = solve_twdp(s.inst, baker, 6);
        auto [o2, r2] = solve_exact(s.inst);
        CHECK(r1.value == r2.value);
    }
}

TEST_CASE("an edgeless instance solves to zero for every d") {
    auto t = random_instance(7, 0.0, 11);
    for (int d = 2; d <= 4; ++d) {
        auto [o, rep] = solve_ptas(t, d);
        CHECK(rep.value == Weight(0));
    }
}

TEST_CASE("solve_ptas rejects a non-BFS tree") {
    auto inst = mk(3, 0, {{1, 0}, {2, 1}}, {{2, 0}});
    CHECK_THROWS_AS(solve_ptas(inst, 2), Error);
}

TEST_CASE("PTAS meets its bound on small grids") {
    for (int r = 2; r <= 3; ++r)
        for (int c = 2; c <= 4; ++c) {
            auto g = grid_instance(r, c);
            auto [oo, orep] = solve_exact(g);
            for (int d = 2; d <= 3; ++d) {
                auto [o, rep] = solve_ptas(g, d);
                CHECK(Weight(d) * rep.value >= Weight(d - 1) * orep.value);
                CHECK(rep.value <= orep.value);
                CHECK(o.total());
            }
        }
}

TEST_CASE("PTAS meets its bound on random BFS instances") {
    Rng rng(19);
    int done = 0;
    while (done < 60) {
        auto raw = random_instance(4 + rng.range(0, 5), 0.25, rng.next());
        auto inst = bfs_retree(raw);
        if (inst.edge_count() > 14) continue;
        ++done;
        REQUIRE(!check_bfs_tree(inst).has_value());
        auto [oo, orep] = solve_exact(inst);
        for (int d = 2; d <= 3; ++d) {
            auto [o, rep] = solve_ptas(inst, d);
            CHECK(Weight(d) * rep.value >= Weight(d - 1) * orep.value);
        }
    }
}

TEST_CASE("every per-shift orientation is globally acyclic") {
    auto g = grid_instance(4, 4);
    for (int d = 2; d <= 4; ++d) {
        auto lay = build_layering(g, d);
        for (int k = 1; k <= d; ++k) {
            auto o = ptas_shift_orientation(g, lay, k);
            CHECK(o.total());
            CHECK(is_acyclic(g, o));
        }
    }
}

TEST_CASE("each slice's restriction of the shift solution is slice-optimal") {
    auto g = grid_instance(3, 3);
    auto lay = build_layering(g, 2);
    for (int k = 1; k <= 2; ++k) {
        auto o = ptas_shift_orientation(g, lay, k);
        for (const auto& s : build_slices(g, lay, k)) {
            if (s.inst.edge_count() == 0 || s.inst.edge_count() > 16) continue;
            Orientation restricted(s.inst.edge_count());
            for (int se = 0; se < s.inst.edge_count(); ++se)
                restricted.set(se, o.get(s.global_edge[se]));
            auto rep = coverage(s.inst, restricted);
            auto [so, srep] = solve_exact(s.inst);
            CHECK(rep.value == srep.value);
        }
    }
}

TEST_CASE("embedding-required fails cleanly without an embedding") {
    auto t = random_instance(6, 0.1, 8);
    CHECK_THROWS_AS(solve_ptas(bfs_retree(t), 2, true), Error);
}

TEST_CASE("the strict embedding path solves grids within the bound") {
    for (int r = 2; r <= 4; r += 2)
        for (int d = 2; d <= 3; ++d) {
            auto g = grid_instance(r, 4);
            auto [oo, orep] = solve_exact(g);
            auto [o, rep] = solve_ptas(g, d, true);
            CHECK(Weight(d) * rep.value >= Weight(d - 1) * orep.value);
        }
}
