#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace treeaug {

// Combinatorial embedding: per-node cyclic order of darts. Link l owns darts
// 2l (first -> second) and 2l+1 (reverse). Face walks use
// next(d) = rotation successor of rev(d) at head(d).
struct EmbeddedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> links;
    std::vector<std::vector<int>> rot;  // node -> darts leaving it, cyclic

    static int rev(int d) { return d ^ 1; }
    int tail(int d) const { return d & 1 ? links[d >> 1].second : links[d >> 1].first; }
    int head(int d) const { return d & 1 ? links[d >> 1].first : links[d >> 1].second; }
    int dart_count() const { return 2 * static_cast<int>(links.size()); }

    std::vector<std::vector<int>> faces() const;
    // Euler's formula (V - E + F == 2) per connected component; isolated
    // nodes are ignored.
    bool euler_ok() const;
};

// Builds the dart structure from per-node neighbor rotations. Returns nullopt
// when a rotation references a non-link or the lists are inconsistent.
std::optional<EmbeddedGraph> embed_from_rotation(int n,
                                                 const std::vector<std::pair<int, int>>& links,
                                                 const std::vector<std::vector<int>>& neighbor_rot);

// Inserts links apex->v for every v in `attach`, all inside one existing face
// containing every attach node. False when no such face exists. `apex` must be
// a link-free node of g.
bool attach_apex(EmbeddedGraph& g, int apex, const std::vector<int>& attach);

// Adds chords until every face has length <= 3. False when stuck (never adds
// parallel links).
bool triangulate(EmbeddedGraph& g);

}  // namespace treeaug
