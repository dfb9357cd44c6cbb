#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treeaug/instance.hpp"
#include "treeaug/treewidth.hpp"

namespace treeaug {

// BFS levels plus, per edge, the boundary it crosses. A tree arc (c, p)
// always crosses boundary level[p]; same-level edges cross none.
struct Layering {
    int d = 2;
    std::vector<int> level;          // node -> depth == BFS distance
    std::vector<int> edge_boundary;  // edge -> i when crossing (i, i+1), else -1
    int max_level = 0;
};

// One connected component of the graph with a shift's boundary set removed,
// re-rooted at a synthetic node so its tree has depth <= d.
struct Slice {
    Instance inst;                 // synthetic root is the instance root
    int artificial_root = -1;      // node index within inst
    std::vector<int> global_node;  // slice node -> original node, -1 for the root
    std::vector<int> global_edge;  // slice edge -> original edge index
    int min_level = 0;
    int depth = 0;                 // of the slice tree, attachment arcs included
};

// ok (nullopt) iff every node's tree depth equals its BFS distance from the
// root in the undirected graph.
std::optional<std::string> check_bfs_tree(const Instance& inst);

// Pre: check_bfs_tree ok, d >= 1.
Layering build_layering(const Instance& inst, int d);

// Components of the graph with shift k's boundaries deleted, k in 1..d.
std::vector<Slice> build_slices(const Instance& inst, const Layering& lay, int shift);

// Width <= 3d decomposition of the slice: the triangulated-face construction
// over the shallow tree when the slice carries an embedding, the min-fill
// heuristic otherwise. Errors when the result exceeds 3d (or, with
// strict_embedding, when the face construction cannot be completed).
TreeDecomposition shallow_decomposition(const Slice& slice, int d,
                                        bool strict_embedding = false);

// Baker shifting: for each k delete the k-th boundary class, solve every
// slice exactly, orient deleted edges from the deeper endpoint to the
// shallower, keep the best shift. Value >= (1 - 1/d) * optimum.
std::pair<Orientation, CoverageReport> solve_ptas(const Instance& inst, int d,
                                                  bool require_embedding = false);

// Per-shift orientation, exposed for the acyclicity property tests.
Orientation ptas_shift_orientation(const Instance& inst, const Layering& lay, int shift,
                                   bool require_embedding = false);

}  // namespace treeaug
