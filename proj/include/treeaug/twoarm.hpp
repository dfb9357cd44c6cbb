#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treeaug/instance.hpp"

namespace treeaug {

// A tree made of (at most) two root-directed paths, with its cross edges
// sorted the way the dynamic program consumes them. Holds indices into the
// originating Instance.
struct TwoArmInstance {
    std::vector<int> left;   // nodes l_1..l_nl, leaf-most last
    std::vector<int> right;  // nodes r_1..r_nr
    struct CrossEdge {
        int edge;  // instance edge index
        int li;    // 1-based position on the left arm
        int ri;    // 1-based position on the right arm
    };
    std::vector<CrossEdge> cross;  // sorted by (li, ri)
    std::vector<int> back_edges;
    std::vector<std::int8_t> back_dir;  // Dir per back edge
    std::vector<Weight> delta;          // node -> marginal credit (0 if back-covered)

    int nl() const { return static_cast<int>(left.size()); }
    int nr() const { return static_cast<int>(right.size()); }
};

// Succeeds iff the tree is a single path or exactly two root paths. The arm
// whose first node has the smaller identifier becomes the left arm.
std::optional<TwoArmInstance> recognize_two_arm(const Instance& inst);

struct TwoArmTable {
    // c[j][k]: best credit beyond the forced back edges over edges e_i with
    // i <= k and right endpoint below row j; rows run 1..nr+1 (sentinel).
    std::vector<std::vector<Weight>> c;
    struct Cell {
        std::int8_t decision = 0;  // 0 copy, 1 left-to-right fan, 2 right-to-left sweep
        int t = 0;                 // fan: edge count to recurse on; sweep: row to recurse on
    };
    std::vector<std::vector<Cell>> choice;
};

TwoArmTable compute_two_arm_table(const TwoArmInstance& ta);

// Exact optimum; the orientation is total and certified acyclic.
std::pair<Orientation, CoverageReport> solve_two_arm(const Instance& inst,
                                                     const TwoArmInstance& ta);

}  // namespace treeaug
