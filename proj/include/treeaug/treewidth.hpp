#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "treeaug/instance.hpp"

namespace treeaug {

// Rooted tree of bags over the instance's nodes. `parent[i] == -1` marks the
// root; the shape must be binary for the solver.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;  // each sorted ascending
    std::vector<int> parent;

    int node_count() const { return static_cast<int>(bags.size()); }
    int width() const;
    int root() const;  // -1 if none/ambiguous
};

// Checks the four decomposition properties plus binarity; empty == ok.
std::vector<std::string> verify_decomposition(const Instance& inst,
                                              const TreeDecomposition& td);

// Min-fill elimination ordering, binarized. Width is whatever the heuristic
// reaches; callers verify.
TreeDecomposition heuristic_decomposition(const Instance& inst);

// Same bags, reshaped so no node has more than two children (extra children
// hang off same-content copies).
TreeDecomposition binarize(const TreeDecomposition& td);

// --- dynamic-programming tables, exposed for tests -------------------------

// A bag order, stored as the bag's node positions in precedence order.
using BagPerm = std::vector<std::uint8_t>;

struct DpEntry {
    std::uint32_t perm = 0;    // index into DpTable::perms
    std::uint32_t cover = 0;   // bitmask over bag positions covered so far
    Weight value = 0;          // covered weight in the bag's subtree (bag nodes included)
    std::int32_t child_entry[2] = {-1, -1};
};

struct DpTable {
    int bag = -1;
    std::vector<BagPerm> perms;       // orders consistent with the tree's partial order
    std::vector<DpEntry> entries;     // achievable (perm, cover) pairs, deduplicated
    std::vector<int> owned_edges;     // edge indices oriented at this bag
};

struct TwdpTables {
    TreeDecomposition td;
    std::vector<DpTable> tables;          // one per decomposition node
    std::vector<int> order;               // bags in children-before-parent order
    std::vector<int> edge_owner;          // edge -> owning bag
    std::vector<std::vector<char>> in_subtree;  // bag -> node membership of U_nu
};

// Fills every bag's table bottom-up. Pre: td valid, width <= width_cap.
TwdpTables compute_twdp_tables(const Instance& inst, const TreeDecomposition& td,
                               int width_cap = 6);

// Orientation of the edges owned inside `bag`'s subtree for one table entry
// (test hook; other edges stay unassigned).
Orientation entry_witness(const Instance& inst, const TwdpTables& tables, int bag,
                          int entry_index);

// Exact optimum via the table DP; the returned orientation is total and
// certified acyclic.
std::pair<Orientation, CoverageReport> solve_twdp(const Instance& inst,
                                                  const TreeDecomposition& td,
                                                  int width_cap = 6);

}  // namespace treeaug
