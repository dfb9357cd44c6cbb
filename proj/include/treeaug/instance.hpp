#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treeaug/types.hpp"

namespace treeaug {

// A mixed graph: a spanning arborescence directed toward `root` plus a set of
// undirected edges. Nodes are dense indices; `names` carries the external
// identifiers. Immutable after construction by convention; all operations on
// it are pure functions.
struct Instance {
    std::vector<std::string> names;               // index -> identifier
    int root = 0;
    std::vector<std::pair<int, int>> tree_arcs;   // (child, parent)
    std::vector<std::pair<int, int>> edges;       // undirected, endpoints as stored
    std::vector<Weight> weights;                  // one per node, default 1
    bool weighted = false;                        // true iff weights were given explicitly
    // Optional rotation system: cyclic neighbor order per node (over tree arcs
    // and edges together). Only the planar machinery consumes it.
    std::optional<std::vector<std::vector<int>>> embedding;

    int node_count() const { return static_cast<int>(names.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    int index_of(const std::string& name) const;  // -1 when absent
    const Weight& weight(int v) const { return weights[v]; }

    // Uniform helper for generators/tests: nodes named by `names`, everything
    // referenced by index.
    static Instance build(std::vector<std::string> names, int root,
                          std::vector<std::pair<int, int>> tree_arcs,
                          std::vector<std::pair<int, int>> edges,
                          std::vector<Weight> weights = {});
};

// Direction of one undirected edge. `forward` means the arc runs from the
// stored pair's first endpoint to its second.
enum class Dir : std::int8_t { forward = 0, backward = 1 };

// A (possibly partial) assignment of directions to the instance's edges.
class Orientation {
  public:
    Orientation() = default;
    explicit Orientation(int edge_count) : dir_(edge_count, unset_) {}

    int edge_count() const { return static_cast<int>(dir_.size()); }
    bool assigned(int e) const { return dir_[e] != unset_; }
    Dir get(int e) const { return static_cast<Dir>(dir_[e]); }
    void set(int e, Dir d) { dir_[e] = static_cast<std::int8_t>(d); }
    void unset(int e) { dir_[e] = unset_; }

    bool total() const;
    int assigned_count() const;

    // Arc endpoints of edge e under this orientation; pre: assigned(e).
    std::pair<int, int> arc(const Instance& inst, int e) const;

    bool operator==(const Orientation& o) const { return dir_ == o.dir_; }

  private:
    static constexpr std::int8_t unset_ = -1;
    std::vector<std::int8_t> dir_;
};

struct CoverageReport {
    std::vector<int> covered;      // sorted node indices with >= 1 out-directed edge
    Weight value = 0;              // sum of covered weights
    std::vector<int> uncoverable;  // V_X (no incident edge) plus the root, sorted
};

// Parent/children lists plus DFS pre/post orders (children explored in
// ascending identifier order, so the orders are deterministic).
struct TreeOrders {
    std::vector<int> parent;    // parent[root] == -1
    std::vector<std::vector<int>> children;
    std::vector<int> preorder;  // node -> visit number
    std::vector<int> postorder;
    std::vector<int> depth;

    // True iff a is an ancestor of b or a == b.
    bool ancestor_or_self(int a, int b) const {
        return preorder[a] <= preorder[b] && postorder[b] <= postorder[a];
    }
};

struct EdgeClasses {
    std::vector<int> back;           // edge indices whose endpoints are tree-related
    std::vector<int> cross;          // everything else
    std::vector<std::int8_t> forced; // per edge: forced Dir for back edges, -1 for cross
    TreeOrders orders;

    Dir forced_dir(int e) const { return static_cast<Dir>(forced[e]); }
};

// Checks every Instance invariant; returns one description per violation
// (empty result == valid).
std::vector<std::string> validate(const Instance& inst);

// Pre for everything below: inst valid.
TreeOrders compute_tree_orders(const Instance& inst);

EdgeClasses classify_edges(const Instance& inst);

// True iff tree arcs plus the assigned arcs of `o` form a DAG.
bool is_acyclic(const Instance& inst, const Orientation& o);

// Throws Error(invalid_input) when `o` is infeasible.
CoverageReport coverage(const Instance& inst, const Orientation& o);

// Extends a feasible partial orientation to a total feasible one; newly
// assigned edges run from the earlier to the later endpoint in a topological
// order of tree + o, so coverage never decreases.
Orientation complete_orientation(const Instance& inst, const Orientation& o);

// Topological order of tree arcs + assigned arcs; empty when cyclic.
// Deterministic: among ready nodes the smallest index goes first.
std::vector<int> topological_order(const Instance& inst, const Orientation& o);

}  // namespace treeaug
