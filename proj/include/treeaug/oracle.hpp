#pragma once

#include <utility>

#include "treeaug/instance.hpp"

namespace treeaug {

// Exhaustive exact solver. Back edges are fixed to their single feasible
// direction; all cross-edge assignments are enumerated. Ties break toward the
// lexicographically smallest assignment vector (edge 0 most significant,
// forward < backward). Throws Error(precondition) when |E| > limit.
std::pair<Orientation, CoverageReport> solve_exact(const Instance& inst, int limit = 20);

// Total weight of nodes incident to at least one undirected edge, root
// excluded; an upper bound on any orientation's value.
Weight upper_bound(const Instance& inst);

}  // namespace treeaug
