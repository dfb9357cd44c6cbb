#pragma once

#include <utility>

#include "treeaug/instance.hpp"

namespace treeaug {

// The two canonical total orientations: back edges run descendant->ancestor in
// both; cross edges run from the lower-preorder endpoint to the higher one in
// `forward`, and the other way around in `reverse`. Both are always feasible.
struct CanonicalPair {
    Orientation forward;
    Orientation reverse;
};

CanonicalPair canonical_cross_orientations(const Instance& inst);

// Picks whichever canonical orientation covers more weight (ties go to
// forward). Guaranteed within a factor 2 of the optimum.
std::pair<Orientation, CoverageReport> half_approx(const Instance& inst);

}  // namespace treeaug
