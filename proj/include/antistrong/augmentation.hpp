#pragma once

#include <optional>
#include <vector>

#include "antistrong/graph.hpp"

namespace antistrong {

struct AugmentationResult {
    std::vector<Arc> new_arcs;
    Digraph augmented;  // arcs of D first, in their original order, then new_arcs
    // k variant only: arc ids of `augmented` per antistrong spanning subdigraph.
    std::vector<std::vector<ArcId>> packing;
};

// Smallest arc set F such that D + F is antistrong. |F| equals the number of
// components of B(D) minus one. Throws TooFewVertices when n < 3.
AugmentationResult augment_antistrong(const Digraph& d);

// Smallest arc set F such that D + F has k arc-disjoint antistrong spanning
// subdigraphs, or nullopt when no set of new arcs achieves that.
// Throws TooFewVertices when n < 3 and InvalidInput when k < 1.
std::optional<AugmentationResult> augment_k_disjoint(const Digraph& d, int k);

}  // namespace antistrong
