#pragma once

#include <optional>
#include <vector>

#include "antistrong/graph.hpp"
#include "antistrong/orientation.hpp"

namespace antistrong {

struct AppendixStats {
    int moved_to_black = 0;  // red edges moved to make the forest spanning
    int core_swaps = 0;      // exchanges that shrink the core of a bad red component
    int case_a = 0;          // even-cycle exchanges through a separating vertex
    int case_b = 0;          // even-cycle exchanges along the black path of a precious edge
};

struct AppendixResult {
    std::optional<ForestSplit> split;  // spanning tree + odd pseudoforest
    // When split is empty: edges of a subgraph H with |E(H)| > 2|V(H)| - 1 - beta(H).
    std::vector<EdgeId> violating;
    AppendixStats stats;
};

// Forest + odd pseudoforest partition found by colour exchanges instead of the
// matroid union: start from a forest + pseudoforest split, make the forest a
// spanning tree, repair red cycles without a precious edge, then remove even red
// cycles one at a time. Throws Disconnected.
AppendixResult appendix_decomposition(const UGraph& g);

}  // namespace antistrong
