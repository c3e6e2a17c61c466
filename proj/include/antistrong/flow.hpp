#pragma once

#include <vector>

#include "antistrong/graph.hpp"

namespace antistrong {

// Edge-disjoint s-t paths in an undirected graph with unit capacities.
// Each path is the edge sequence of an s-t walk; no edge appears twice
// across all paths. At most `limit` paths are computed (limit < 0 means no limit),
// so deciding ">= k" costs O(k m).
struct DisjointPaths {
    int count = 0;
    std::vector<std::vector<EdgeId>> paths;
};

DisjointPaths edge_disjoint_paths(const UGraph& g, VertexId s, VertexId t, int limit = -1);

// Value only; same augmenting procedure without the decomposition.
int max_edge_disjoint_paths(const UGraph& g, VertexId s, VertexId t, int limit = -1);

}  // namespace antistrong
