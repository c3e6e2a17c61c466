#pragma once

#include <optional>
#include <vector>

#include "antistrong/graph.hpp"

namespace antistrong {

// classes[0..k) are antistrong spanning subdigraphs, classes[k..k+l) have a
// connected underlying graph; all pairwise arc-disjoint.
struct PackResult {
    int k = 0;
    int l = 0;
    std::vector<std::vector<ArcId>> classes;
    std::vector<ArcId> leftover;
};

// k arc-disjoint antistrong spanning subdigraphs, i.e. k edge-disjoint spanning
// trees of B(D). Throws TooFewVertices when n < 3.
std::optional<PackResult> pack_antistrong(const Digraph& d, int k);

// An antistrong spanning H with UG(D - A(H)) connected: classes[0] is H and
// classes[1] a spanning tree of UG(D) avoiding it.
std::optional<PackResult> nonseparating_antistrong(const Digraph& d);

// k antistrong classes plus l classes with connected underlying graph.
std::optional<PackResult> mixed_pack(const Digraph& d, int k, int l);

// Definitional check of a packing, independent of how it was found.
bool verify_pack(const Digraph& d, const PackResult& p);

}  // namespace antistrong
