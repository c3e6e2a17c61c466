#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "antistrong/graph.hpp"

namespace antistrong {

// arcs[e] is the direction given to edge e.
struct Orientation {
    std::vector<Arc> arcs;

    bool operator==(const Orientation&) const = default;
};

// Throws InvalidGraph when two copies of an edge got the same direction.
Digraph to_digraph(int n, const Orientation& o);
// Checks that arcs[e] joins the ends of edge e for every e.
bool orients(const UGraph& g, const Orientation& o);

struct RedComponent {
    std::vector<VertexId> vertices;  // sorted
    std::vector<EdgeId> edges;       // sorted
    std::vector<EdgeId> cycle;       // edges of its cycle, empty for a tree
    VertexId root = 0;
    std::optional<EdgeId> precious;
};

// Black forest + red pseudoforest, with the 2-colouring of the black forest
// (smallest vertex of each black component on side 0) and per red component the
// root and precious edge used by the CAT-free construction.
struct TwoDecomposition {
    std::vector<EdgeId> black;
    std::vector<EdgeId> red;
    std::vector<int> side;
    std::vector<RedComponent> components;
};

// Root rule: on a red cycle, the vertex with the most cycle neighbours on its own
// side (ties to the smallest id); precious edge to its smallest such neighbour.
// Trees are rooted at their smallest vertex. Throws InvalidInput when black is not
// a forest or red is not a pseudoforest.
TwoDecomposition describe_decomposition(const UGraph& g, std::span<const EdgeId> black, std::span<const EdgeId> red);

struct ForestSplit {
    std::vector<EdgeId> forest;
    std::vector<EdgeId> pseudoforest;
};

struct DecompositionResult {
    std::optional<ForestSplit> split;
    // When split is empty: the union deficiency set, and the edges of one subgraph H
    // with |E(H)| > 2|V(H)| - 1 - beta(H).
    std::vector<EdgeId> deficiency;
    std::vector<EdgeId> violating;
};

// Forest + odd pseudoforest partition of E, via the union of the cycle and even
// bicircular matroids.
DecompositionResult decompose_forest_odd_pseudoforest(const UGraph& g);

// True when `h` is a subgraph with |E(H)| > 2|V(H)| - 1 - beta(H).
bool is_violating_subgraph(const UGraph& g, std::span<const EdgeId> h);

struct CatFreeResult {
    Orientation orientation;
    TwoDecomposition structure;
};

// `tree` and `pseudoforest` must partition E(g); `tree` a spanning tree and
// `pseudoforest` an odd pseudoforest. The resulting B(D) is a forest.
CatFreeResult catfree_orient(const UGraph& g, std::span<const EdgeId> tree, std::span<const EdgeId> pseudoforest);

// A partition Q of V with e(Q) edges between parts and b(Q) parts inducing a
// bipartite subgraph.
struct PartitionCertificate {
    std::vector<std::vector<VertexId>> parts;
    int e = 0;
    int b = 0;

    int bound() const { return static_cast<int>(parts.size()) - 1 + b; }
    bool operator==(const PartitionCertificate&) const = default;
};

// Computes e(Q) and b(Q); parts are sorted, and ordered by their smallest vertex.
// Throws NotAPartition.
PartitionCertificate make_certificate(const UGraph& g, std::vector<std::vector<VertexId>> parts);

// Recomputes e(Q), b(Q) and checks e(Q) < |Q| - 1 + b(Q). Throws NotAPartition.
bool verify_certificate(const UGraph& g, const PartitionCertificate& q);

using OrientationOutcome = std::variant<Orientation, PartitionCertificate>;

// An antistrong orientation of g, or a partition violating e(Q) >= |Q| - 1 + b(Q).
// Throws InvalidInput for the empty graph.
OrientationOutcome antistrong_orientation(const UGraph& g);

// Vertex v splits into v' = v and v'' = n + v; edge i keeps its index.
struct Detachment {
    int n = 0;
    std::vector<Edge> edges;

    bool operator==(const Detachment&) const = default;
};

std::variant<Detachment, PartitionCertificate> good_2_detachment(const UGraph& g);

// Each edge realised on copies of its own ends, every edge joins V' to V'', and
// the detachment is connected.
bool verify_detachment(const UGraph& g, const Detachment& h);

// BFS layers from vertex 0: edges between consecutive layers go from the even
// layer to the odd one, edges inside a layer from low id to high id.
// Throws Disconnected.
Orientation anticonnected_orientation(const UGraph& g);

}  // namespace antistrong
