#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace antistrong {

using VertexId = std::int32_t;
using ArcId = std::int32_t;
using EdgeId = std::int32_t;

struct Arc {
    VertexId tail = 0;
    VertexId head = 0;

    auto operator<=>(const Arc&) const = default;
};

// Unordered pair; the stored order is the order the edge was given in.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    VertexId other(VertexId w) const { return w == u ? v : u; }
    auto operator<=>(const Edge&) const = default;
};

// Union-find with path compression and union by size.
class DisjointSets {
public:
    explicit DisjointSets(int n = 0);

    int find(int x);
    // Returns false when x and y were already in the same set.
    bool unite(int x, int y);
    bool same(int x, int y) { return find(x) == find(y); }
    int size_of(int x) { return size_[find(x)]; }
    int element_count() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

// Simple digraph: no loops, no two arcs with the same tail and head.
// Opposite arcs u->v and v->u may both be present.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n, std::vector<Arc> arcs = {});

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(ArcId a) const { return arcs_[static_cast<std::size_t>(a)]; }

    std::span<const ArcId> out_arcs(VertexId v) const;
    std::span<const ArcId> in_arcs(VertexId v) const;
    bool has_arc(VertexId tail, VertexId head) const;

    bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> out_offset_, in_offset_;
    std::vector<ArcId> out_, in_;
};

enum class Multiplicity {
    simple,     // no parallel edges
    doubled,    // at most two copies of an edge (forest + pseudoforest unions)
    unbounded,  // reduction gadgets with bundles of parallel edges
};

int max_copies(Multiplicity m);

class UGraph {
public:
    UGraph() = default;
    UGraph(int n, std::vector<Edge> edges, Multiplicity mult = Multiplicity::simple);
    explicit UGraph(int n) : UGraph(n, {}) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    Multiplicity multiplicity() const { return mult_; }

    // Incident edge ids, ordered by (neighbour id, edge id).
    std::span<const EdgeId> incident(VertexId v) const;

    bool operator==(const UGraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_ && mult_ == o.mult_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    Multiplicity mult_ = Multiplicity::simple;
    std::vector<int> offset_;
    std::vector<EdgeId> inc_;
};

// Bipartite representation B(D): vertex v' has id v, vertex v'' has id n + v,
// and arc i = (t, h) becomes edge i = {t', h''}.
class BipRep {
public:
    explicit BipRep(const Digraph& d);

    int side_size() const { return n_; }
    int vertex_count() const { return 2 * n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    VertexId left(VertexId v) const { return v; }
    VertexId right(VertexId v) const { return n_ + v; }
    bool is_left(VertexId b) const { return b < n_; }
    VertexId original(VertexId b) const { return b < n_ ? b : b - n_; }

    ArcId arc_of(EdgeId e) const { return e; }
    EdgeId edge_of(ArcId a) const { return a; }

    UGraph as_graph() const { return UGraph(2 * n_, edges_); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

BipRep bipartite_rep(const Digraph& d);

// Component labels are the smallest vertex id of each component.
struct Components {
    int count = 0;
    std::vector<VertexId> label;
};

Components connected_components(int n, std::span<const Edge> edges);
Components connected_components(const UGraph& g);
Components connected_components(const BipRep& b);

// Components of the subgraph (V, S) for an edge subset S of g.
Components connected_components(const UGraph& g, std::span<const EdgeId> subset);

struct Bipartition {
    std::vector<int> side;  // 0 or 1; the smallest vertex of each component is on side 0
    Components components;
};

// Closed vertex sequence: front() == back(), odd number of edges.
struct OddCycleWitness {
    std::vector<VertexId> cycle;
    std::vector<EdgeId> edges;
};

std::variant<Bipartition, OddCycleWitness> bipartition_or_odd_cycle(const UGraph& g);
bool is_bipartite(const UGraph& g);
bool is_valid_odd_cycle(const UGraph& g, const OddCycleWitness& w);

// nu(S): number of vertices incident to S.
int incident_vertex_count(const UGraph& g, std::span<const EdgeId> subset);
// beta(S): number of bipartite components of G[S].
int bipartite_component_count(const UGraph& g, std::span<const EdgeId> subset);

// Shortest path by BFS; ties go to the smallest neighbour id. Returns the edge ids
// along the path, or nullopt when t is unreachable.
std::optional<std::vector<EdgeId>> shortest_path(const UGraph& g, VertexId s, VertexId t);

// UG(D) with one edge per arc, so opposite arcs give a doubled edge.
UGraph underlying_graph(const Digraph& d);

Digraph complete_digraph(int n);
UGraph complete_graph(int n);

}  // namespace antistrong
