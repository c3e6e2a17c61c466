#include "antistrong/analysis.hpp"

#include <algorithm>
#include <string>

#include "antistrong/errors.hpp"
#include "antistrong/flow.hpp"

namespace antistrong {

namespace {

void check_pair(const Digraph& d, VertexId x, VertexId y) {
    const int n = d.vertex_count();
    if (x < 0 || x >= n || y < 0 || y >= n) throw InvalidInput("vertex out of range");
    if (x == y) throw InvalidInput("trail endpoints must be distinct");
}

void require_antistrong(const Digraph& d) {
    if (d.vertex_count() < 3) throw NotAntistrong("fewer than three vertices");
    const int c = connected_components(BipRep(d)).count;
    if (c != 1) throw NotAntistrong("B(D) has " + std::to_string(c) + " components");
}

TrailWitness lift_path(const Digraph& d, const UGraph& b, VertexId s, VertexId t) {
    auto path = shortest_path(b, s, t);
    if (!path) throw NotAntistrong("no path in B(D)");
    return lift_walk(d, s, *path);
}

}  // namespace

TrailWitness lift_walk(const Digraph& d, VertexId start, std::span<const EdgeId> walk) {
    const int n = d.vertex_count();
    TrailWitness w;
    w.from = start < n ? start : start - n;
    VertexId at = start;
    for (EdgeId e : walk) {
        const Arc& a = d.arc(e);
        // Leaving v' along v'w'' traverses the arc forward; leaving w'' goes backward.
        const bool fwd = at < n;
        w.arcs.push_back(e);
        w.forward.push_back(fwd);
        at = fwd ? n + a.head : a.tail;
    }
    w.to = at < n ? at : at - n;
    return w;
}

std::vector<VertexId> trail_vertices(const Digraph& d, const TrailWitness& w) {
    std::vector<VertexId> vs{w.from};
    VertexId at = w.from;
    for (std::size_t i = 0; i < w.arcs.size(); ++i) {
        const Arc& a = d.arc(w.arcs[i]);
        at = w.forward[i] ? a.head : a.tail;
        vs.push_back(at);
    }
    return vs;
}

std::string trail_violation(const Digraph& d, const TrailWitness& w, TrailShape shape) {
    const int n = d.vertex_count();
    if (w.arcs.size() != w.forward.size()) return "arc and direction lists differ in length";
    if (w.from < 0 || w.from >= n || w.to < 0 || w.to >= n) return "endpoint out of range";
    if (w.arcs.empty()) return "empty trail";
    std::vector<ArcId> sorted = w.arcs;
    for (ArcId a : sorted)
        if (a < 0 || a >= d.arc_count()) return "arc id out of range";
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "arc repeated";
    VertexId at = w.from;
    for (std::size_t i = 0; i < w.arcs.size(); ++i) {
        if (i > 0 && w.forward[i] == w.forward[i - 1]) return "directions do not alternate at position " + std::to_string(i);
        const Arc& a = d.arc(w.arcs[i]);
        if (w.forward[i]) {
            if (a.tail != at) return "forward arc does not leave the current vertex at position " + std::to_string(i);
            at = a.head;
        } else {
            if (a.head != at) return "backward arc does not enter the current vertex at position " + std::to_string(i);
            at = a.tail;
        }
    }
    if (at != w.to) return "trail does not end at its stated endpoint";
    const std::size_t len = w.arcs.size();
    switch (shape) {
        case TrailShape::any: break;
        case TrailShape::forward:
            if (!w.forward.front() || !w.forward.back()) return "forward trail must start and end on forward arcs";
            if (w.from == w.to) return "endpoints coincide";
            break;
        case TrailShape::even_forward:
            if (len % 2 != 0 || !w.forward.front()) return "expected even length starting forward";
            break;
        case TrailShape::even_backward:
            if (len % 2 != 0 || w.forward.front()) return "expected even length starting backward";
            break;
        case TrailShape::closed:
            if (w.from != w.to) return "trail is not closed";
            if (len % 2 != 0) return "closed trail has odd length";
            break;
        case TrailShape::simple_path: {
            auto vs = trail_vertices(d, w);
            std::sort(vs.begin(), vs.end());
            if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return "vertex repeated";
            break;
        }
    }
    return {};
}

bool is_antistrong(const Digraph& d) {
    return d.vertex_count() >= 3 && connected_components(BipRep(d)).count == 1;
}

TrailWitness forward_trail(const Digraph& d, VertexId x, VertexId y) {
    check_pair(d, x, y);
    require_antistrong(d);
    BipRep b(d);
    return lift_path(d, b.as_graph(), b.left(x), b.right(y));
}

std::pair<TrailWitness, TrailWitness> even_trails(const Digraph& d, VertexId x, VertexId y) {
    check_pair(d, x, y);
    require_antistrong(d);
    BipRep b(d);
    UGraph g = b.as_graph();
    return {lift_path(d, g, b.left(x), b.left(y)), lift_path(d, g, b.right(x), b.right(y))};
}

bool has_antidirected_trail(const Digraph& d, VertexId x, VertexId y) {
    check_pair(d, x, y);
    BipRep b(d);
    Components c = connected_components(b);
    for (VertexId s : {b.left(x), b.right(x)})
        for (VertexId t : {b.left(y), b.right(y)})
            if (c.label[s] == c.label[t]) return true;
    return false;
}

bool k_arc_antistrong(const Digraph& d, int k) {
    if (k < 1) throw InvalidInput("k must be positive");
    const int n = d.vertex_count();
    if (n < 3) return false;
    BipRep b(d);
    UGraph g = b.as_graph();
    // Every vertex of B(D) needs degree >= k; cheap rejection before the flows.
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(g.incident(v).size()) < k) return false;
    for (VertexId x = 0; x < n; ++x)
        for (VertexId y = 0; y < n; ++y)
            if (x != y && max_edge_disjoint_paths(g, b.left(x), b.right(y), k) < k) return false;
    return true;
}

std::vector<TrailWitness> disjoint_forward_trails(const Digraph& d, VertexId x, VertexId y, int limit) {
    check_pair(d, x, y);
    BipRep b(d);
    UGraph g = b.as_graph();
    DisjointPaths paths = edge_disjoint_paths(g, b.left(x), b.right(y), limit);
    std::vector<TrailWitness> out;
    for (const auto& p : paths.paths) out.push_back(lift_walk(d, b.left(x), p));
    return out;
}

std::optional<CATWitness> find_cat(const Digraph& d, std::span<const ArcId> subset) {
    BipRep b(d);
    const int nb = b.vertex_count();
    DisjointSets ds(nb);
    std::vector<Edge> forest;
    std::vector<EdgeId> forest_ids;
    std::vector<char> seen(static_cast<std::size_t>(d.arc_count()), 0);
    for (ArcId a : subset) {
        if (a < 0 || a >= d.arc_count()) throw InvalidInput("arc id out of range");
        if (seen[a]) continue;
        seen[a] = 1;
        const Edge& e = b.edges()[a];
        if (ds.unite(e.u, e.v)) {
            forest.push_back(e);
            forest_ids.push_back(a);
            continue;
        }
        // e closes a cycle with the forest path between its ends.
        UGraph f(nb, forest);
        auto path = shortest_path(f, e.v, e.u);
        std::vector<EdgeId> cycle;
        cycle.push_back(a);  // u -> v along e
        for (EdgeId local : *path) cycle.push_back(forest_ids[local]);
        // The cycle starts at e.u, which is a left vertex (a tail copy).
        return lift_walk(d, e.u, cycle);
    }
    return std::nullopt;
}

std::optional<CATWitness> find_cat(const Digraph& d) {
    std::vector<ArcId> all(static_cast<std::size_t>(d.arc_count()));
    for (ArcId a = 0; a < d.arc_count(); ++a) all[a] = a;
    return find_cat(d, all);
}

}  // namespace antistrong
