#include "antistrong/orientation.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "antistrong/analysis.hpp"
#include "antistrong/errors.hpp"
#include "antistrong/matroid.hpp"

namespace antistrong {

Digraph to_digraph(int n, const Orientation& o) { return Digraph(n, o.arcs); }

bool orients(const UGraph& g, const Orientation& o) {
    if (static_cast<int>(o.arcs.size()) != g.edge_count()) return false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const Arc& a = o.arcs[e];
        if (!((a.tail == ed.u && a.head == ed.v) || (a.tail == ed.v && a.head == ed.u))) return false;
    }
    return true;
}

namespace {

// 2-colouring of a forest, smallest vertex of each tree on side 0.
std::vector<int> forest_sides(const UGraph& g, std::span<const EdgeId> forest) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(static_cast<std::size_t>(n));
    for (EdgeId e : forest) {
        adj[g.edge(e).u].push_back({g.edge(e).v, e});
        adj[g.edge(e).v].push_back({g.edge(e).u, e});
    }
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (VertexId s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<VertexId> queue;
        queue.push(s);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (auto [w, e] : adj[v])
                if (side[w] < 0) {
                    side[w] = side[v] ^ 1;
                    queue.push(w);
                }
        }
    }
    return side;
}

// Flags the cycle edges of a pseudoforest: whatever survives peeling leaves.
std::vector<char> cycle_flags(const UGraph& g, std::span<const EdgeId> edges) {
    std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::vector<EdgeId>> inc(static_cast<std::size_t>(g.vertex_count()));
    for (EdgeId e : edges) {
        ++degree[g.edge(e).u];
        ++degree[g.edge(e).v];
        inc[g.edge(e).u].push_back(e);
        inc[g.edge(e).v].push_back(e);
    }
    std::vector<char> on_cycle(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : edges) on_cycle[e] = 1;
    std::queue<VertexId> leaves;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (degree[v] == 1) leaves.push(v);
    while (!leaves.empty()) {
        VertexId v = leaves.front();
        leaves.pop();
        if (degree[v] != 1) continue;
        for (EdgeId e : inc[v]) {
            if (!on_cycle[e]) continue;
            on_cycle[e] = 0;
            --degree[v];
            VertexId w = g.edge(e).other(v);
            if (--degree[w] == 1) leaves.push(w);
        }
    }
    return on_cycle;
}

}  // namespace

TwoDecomposition describe_decomposition(const UGraph& g, std::span<const EdgeId> black, std::span<const EdgeId> red) {
    if (!cycle_matroid_indep(g, black)) throw InvalidInput("black edges contain a cycle");
    if (!bicircular_indep(g, red)) throw InvalidInput("red edges are not a pseudoforest");
    TwoDecomposition d;
    // Sorted copies by bucketing, to stay linear.
    std::vector<char> colour(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : black) colour[e] = 1;
    for (EdgeId e : red) colour[e] = 2;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (colour[e] == 1) d.black.push_back(e);
        if (colour[e] == 2) d.red.push_back(e);
    }
    d.side = forest_sides(g, d.black);

    // Components in order of their smallest vertex.
    Components comps = connected_components(g, d.red);
    std::vector<char> touched(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId e : d.red) touched[g.edge(e).u] = touched[g.edge(e).v] = 1;
    std::vector<int> slot(static_cast<std::size_t>(g.vertex_count()), -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!touched[v]) continue;
        VertexId label = comps.label[v];
        if (slot[label] < 0) {
            slot[label] = static_cast<int>(d.components.size());
            d.components.emplace_back();
        }
        d.components[slot[label]].vertices.push_back(v);
    }
    for (EdgeId e : d.red) d.components[slot[comps.label[g.edge(e).u]]].edges.push_back(e);

    // Same-side cycle neighbours per vertex, and the smallest one with its edge.
    const std::vector<char> on_cycle = cycle_flags(g, d.red);
    std::vector<int> same(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::pair<VertexId, EdgeId>> nearest(static_cast<std::size_t>(g.vertex_count()), {-1, -1});
    auto offer = [&](VertexId r, VertexId w, EdgeId e) {
        ++same[r];
        if (nearest[r].first < 0 || std::pair{w, e} < nearest[r]) nearest[r] = {w, e};
    };
    for (EdgeId e : d.red) {
        if (!on_cycle[e]) continue;
        const Edge& ed = g.edge(e);
        if (d.side[ed.u] != d.side[ed.v]) continue;
        offer(ed.u, ed.v, e);
        offer(ed.v, ed.u, e);
    }
    for (RedComponent& c : d.components) {
        c.root = c.vertices.front();
        for (EdgeId e : c.edges)
            if (on_cycle[e]) c.cycle.push_back(e);
        if (c.cycle.empty()) continue;
        VertexId best = -1;
        for (EdgeId e : c.cycle)
            for (VertexId r : {g.edge(e).u, g.edge(e).v})
                if (best < 0 || same[r] > same[best] || (same[r] == same[best] && r < best)) best = r;
        c.root = best;
        if (same[best] > 0) c.precious = nearest[best].second;
    }
    return d;
}

bool is_violating_subgraph(const UGraph& g, std::span<const EdgeId> h) {
    if (h.empty()) return false;
    const int nu = incident_vertex_count(g, h);
    const int beta = bipartite_component_count(g, h);
    return static_cast<int>(h.size()) > 2 * nu - 1 - beta;
}

namespace {

// A component of G[F] that is violating; the deficiency set always holds one.
std::vector<EdgeId> violating_component(const UGraph& g, const std::vector<EdgeId>& f) {
    Components comps = connected_components(g, f);
    std::vector<std::vector<EdgeId>> by_label(static_cast<std::size_t>(g.vertex_count()));
    for (EdgeId e : f) by_label[comps.label[g.edge(e).u]].push_back(e);
    for (auto& h : by_label)
        if (is_violating_subgraph(g, h)) return h;
    throw std::logic_error("deficiency set has no violating component");
}

UnionResult forest_odd_union(const UGraph& g) {
    std::vector<MatroidOracle> ms{cycle_matroid(g), even_bicircular_matroid(g)};
    return matroid_union_max(ms);
}

}  // namespace

DecompositionResult decompose_forest_odd_pseudoforest(const UGraph& g) {
    UnionResult u = forest_odd_union(g);
    DecompositionResult r;
    if (static_cast<int>(u.independent.size()) == g.edge_count()) {
        auto classes = u.classes(2);
        r.split = ForestSplit{classes[0], classes[1]};
    } else {
        r.deficiency = u.deficiency;
        r.violating = violating_component(g, u.deficiency);
    }
    return r;
}

CatFreeResult catfree_orient(const UGraph& g, std::span<const EdgeId> tree, std::span<const EdgeId> pseudoforest) {
    const int n = g.vertex_count();
    std::vector<int> uses(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : tree) {
        if (e < 0 || e >= g.edge_count()) throw InvalidInput("tree edge out of range");
        ++uses[e];
    }
    for (EdgeId e : pseudoforest) {
        if (e < 0 || e >= g.edge_count()) throw InvalidInput("pseudoforest edge out of range");
        ++uses[e];
    }
    for (int c : uses)
        if (c != 1) throw InvalidInput("tree and pseudoforest must partition the edge set");
    if (n > 0 && static_cast<int>(tree.size()) != n - 1) throw InvalidInput("tree does not span the vertex set");
    if (!cycle_matroid_indep(g, tree)) throw InvalidInput("tree contains a cycle");
    if (!even_bicircular_indep(g, pseudoforest)) throw InvalidInput("pseudoforest is not an odd pseudoforest");

    CatFreeResult out;
    TwoDecomposition& d = out.structure;
    d = describe_decomposition(g, tree, pseudoforest);
    const auto& side = d.side;
    out.orientation.arcs.resize(static_cast<std::size_t>(g.edge_count()));
    auto& arcs = out.orientation.arcs;

    // Tree edges go from Y (side 1) to X (side 0).
    for (EdgeId e : d.black) {
        const Edge& ed = g.edge(e);
        arcs[e] = side[ed.u] == 1 ? Arc{ed.u, ed.v} : Arc{ed.v, ed.u};
    }

    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(static_cast<std::size_t>(n));
    for (const RedComponent& c : d.components) {
        for (EdgeId e : c.edges) {
            if (c.precious && e == *c.precious) continue;
            adj[g.edge(e).u].push_back({g.edge(e).v, e});
            adj[g.edge(e).v].push_back({g.edge(e).u, e});
        }
        // BFS over T_i from the root.
        std::queue<VertexId> queue;
        depth[c.root] = 0;
        queue.push(c.root);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (auto [w, e] : adj[v])
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    queue.push(w);
                }
        }
        for (EdgeId e : c.edges) {
            const Edge& ed = g.edge(e);
            if (c.precious && e == *c.precious) {
                VertexId r = c.root;
                VertexId s = ed.other(r);
                arcs[e] = side[r] == 0 ? Arc{r, s} : Arc{s, r};
            } else if (side[ed.u] != side[ed.v]) {
                arcs[e] = side[ed.u] == 0 ? Arc{ed.u, ed.v} : Arc{ed.v, ed.u};
            } else {
                // far = the endpoint further from the root in T_i.
                VertexId far = depth[ed.u] > depth[ed.v] ? ed.u : ed.v;
                VertexId near = ed.other(far);
                arcs[e] = side[far] == 0 ? Arc{far, near} : Arc{near, far};
            }
        }
    }
    return out;
}

PartitionCertificate make_certificate(const UGraph& g, std::vector<std::vector<VertexId>> parts) {
    const int n = g.vertex_count();
    std::vector<int> part_of(static_cast<std::size_t>(n), -1);
    for (auto& p : parts) {
        if (p.empty()) throw NotAPartition("empty part");
        std::sort(p.begin(), p.end());
    }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (VertexId v : parts[i]) {
            if (v < 0 || v >= n) throw NotAPartition("vertex " + std::to_string(v) + " out of range");
            if (part_of[v] >= 0) throw NotAPartition("vertex " + std::to_string(v) + " in two parts");
            part_of[v] = static_cast<int>(i);
        }
    for (VertexId v = 0; v < n; ++v)
        if (part_of[v] < 0) throw NotAPartition("vertex " + std::to_string(v) + " not covered");

    PartitionCertificate q;
    q.parts = std::move(parts);
    std::vector<std::vector<EdgeId>> inside(q.parts.size());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (part_of[ed.u] != part_of[ed.v])
            ++q.e;
        else
            inside[part_of[ed.u]].push_back(e);
    }
    // G[V_i] is bipartite iff its edges contain no odd cycle.
    for (const auto& edges : inside) {
        DisjointSets parity(2 * n);
        bool odd = false;
        for (EdgeId e : edges) {
            const Edge& ed = g.edge(e);
            parity.unite(2 * ed.u, 2 * ed.v + 1);
            parity.unite(2 * ed.u + 1, 2 * ed.v);
            if (parity.same(2 * ed.u, 2 * ed.u + 1)) odd = true;
        }
        if (!odd) ++q.b;
    }
    return q;
}

bool verify_certificate(const UGraph& g, const PartitionCertificate& q) {
    PartitionCertificate fresh = make_certificate(g, q.parts);
    return fresh.e < fresh.bound();
}

namespace {

PartitionCertificate singletons(const UGraph& g) {
    std::vector<std::vector<VertexId>> parts;
    for (VertexId v = 0; v < g.vertex_count(); ++v) parts.push_back({v});
    return make_certificate(g, std::move(parts));
}

// Parts are the vertex sets of the components of G[F]; the rest become singletons.
// Closing each part to its induced subgraph never raises the union rank bound.
PartitionCertificate certificate_from_deficiency(const UGraph& g, const std::vector<EdgeId>& f) {
    const int n = g.vertex_count();
    Components comps = connected_components(g, f);
    std::vector<char> touched(static_cast<std::size_t>(n), 0);
    for (EdgeId e : f) touched[g.edge(e).u] = touched[g.edge(e).v] = 1;
    std::vector<std::vector<VertexId>> by_label(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) by_label[touched[v] ? comps.label[v] : v].push_back(v);
    std::vector<std::vector<VertexId>> parts;
    for (auto& p : by_label)
        if (!p.empty()) parts.push_back(std::move(p));
    return make_certificate(g, std::move(parts));
}

}  // namespace

OrientationOutcome antistrong_orientation(const UGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw InvalidInput("graph has no vertices");
    if (n < 3) return singletons(g);
    if (is_bipartite(g)) return make_certificate(g, {[&] {
                                                     std::vector<VertexId> all(static_cast<std::size_t>(n));
                                                     for (VertexId v = 0; v < n; ++v) all[v] = v;
                                                     return all;
                                                 }()});

    UnionResult u = forest_odd_union(g);
    if (static_cast<int>(u.independent.size()) < 2 * n - 1) {
        PartitionCertificate q = certificate_from_deficiency(g, u.deficiency);
        if (!(q.e < q.bound())) throw std::logic_error("deficiency set did not yield a violating partition");
        return q;
    }

    // Orient the 2n - 1 independent edges with the CAT-free construction.
    std::vector<Edge> sub_edges;
    std::vector<EdgeId> tree, pf;
    for (EdgeId e : u.independent) {
        (u.color[e] == 0 ? tree : pf).push_back(static_cast<EdgeId>(sub_edges.size()));
        sub_edges.push_back(g.edge(e));
    }
    UGraph sub(n, sub_edges, Multiplicity::doubled);
    CatFreeResult cf = catfree_orient(sub, tree, pf);

    Orientation o;
    o.arcs.resize(static_cast<std::size_t>(g.edge_count()));
    std::set<Arc> used;
    std::vector<char> done(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t i = 0; i < u.independent.size(); ++i) {
        EdgeId e = u.independent[i];
        o.arcs[e] = cf.orientation.arcs[i];
        used.insert(o.arcs[e]);
        done[e] = 1;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (done[e]) continue;
        const Edge& ed = g.edge(e);
        Arc a{std::min(ed.u, ed.v), std::max(ed.u, ed.v)};
        if (used.count(a)) a = Arc{a.head, a.tail};
        o.arcs[e] = a;
        used.insert(a);
    }
    return o;
}

std::variant<Detachment, PartitionCertificate> good_2_detachment(const UGraph& g) {
    OrientationOutcome r = antistrong_orientation(g);
    if (auto* q = std::get_if<PartitionCertificate>(&r)) return *q;
    const auto& o = std::get<Orientation>(r);
    Detachment h;
    h.n = g.vertex_count();
    for (const Arc& a : o.arcs) h.edges.push_back({a.tail, h.n + a.head});
    return h;
}

bool verify_detachment(const UGraph& g, const Detachment& h) {
    const int n = g.vertex_count();
    if (h.n != n || static_cast<int>(h.edges.size()) != g.edge_count()) return false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const Edge& de = h.edges[e];
        if (de.u < 0 || de.u >= 2 * n || de.v < 0 || de.v >= 2 * n) return false;
        // Exactly one end in V' = [0, n).
        if ((de.u < n) == (de.v < n)) return false;
        VertexId a = de.u % n;
        VertexId b = de.v % n;
        if (!((a == ed.u && b == ed.v) || (a == ed.v && b == ed.u))) return false;
    }
    return connected_components(2 * n, h.edges).count == 1;
}

Orientation anticonnected_orientation(const UGraph& g) {
    const int n = g.vertex_count();
    if (n == 0 || connected_components(g).count != 1) throw Disconnected("graph is not connected");
    std::vector<int> layer(static_cast<std::size_t>(n), -1);
    std::queue<VertexId> queue;
    layer[0] = 0;
    queue.push(0);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.edge(e).other(v);
            if (layer[w] < 0) {
                layer[w] = layer[v] + 1;
                queue.push(w);
            }
        }
    }
    Orientation o;
    std::set<Arc> used;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        Arc a;
        if (layer[ed.u] == layer[ed.v]) {
            a = {std::min(ed.u, ed.v), std::max(ed.u, ed.v)};
            if (used.count(a)) a = {a.head, a.tail};
        } else {
            a = layer[ed.u] % 2 == 0 ? Arc{ed.u, ed.v} : Arc{ed.v, ed.u};
        }
        used.insert(a);
        o.arcs.push_back(a);
    }
    return o;
}

}  // namespace antistrong
