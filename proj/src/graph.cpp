#include "antistrong/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "antistrong/errors.hpp"

namespace antistrong {

DisjointSets::DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
        int next = parent_[x];
        parent_[x] = root;
        x = next;
    }
    return root;
}

bool DisjointSets::unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
}

namespace {

void check_vertex(int n, VertexId v, const char* what) {
    if (v < 0 || v >= n) {
        throw InvalidGraph(std::string(what) + " endpoint " + std::to_string(v) +
                           " out of range [0," + std::to_string(n) + ")");
    }
}

// Builds CSR offsets for `count` items keyed by `key(i)`, ordered by `order`.
template <typename Key, typename Less>
void build_csr(int n, int count, Key key, Less less, std::vector<int>& offset, std::vector<int>& items) {
    offset.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < count; ++i) ++offset[static_cast<std::size_t>(key(i)) + 1];
    for (int v = 0; v < n; ++v) offset[v + 1] += offset[v];
    items.assign(static_cast<std::size_t>(count), 0);
    std::vector<int> fill(offset.begin(), offset.end() - 1);
    for (int i = 0; i < count; ++i) items[static_cast<std::size_t>(fill[key(i)]++)] = i;
    for (int v = 0; v < n; ++v) std::sort(items.begin() + offset[v], items.begin() + offset[v + 1], less);
}

}  // namespace

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw InvalidGraph("negative vertex count");
    for (const Arc& a : arcs_) {
        check_vertex(n, a.tail, "arc");
        check_vertex(n, a.head, "arc");
        if (a.tail == a.head) throw InvalidGraph("loop at vertex " + std::to_string(a.tail));
    }
    const int m = arc_count();
    build_csr(
        n, m, [&](int i) { return arcs_[i].tail; },
        [&](int a, int b) { return std::pair(arcs_[a].head, a) < std::pair(arcs_[b].head, b); }, out_offset_, out_);
    build_csr(
        n, m, [&](int i) { return arcs_[i].head; },
        [&](int a, int b) { return std::pair(arcs_[a].tail, a) < std::pair(arcs_[b].tail, b); }, in_offset_, in_);
    for (VertexId v = 0; v < n; ++v) {
        auto out = out_arcs(v);
        for (std::size_t i = 1; i < out.size(); ++i) {
            if (arcs_[out[i]].head == arcs_[out[i - 1]].head) {
                throw InvalidGraph("parallel arc " + std::to_string(v) + "->" + std::to_string(arcs_[out[i]].head));
            }
        }
    }
}

std::span<const ArcId> Digraph::out_arcs(VertexId v) const {
    return std::span<const ArcId>(out_).subspan(out_offset_[v], out_offset_[v + 1] - out_offset_[v]);
}

std::span<const ArcId> Digraph::in_arcs(VertexId v) const {
    return std::span<const ArcId>(in_).subspan(in_offset_[v], in_offset_[v + 1] - in_offset_[v]);
}

bool Digraph::has_arc(VertexId tail, VertexId head) const {
    auto out = out_arcs(tail);
    return std::any_of(out.begin(), out.end(), [&](ArcId a) { return arcs_[a].head == head; });
}

int max_copies(Multiplicity m) {
    switch (m) {
        case Multiplicity::simple: return 1;
        case Multiplicity::doubled: return 2;
        case Multiplicity::unbounded: break;
    }
    return std::numeric_limits<int>::max();
}

UGraph::UGraph(int n, std::vector<Edge> edges, Multiplicity mult) : n_(n), edges_(std::move(edges)), mult_(mult) {
    if (n < 0) throw InvalidGraph("negative vertex count");
    std::map<std::pair<VertexId, VertexId>, int> copies;
    for (const Edge& e : edges_) {
        check_vertex(n, e.u, "edge");
        check_vertex(n, e.v, "edge");
        if (e.u == e.v) throw InvalidGraph("loop at vertex " + std::to_string(e.u));
        if (++copies[std::minmax(e.u, e.v)] > max_copies(mult)) {
            throw InvalidGraph("too many parallel copies of edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        }
    }
    const int m = edge_count();
    offset_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : edges_) {
        ++offset_[e.u + 1];
        ++offset_[e.v + 1];
    }
    for (int v = 0; v < n; ++v) offset_[v + 1] += offset_[v];
    inc_.assign(static_cast<std::size_t>(2 * m), 0);
    std::vector<int> fill(offset_.begin(), offset_.end() - 1);
    for (EdgeId i = 0; i < m; ++i) {
        inc_[fill[edges_[i].u]++] = i;
        inc_[fill[edges_[i].v]++] = i;
    }
    for (VertexId v = 0; v < n; ++v) {
        std::sort(inc_.begin() + offset_[v], inc_.begin() + offset_[v + 1], [&](EdgeId a, EdgeId b) {
            return std::pair(edges_[a].other(v), a) < std::pair(edges_[b].other(v), b);
        });
    }
}

std::span<const EdgeId> UGraph::incident(VertexId v) const {
    return std::span<const EdgeId>(inc_).subspan(offset_[v], offset_[v + 1] - offset_[v]);
}

BipRep::BipRep(const Digraph& d) : n_(d.vertex_count()) {
    edges_.reserve(d.arcs().size());
    for (const Arc& a : d.arcs()) edges_.push_back({a.tail, n_ + a.head});
}

BipRep bipartite_rep(const Digraph& d) { return BipRep(d); }

Components connected_components(int n, std::span<const Edge> edges) {
    DisjointSets ds(n);
    for (const Edge& e : edges) ds.unite(e.u, e.v);
    Components c;
    c.label.assign(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> smallest(static_cast<std::size_t>(n), -1);
    for (VertexId v = 0; v < n; ++v) {
        int r = ds.find(v);
        if (smallest[r] < 0) {
            smallest[r] = v;
            ++c.count;
        }
        c.label[v] = smallest[r];
    }
    return c;
}

Components connected_components(const UGraph& g) { return connected_components(g.vertex_count(), g.edges()); }

Components connected_components(const BipRep& b) { return connected_components(b.vertex_count(), b.edges()); }

Components connected_components(const UGraph& g, std::span<const EdgeId> subset) {
    std::vector<Edge> edges;
    edges.reserve(subset.size());
    for (EdgeId e : subset) edges.push_back(g.edge(e));
    return connected_components(g.vertex_count(), edges);
}

std::variant<Bipartition, OddCycleWitness> bipartition_or_odd_cycle(const UGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    std::vector<EdgeId> parent_edge(static_cast<std::size_t>(n), -1);
    for (VertexId root = 0; root < n; ++root) {
        if (side[root] >= 0) continue;
        side[root] = 0;
        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.edge(e).other(v);
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    depth[w] = depth[v] + 1;
                    parent_edge[w] = e;
                    queue.push(w);
                } else if (side[w] == side[v]) {
                    // Close the cycle through the lowest common BFS ancestor.
                    std::vector<VertexId> up_v{v}, up_w{w};
                    std::vector<EdgeId> edges_v, edges_w;
                    VertexId a = v, b = w;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            edges_v.push_back(parent_edge[a]);
                            a = g.edge(parent_edge[a]).other(a);
                            up_v.push_back(a);
                        } else {
                            edges_w.push_back(parent_edge[b]);
                            b = g.edge(parent_edge[b]).other(b);
                            up_w.push_back(b);
                        }
                    }
                    OddCycleWitness w_out;
                    // v ... lca ... w, then back to v along e.
                    w_out.cycle = up_v;
                    w_out.edges = edges_v;
                    for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it) w_out.cycle.push_back(*it);
                    for (auto it = edges_w.rbegin(); it != edges_w.rend(); ++it) w_out.edges.push_back(*it);
                    w_out.cycle.push_back(v);
                    w_out.edges.push_back(e);
                    return w_out;
                }
            }
        }
    }
    Bipartition result;
    result.side = std::move(side);
    result.components = connected_components(g);
    return result;
}

bool is_bipartite(const UGraph& g) { return std::holds_alternative<Bipartition>(bipartition_or_odd_cycle(g)); }

bool is_valid_odd_cycle(const UGraph& g, const OddCycleWitness& w) {
    const auto& c = w.cycle;
    if (c.size() < 2 || c.front() != c.back()) return false;
    const std::size_t len = c.size() - 1;
    if (len % 2 == 0 || w.edges.size() != len) return false;
    std::vector<VertexId> interior(c.begin(), c.end() - 1);
    std::sort(interior.begin(), interior.end());
    if (std::adjacent_find(interior.begin(), interior.end()) != interior.end()) return false;
    for (std::size_t i = 0; i < len; ++i) {
        EdgeId e = w.edges[i];
        if (e < 0 || e >= g.edge_count()) return false;
        Edge ed = g.edge(e);
        if (!((ed.u == c[i] && ed.v == c[i + 1]) || (ed.v == c[i] && ed.u == c[i + 1]))) return false;
    }
    return true;
}

int incident_vertex_count(const UGraph& g, std::span<const EdgeId> subset) {
    std::vector<VertexId> vs;
    vs.reserve(2 * subset.size());
    for (EdgeId e : subset) {
        vs.push_back(g.edge(e).u);
        vs.push_back(g.edge(e).v);
    }
    std::sort(vs.begin(), vs.end());
    return static_cast<int>(std::unique(vs.begin(), vs.end()) - vs.begin());
}

int bipartite_component_count(const UGraph& g, std::span<const EdgeId> subset) {
    // Parity union-find: element 2v is "v on side 0", 2v+1 is "v on side 1".
    const int n = g.vertex_count();
    DisjointSets ds(2 * n);
    std::vector<char> touched(static_cast<std::size_t>(n), 0);
    for (EdgeId e : subset) {
        Edge ed = g.edge(e);
        ds.unite(2 * ed.u, 2 * ed.v + 1);
        ds.unite(2 * ed.u + 1, 2 * ed.v);
        touched[ed.u] = touched[ed.v] = 1;
    }
    DisjointSets comp(n);
    for (EdgeId e : subset) comp.unite(g.edge(e).u, g.edge(e).v);
    std::vector<char> odd(static_cast<std::size_t>(n), 0);
    for (VertexId v = 0; v < n; ++v) {
        if (touched[v] && ds.same(2 * v, 2 * v + 1)) odd[comp.find(v)] = 1;
    }
    int count = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (touched[v] && comp.find(v) == v && !odd[v]) ++count;
    }
    return count;
}

std::optional<std::vector<EdgeId>> shortest_path(const UGraph& g, VertexId s, VertexId t) {
    const int n = g.vertex_count();
    std::vector<EdgeId> via(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<VertexId> queue;
    seen[s] = 1;
    queue.push(s);
    while (!queue.empty() && !seen[t]) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.edge(e).other(v);
            if (seen[w]) continue;
            seen[w] = 1;
            via[w] = e;
            queue.push(w);
        }
    }
    if (!seen[t]) return std::nullopt;
    std::vector<EdgeId> path;
    for (VertexId v = t; v != s; v = g.edge(via[v]).other(v)) path.push_back(via[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

UGraph underlying_graph(const Digraph& d) {
    std::vector<Edge> edges;
    edges.reserve(d.arcs().size());
    for (const Arc& a : d.arcs()) edges.push_back({a.tail, a.head});
    return UGraph(d.vertex_count(), std::move(edges), Multiplicity::doubled);
}

Digraph complete_digraph(int n) {
    std::vector<Arc> arcs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v) arcs.push_back({u, v});
    return Digraph(n, std::move(arcs));
}

UGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
    return UGraph(n, std::move(edges));
}

}  // namespace antistrong
