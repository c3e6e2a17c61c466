#include "antistrong/appendix.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "antistrong/errors.hpp"
#include "antistrong/matroid.hpp"

namespace antistrong {

namespace {

// Working state: colour per edge (true = red) plus structure derived from it.
class Exchanger {
public:
    explicit Exchanger(const UGraph& g) : g_(g), n_(g.vertex_count()), red_(static_cast<std::size_t>(g.edge_count()), 0) {}

    void set_red(EdgeId e, bool red) { red_[e] = red ? 1 : 0; }
    bool is_red(EdgeId e) const { return red_[e] != 0; }

    std::vector<EdgeId> edges(bool red) const {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < g_.edge_count(); ++e)
            if (is_red(e) == red) out.push_back(e);
        return out;
    }

    // Recomputes the bipartition, black adjacency and red components.
    void refresh() {
        black_adj_.assign(static_cast<std::size_t>(n_), {});
        red_adj_.assign(static_cast<std::size_t>(n_), {});
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            const Edge& ed = g_.edge(e);
            auto& adj = is_red(e) ? red_adj_ : black_adj_;
            adj[ed.u].push_back({ed.v, e});
            adj[ed.v].push_back({ed.u, e});
        }
        side_.assign(static_cast<std::size_t>(n_), -1);
        for (VertexId s = 0; s < n_; ++s) {
            if (side_[s] >= 0) continue;
            side_[s] = 0;
            colour_from(s);
        }
        red_comp_ = connected_components(g_, edges(true)).label;
    }

    bool precious(EdgeId e) const {
        const Edge& ed = g_.edge(e);
        return is_red(e) && side_[ed.u] == side_[ed.v];
    }

    int side(VertexId v) const { return side_[v]; }
    VertexId red_comp(VertexId v) const { return red_comp_[v]; }

    // Red components with a cycle: component label -> cycle edges.
    std::vector<std::pair<VertexId, std::vector<EdgeId>>> red_cycles() const {
        std::vector<int> vcount(static_cast<std::size_t>(n_), 0);
        for (VertexId v = 0; v < n_; ++v) ++vcount[red_comp_[v]];
        std::vector<std::vector<EdgeId>> comp_edges(static_cast<std::size_t>(n_));
        for (EdgeId e = 0; e < g_.edge_count(); ++e)
            if (is_red(e)) comp_edges[red_comp_[g_.edge(e).u]].push_back(e);
        std::vector<std::pair<VertexId, std::vector<EdgeId>>> out;
        for (VertexId c = 0; c < n_; ++c) {
            if (comp_edges[c].empty() || comp_edges[c].size() < static_cast<std::size_t>(vcount[c])) continue;
            out.push_back({c, peel(comp_edges[c])});
        }
        return out;
    }

    // Black path from s to t as a vertex sequence.
    std::vector<VertexId> black_path(VertexId s, VertexId t) const {
        std::vector<VertexId> parent(static_cast<std::size_t>(n_), -1);
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::queue<VertexId> queue;
        seen[t] = 1;
        queue.push(t);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (auto [w, e] : black_adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    queue.push(w);
                }
        }
        if (!seen[s]) throw std::logic_error("black forest is not spanning");
        std::vector<VertexId> path{s};
        while (path.back() != t) path.push_back(parent[path.back()]);
        return path;
    }

    EdgeId black_edge(VertexId a, VertexId b) const {
        for (auto [w, e] : black_adj_[a])
            if (w == b) return e;
        throw std::logic_error("no black edge between consecutive path vertices");
    }

    // Vertices of the black component of s after deleting `cut`.
    std::vector<VertexId> black_side(VertexId s, VertexId cut) const {
        return bfs_const(black_adj_, s, cut);
    }

    const std::vector<std::vector<std::pair<VertexId, EdgeId>>>& black_adj() const { return black_adj_; }
    const std::vector<std::vector<std::pair<VertexId, EdgeId>>>& red_adj() const { return red_adj_; }

private:
    using Adj = std::vector<std::vector<std::pair<VertexId, EdgeId>>>;

    // 2-colours the black tree of s into side_.
    void colour_from(VertexId s) {
        std::vector<VertexId> order{s};
        for (std::size_t i = 0; i < order.size(); ++i)
            for (auto [w, e] : black_adj_[order[i]])
                if (side_[w] < 0) {
                    side_[w] = side_[order[i]] ^ 1;
                    order.push_back(w);
                }
    }

    std::vector<VertexId> bfs_const(const Adj& adj, VertexId s, VertexId cut) const {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<VertexId> order{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (auto [w, e] : adj[order[i]])
                if (w != cut && !seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
        return order;
    }

    std::vector<EdgeId> peel(const std::vector<EdgeId>& comp) const {
        std::vector<int> degree(static_cast<std::size_t>(n_), 0);
        for (EdgeId e : comp) {
            ++degree[g_.edge(e).u];
            ++degree[g_.edge(e).v];
        }
        std::vector<char> gone(static_cast<std::size_t>(g_.edge_count()), 0);
        std::queue<VertexId> leaves;
        for (VertexId v = 0; v < n_; ++v)
            if (degree[v] == 1) leaves.push(v);
        while (!leaves.empty()) {
            VertexId v = leaves.front();
            leaves.pop();
            for (auto [w, e] : red_adj_[v]) {
                if (gone[e] || degree[v] != 1) continue;
                gone[e] = 1;
                --degree[v];
                if (--degree[w] == 1) leaves.push(w);
            }
        }
        std::vector<EdgeId> cycle;
        for (EdgeId e : comp)
            if (!gone[e]) cycle.push_back(e);
        return cycle;
    }

    const UGraph& g_;
    int n_;
    std::vector<char> red_;
    Adj black_adj_, red_adj_;
    std::vector<int> side_;
    std::vector<VertexId> red_comp_;
};

std::vector<EdgeId> violating_in(const UGraph& g, const std::vector<EdgeId>& f) {
    Components comps = connected_components(g, f);
    std::vector<std::vector<EdgeId>> by_label(static_cast<std::size_t>(g.vertex_count()));
    for (EdgeId e : f) by_label[comps.label[g.edge(e).u]].push_back(e);
    for (auto& h : by_label)
        if (is_violating_subgraph(g, h)) return h;
    throw std::logic_error("deficiency set has no violating component");
}

// Bad red component: its cycle has no precious edge. Returns the smallest core,
// or an empty vector when every red cycle has a precious edge.
std::vector<VertexId> smallest_bad_core(const UGraph& g, const Exchanger& x, std::vector<EdgeId>& cycle_out) {
    std::vector<VertexId> best;
    for (auto& [label, cycle] : x.red_cycles()) {
        bool has_precious = false;
        for (EdgeId e : cycle) has_precious = has_precious || x.precious(e);
        if (has_precious) continue;
        // Core: red component minus its precious edges, the part holding the cycle.
        std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
        std::vector<VertexId> core{g.edge(cycle.front()).u};
        seen[core.front()] = 1;
        for (std::size_t i = 0; i < core.size(); ++i)
            for (auto [w, e] : x.red_adj()[core[i]])
                if (!seen[w] && !x.precious(e)) {
                    seen[w] = 1;
                    core.push_back(w);
                }
        std::sort(core.begin(), core.end());
        if (best.empty() || core.size() < best.size()) {
            best = core;
            cycle_out = cycle;
        }
    }
    return best;
}

// One core-shrinking exchange on the bad component with core `core`. Returns
// false when the core is connected in black, in which case G[core] violates the
// bipartite bound.
bool shrink_core(const UGraph& g, Exchanger& x, const std::vector<VertexId>& core, const std::vector<EdgeId>& cycle) {
    const int n = g.vertex_count();
    std::vector<char> in_core(static_cast<std::size_t>(n), 0);
    for (VertexId v : core) in_core[v] = 1;

    // Node ids: black components of G_b[core] first (X_1..X_p), then of G_b - core.
    DisjointSets ds(n);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (x.is_red(e)) continue;
        const Edge& ed = g.edge(e);
        if (in_core[ed.u] == in_core[ed.v]) ds.unite(ed.u, ed.v);
    }
    std::vector<int> node(static_cast<std::size_t>(n), -1), id_of_root(static_cast<std::size_t>(n), -1);
    int nodes = 0;
    for (int pass = 0; pass < 2; ++pass)
        for (VertexId v = 0; v < n; ++v) {
            if (in_core[v] != (pass == 0)) continue;
            int r = ds.find(v);
            if (id_of_root[r] < 0) id_of_root[r] = nodes++;
            node[v] = id_of_root[r];
        }
    int p = 0;
    for (VertexId v : core) p = std::max(p, node[v] + 1);
    if (p == 1) return false;

    // Contracted tree T' and its minimal subtree T containing every X.
    std::vector<std::vector<std::pair<int, EdgeId>>> tadj(static_cast<std::size_t>(nodes));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (x.is_red(e)) continue;
        const Edge& ed = g.edge(e);
        if (node[ed.u] == node[ed.v]) continue;
        tadj[node[ed.u]].push_back({node[ed.v], e});
        tadj[node[ed.v]].push_back({node[ed.u], e});
    }
    std::vector<int> degree(static_cast<std::size_t>(nodes));
    std::vector<char> alive(static_cast<std::size_t>(nodes), 1);
    std::queue<int> prune;
    for (int t = 0; t < nodes; ++t) {
        degree[t] = static_cast<int>(tadj[t].size());
        if (t >= p && degree[t] <= 1) prune.push(t);
    }
    while (!prune.empty()) {
        int t = prune.front();
        prune.pop();
        if (!alive[t]) continue;
        alive[t] = 0;
        for (auto [s, e] : tadj[t])
            if (alive[s] && --degree[s] <= 1 && s >= p) prune.push(s);
    }

    std::vector<char> holds_cycle(static_cast<std::size_t>(p), 1);
    // holds_cycle[t]: every cycle edge lies inside X_t.
    for (int t = 0; t < p; ++t) {
        for (EdgeId e : cycle)
            if (node[g.edge(e).u] != t || node[g.edge(e).v] != t) holds_cycle[t] = 0;
    }
    int leaf = -1;
    for (int t = 0; t < p && leaf < 0; ++t)
        if (degree[t] == 1 && !holds_cycle[t]) leaf = t;
    if (leaf < 0) throw std::logic_error("no leaf of the contracted tree avoids the red cycle");
    EdgeId uv = -1;
    for (auto [s, e] : tadj[leaf])
        if (alive[s]) uv = e;
    VertexId u = node[g.edge(uv).u] == leaf ? g.edge(uv).u : g.edge(uv).v;

    // 1-orientation of the core: cycle oriented around, trees toward the cycle.
    std::vector<VertexId> out(static_cast<std::size_t>(n), -1);
    std::vector<EdgeId> out_edge(static_cast<std::size_t>(n), -1);
    {
        VertexId start = g.edge(cycle.front()).u;
        VertexId at = start;
        EdgeId via = -1;
        do {
            EdgeId next = -1;
            for (EdgeId e : cycle) {
                const Edge& ed = g.edge(e);
                if (e != via && (ed.u == at || ed.v == at)) {
                    next = e;
                    break;
                }
            }
            out[at] = g.edge(next).other(at);
            out_edge[at] = next;
            via = next;
            at = out[at];
        } while (at != start);
        std::vector<VertexId> order;
        for (VertexId v = 0; v < n; ++v)
            if (out[v] >= 0) order.push_back(v);
        for (std::size_t i = 0; i < order.size(); ++i)
            for (auto [w, e] : x.red_adj()[order[i]])
                if (in_core[w] && out[w] < 0 && !x.precious(e)) {
                    out[w] = order[i];
                    out_edge[w] = e;
                    order.push_back(w);
                }
    }
    VertexId at = u;
    for (int steps = 0; node[out[at]] == leaf; ++steps) {
        if (steps > n) throw std::logic_error("red walk stayed inside one black component");
        at = out[at];
    }
    EdgeId xy = out_edge[at];
    x.set_red(xy, false);
    x.set_red(uv, true);
    return true;
}

int even_cycle_count(const Exchanger& x) {
    int count = 0;
    for (auto& [label, cycle] : x.red_cycles())
        if (cycle.size() % 2 == 0) ++count;
    return count;
}

void check_state(const UGraph& g, const Exchanger& x, const char* where) {
    auto black = x.edges(false);
    auto red = x.edges(true);
    if (static_cast<int>(black.size()) != g.vertex_count() - 1 || !cycle_matroid_indep(g, black))
        throw std::logic_error(std::string(where) + ": black edges are not a spanning tree");
    if (!bicircular_indep(g, red)) throw std::logic_error(std::string(where) + ": red edges are not a pseudoforest");
}

bool nice(const Exchanger& x) {
    for (auto& [label, cycle] : x.red_cycles()) {
        bool ok = false;
        for (EdgeId e : cycle) ok = ok || x.precious(e);
        if (!ok) return false;
    }
    return true;
}

}  // namespace

AppendixResult appendix_decomposition(const UGraph& g) {
    const int n = g.vertex_count();
    if (n == 0 || connected_components(g).count != 1) throw Disconnected("graph is not connected");
    AppendixResult result;

    // (a) forest + pseudoforest.
    std::vector<MatroidOracle> ms{cycle_matroid(g), bicircular_matroid(g)};
    UnionResult u = matroid_union_max(ms);
    if (static_cast<int>(u.independent.size()) < g.edge_count()) {
        result.violating = violating_in(g, u.deficiency);
        return result;
    }
    Exchanger x(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) x.set_red(e, u.color[e] == 1);

    // (b) make the forest spanning.
    {
        DisjointSets ds(n);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (!x.is_red(e)) ds.unite(g.edge(e).u, g.edge(e).v);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (x.is_red(e) && ds.unite(g.edge(e).u, g.edge(e).v)) {
                x.set_red(e, false);
                ++result.stats.moved_to_black;
            }
    }
    x.refresh();
    check_state(g, x, "spanning step");

    // (c) repair bad red components; each exchange lowers (count, smallest core).
    const int cap = n * n + 10;
    for (int round = 0;; ++round) {
        if (round > cap) throw std::logic_error("core exchanges did not terminate");
        std::vector<EdgeId> cycle;
        std::vector<VertexId> core = smallest_bad_core(g, x, cycle);
        if (core.empty()) break;
        if (!shrink_core(g, x, core, cycle)) {
            std::vector<char> in(static_cast<std::size_t>(n), 0);
            for (VertexId v : core) in[v] = 1;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (in[g.edge(e).u] && in[g.edge(e).v]) result.violating.push_back(e);
            if (!is_violating_subgraph(g, result.violating)) throw std::logic_error("black-connected core is not violating");
            return result;
        }
        ++result.stats.core_swaps;
        x.refresh();
        check_state(g, x, "core exchange");
    }

    // (d) remove even red cycles, one per exchange.
    for (int evens = even_cycle_count(x); evens > 0;) {
        std::vector<EdgeId> chosen;  // e_i per even cycle
        for (auto& [label, cycle] : x.red_cycles()) {
            if (cycle.size() % 2 != 0) continue;
            EdgeId pick = -1;
            for (EdgeId e : cycle)
                if (x.precious(e) && (pick < 0 || e < pick)) pick = e;
            if (pick < 0) throw std::logic_error("even red cycle without a precious edge");
            chosen.push_back(pick);
        }
        std::vector<int> idx(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            idx[g.edge(chosen[i]).u] = static_cast<int>(i);
            idx[g.edge(chosen[i]).v] = static_cast<int>(i);
        }
        auto in_x = [&](VertexId v) { return idx[v] >= 0; };
        const auto& badj = x.black_adj();

        // Minimal subtree of G_b containing X, then suppress degree-2 non-X vertices.
        std::vector<int> deg(static_cast<std::size_t>(n));
        std::vector<char> alive(static_cast<std::size_t>(n), 1);
        std::queue<VertexId> prune;
        for (VertexId v = 0; v < n; ++v) {
            deg[v] = static_cast<int>(badj[v].size());
            if (!in_x(v) && deg[v] <= 1) prune.push(v);
        }
        while (!prune.empty()) {
            VertexId v = prune.front();
            prune.pop();
            if (!alive[v]) continue;
            alive[v] = 0;
            for (auto [w, e] : badj[v])
                if (alive[w] && --deg[w] <= 1 && !in_x(w)) prune.push(w);
        }
        auto branch = [&](VertexId v) { return alive[v] && (in_x(v) || deg[v] >= 3); };
        std::vector<std::vector<VertexId>> tadj(static_cast<std::size_t>(n));
        for (VertexId v = 0; v < n; ++v) {
            if (!branch(v)) continue;
            for (auto [w, e] : badj[v]) {
                if (!alive[w]) continue;
                VertexId prev = v, cur = w;
                while (!branch(cur)) {
                    VertexId next = -1;
                    for (auto [y, f] : badj[cur])
                        if (alive[y] && y != prev) next = y;
                    prev = cur;
                    cur = next;
                }
                tadj[v].push_back(cur);
            }
            std::sort(tadj[v].begin(), tadj[v].end());
        }

        // Select u: Case A (u, z) or Case B (i).
        VertexId case_a_u = -1, case_a_z = -1;
        int case_b = -1;
        for (VertexId f = 0; f < n && case_a_u < 0 && case_b < 0; ++f) {
            if (!branch(f) || tadj[f].size() != 1) continue;
            VertexId fp = tadj[f].front();
            if (!in_x(fp)) continue;
            if (x.red_comp(f) != x.red_comp(fp)) {
                case_a_u = fp;
                case_a_z = f;
            } else {
                case_b = idx[f];
            }
        }
        if (case_a_u < 0 && case_b < 0) {
            auto is_leaf = [&](VertexId v) { return branch(v) && tadj[v].size() == 1; };
            VertexId fp = -1;
            for (VertexId v = 0; v < n && fp < 0; ++v) {
                if (!branch(v) || is_leaf(v)) continue;
                int inner = 0;
                for (VertexId w : tadj[v]) inner += is_leaf(w) ? 0 : 1;
                if (inner <= 1) fp = v;
            }
            if (fp < 0) throw std::logic_error("tree of precious ends has no inner leaf");
            std::vector<VertexId> leaves;
            for (VertexId w : tadj[fp])
                if (is_leaf(w)) leaves.push_back(w);
            if (leaves.size() == 2 && idx[leaves[0]] == idx[leaves[1]]) {
                case_b = idx[leaves[0]];
            } else {
                for (VertexId f : leaves)
                    if (x.red_comp(f) != x.red_comp(fp)) {
                        case_a_u = fp;
                        case_a_z = f;
                        break;
                    }
                if (case_a_u < 0) throw std::logic_error("no leaf outside the red component of its neighbour");
            }
        }

        EdgeId to_black = -1, to_red = -1;
        if (case_b >= 0) {
            const EdgeId ei = chosen[case_b];
            const VertexId xi = g.edge(ei).u, yi = g.edge(ei).v;
            auto path = x.black_path(xi, yi);
            VertexId outside = -1;
            for (VertexId v : path)
                if (x.red_comp(v) != x.red_comp(xi)) {
                    outside = v;
                    break;
                }
            if (outside >= 0) {
                // Reduces to Case A around the vertex that leaves B_i.
                for (VertexId z : {xi, yi}) {
                    int others = 0;
                    for (VertexId v : x.black_side(z, outside)) others += (in_x(v) && v != z) ? 1 : 0;
                    if (others == 0) {
                        case_a_u = outside;
                        case_a_z = z;
                        break;
                    }
                }
                if (case_a_u < 0) throw std::logic_error("no isolated end on the black path");
            } else {
                // Whole path inside B_i: two consecutive path vertices share a red colour.
                std::vector<int> colour(static_cast<std::size_t>(n), -1);
                std::vector<VertexId> order{xi};
                colour[xi] = 0;
                for (std::size_t i = 0; i < order.size(); ++i)
                    for (auto [w, e] : x.red_adj()[order[i]])
                        if (colour[w] < 0) {
                            colour[w] = colour[order[i]] ^ 1;
                            order.push_back(w);
                        }
                for (std::size_t i = 0; i + 1 < path.size() && to_red < 0; ++i)
                    if (colour[path[i]] == colour[path[i + 1]]) to_red = x.black_edge(path[i], path[i + 1]);
                if (to_red < 0) throw std::logic_error("black path alternates colours of an even red component");
                to_black = ei;
                ++result.stats.case_b;
            }
        }
        if (to_red < 0) {
            const EdgeId ei = chosen[idx[case_a_z]];
            const VertexId bi = x.red_comp(case_a_z);
            auto path = x.black_path(case_a_u, case_a_z);
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                if (x.red_comp(path[i]) != bi && x.red_comp(path[i + 1]) == bi) to_red = x.black_edge(path[i], path[i + 1]);
            if (to_red < 0) throw std::logic_error("black path never enters the red component");
            to_black = ei;
            ++result.stats.case_a;
        }
        x.set_red(to_black, false);
        x.set_red(to_red, true);
        x.refresh();
        check_state(g, x, "even cycle exchange");
        const int now = even_cycle_count(x);
        if (now >= evens) throw std::logic_error("exchange did not remove an even red cycle");
        if (!nice(x)) throw std::logic_error("exchange broke a precious edge");
        evens = now;
    }

    auto black = x.edges(false);
    auto red = x.edges(true);
    if (!even_bicircular_indep(g, red)) throw std::logic_error("red edges are not an odd pseudoforest");
    result.split = ForestSplit{black, red};
    return result;
}

}  // namespace antistrong
