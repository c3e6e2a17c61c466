#include "antistrong/flow.hpp"

#include <algorithm>
#include <queue>

namespace antistrong {

namespace {

// flow[e] is +1 for one unit u->v, -1 for v->u, 0 for none.
int augment_all(const UGraph& g, VertexId s, VertexId t, int limit, std::vector<int>& flow) {
    const int n = g.vertex_count();
    flow.assign(static_cast<std::size_t>(g.edge_count()), 0);
    if (s == t) return 0;
    int value = 0;
    std::vector<EdgeId> via(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n));
    while (limit < 0 || value < limit) {
        std::fill(seen.begin(), seen.end(), 0);
        std::queue<VertexId> queue;
        seen[s] = 1;
        queue.push(s);
        while (!queue.empty() && !seen[t]) {
            VertexId v = queue.front();
            queue.pop();
            for (EdgeId e : g.incident(v)) {
                const Edge& ed = g.edge(e);
                VertexId w = ed.other(v);
                const int dir = (v == ed.u) ? 1 : -1;
                if (seen[w] || flow[e] == dir) continue;
                seen[w] = 1;
                via[w] = e;
                queue.push(w);
            }
        }
        if (!seen[t]) break;
        for (VertexId v = t; v != s;) {
            EdgeId e = via[v];
            const Edge& ed = g.edge(e);
            VertexId u = ed.other(v);
            flow[e] += (u == ed.u) ? 1 : -1;
            v = u;
        }
        ++value;
    }
    return value;
}

}  // namespace

int max_edge_disjoint_paths(const UGraph& g, VertexId s, VertexId t, int limit) {
    std::vector<int> flow;
    return augment_all(g, s, t, limit, flow);
}

DisjointPaths edge_disjoint_paths(const UGraph& g, VertexId s, VertexId t, int limit) {
    std::vector<int> flow;
    DisjointPaths out;
    out.count = augment_all(g, s, t, limit, flow);
    std::vector<char> used(flow.size(), 0);
    for (int p = 0; p < out.count; ++p) {
        std::vector<EdgeId> path;
        std::vector<VertexId> visited{s};
        VertexId v = s;
        while (v != t) {
            EdgeId next = -1;
            for (EdgeId e : g.incident(v)) {
                if (used[e] || flow[e] == 0) continue;
                const Edge& ed = g.edge(e);
                if ((flow[e] == 1 && ed.u == v) || (flow[e] == -1 && ed.v == v)) {
                    next = e;
                    break;
                }
            }
            used[next] = 1;
            v = g.edge(next).other(v);
            // Drop circulations so every path is vertex-simple.
            auto seen_at = std::find(visited.begin(), visited.end(), v);
            if (seen_at != visited.end()) {
                auto keep = static_cast<std::size_t>(seen_at - visited.begin());
                visited.resize(keep + 1);
                path.resize(keep);
            } else {
                visited.push_back(v);
                path.push_back(next);
            }
        }
        out.paths.push_back(std::move(path));
    }
    return out;
}

}  // namespace antistrong
