#include "antistrong/augmentation.hpp"

#include <algorithm>
#include <cstdint>

#include "antistrong/errors.hpp"
#include "antistrong/matroid.hpp"

namespace antistrong {

namespace {

void require_three(const Digraph& d) {
    if (d.vertex_count() < 3) throw TooFewVertices("need at least 3 vertices, got " + std::to_string(d.vertex_count()));
}

Digraph with_arcs(const Digraph& d, const std::vector<Arc>& extra) {
    std::vector<Arc> arcs = d.arcs();
    arcs.insert(arcs.end(), extra.begin(), extra.end());
    return Digraph(d.vertex_count(), std::move(arcs));
}

}  // namespace

AugmentationResult augment_antistrong(const Digraph& d) {
    require_three(d);
    const int n = d.vertex_count();
    DisjointSets ds(2 * n);
    int pieces = 2 * n;
    for (const Arc& a : d.arcs())
        if (ds.unite(a.tail, n + a.head)) --pieces;

    // Kruskal: existing edges (cost 0) are in; now legal new pairs u'v'' (u != v)
    // in lexicographic order. Every 0' and 1' edge is tried first, so the scan
    // finishes after O(n) rows.
    AugmentationResult r;
    for (VertexId t = 0; t < n && pieces > 1; ++t)
        for (VertexId h = 0; h < n && pieces > 1; ++h) {
            if (t == h || d.has_arc(t, h)) continue;
            if (ds.unite(t, n + h)) {
                --pieces;
                r.new_arcs.push_back({t, h});
            }
        }
    r.augmented = with_arcs(d, r.new_arcs);
    return r;
}

std::optional<AugmentationResult> augment_k_disjoint(const Digraph& d, int k) {
    require_three(d);
    if (k < 1) throw InvalidInput("k must be positive");
    const int n = d.vertex_count();
    // Ground set: every pair (t, h) of K_{n,n}, element t * n + h.
    std::vector<Edge> kn;
    std::vector<std::int64_t> cost;
    const std::int64_t forbidden = 2LL * n * k + 1;
    for (VertexId t = 0; t < n; ++t)
        for (VertexId h = 0; h < n; ++h) {
            kn.push_back({t, n + h});
            cost.push_back(t == h ? forbidden : (d.has_arc(t, h) ? 0 : 1));
        }
    UGraph g(2 * n, kn);
    std::vector<MatroidOracle> copies(static_cast<std::size_t>(k), cycle_matroid(g));
    BaseResult base = min_cost_base(copies, cost);
    if (static_cast<int>(base.base.size()) < k * (2 * n - 1) || base.cost >= 2LL * n * k) return std::nullopt;

    AugmentationResult r;
    for (int e : base.base)
        if (cost[e] == 1) r.new_arcs.push_back({e / n, e % n});
    r.augmented = with_arcs(d, r.new_arcs);
    // Element ids back to arc ids of the augmented digraph.
    std::vector<ArcId> arc_of(static_cast<std::size_t>(n) * n, -1);
    const auto& arcs = r.augmented.arcs();
    for (ArcId a = 0; a < static_cast<ArcId>(arcs.size()); ++a) arc_of[arcs[a].tail * n + arcs[a].head] = a;
    r.packing.assign(static_cast<std::size_t>(k), {});
    for (int e : base.base) r.packing[base.color[e]].push_back(arc_of[e]);
    for (auto& cls : r.packing) std::sort(cls.begin(), cls.end());
    return r;
}

}  // namespace antistrong
