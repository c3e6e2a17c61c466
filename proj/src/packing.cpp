#include "antistrong/packing.hpp"

#include <algorithm>

#include "antistrong/analysis.hpp"
#include "antistrong/errors.hpp"
#include "antistrong/matroid.hpp"

namespace antistrong {

std::optional<PackResult> mixed_pack(const Digraph& d, int k, int l) {
    const int n = d.vertex_count();
    if (n < 3) throw TooFewVertices("need at least 3 vertices, got " + std::to_string(n));
    if (k < 0 || l < 0) throw InvalidInput("k and l must be nonnegative");
    if (k + l == 0) throw InvalidInput("nothing to pack");
    std::vector<MatroidOracle> ms;
    for (int i = 0; i < k; ++i) ms.push_back(antistrong_matroid(d));
    for (int i = 0; i < l; ++i) ms.push_back(underlying_cycle_matroid(d));
    UnionResult u = matroid_union_max(ms);
    if (static_cast<int>(u.independent.size()) != k * (2 * n - 1) + l * (n - 1)) return std::nullopt;
    PackResult r;
    r.k = k;
    r.l = l;
    r.classes = u.classes(k + l);
    for (ArcId a = 0; a < d.arc_count(); ++a)
        if (u.color[a] < 0) r.leftover.push_back(a);
    return r;
}

std::optional<PackResult> pack_antistrong(const Digraph& d, int k) {
    if (k < 1) throw InvalidInput("k must be positive");
    return mixed_pack(d, k, 0);
}

std::optional<PackResult> nonseparating_antistrong(const Digraph& d) { return mixed_pack(d, 1, 1); }

bool verify_pack(const Digraph& d, const PackResult& p) {
    const int n = d.vertex_count();
    if (p.k < 0 || p.l < 0 || static_cast<int>(p.classes.size()) != p.k + p.l) return false;
    std::vector<int> owner(static_cast<std::size_t>(d.arc_count()), -1);
    for (std::size_t c = 0; c < p.classes.size(); ++c)
        for (ArcId a : p.classes[c]) {
            if (a < 0 || a >= d.arc_count() || owner[a] >= 0) return false;
            owner[a] = static_cast<int>(c);
        }
    for (ArcId a : p.leftover)
        if (a < 0 || a >= d.arc_count() || owner[a] >= 0) return false;
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
        std::vector<Arc> arcs;
        for (ArcId a : p.classes[c]) arcs.push_back(d.arc(a));
        if (static_cast<int>(c) < p.k) {
            if (!is_antistrong(Digraph(n, arcs))) return false;
        } else {
            std::vector<Edge> edges;
            for (const Arc& a : arcs) edges.push_back({a.tail, a.head});
            if (connected_components(n, edges).count != 1) return false;
        }
    }
    return true;
}

}  // namespace antistrong
