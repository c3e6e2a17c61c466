#include "antistrong/matroid.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "antistrong/errors.hpp"

namespace antistrong {

namespace {

// Union-find that tracks the parity of each element relative to its root and
// whether the component already contains a cycle.
class ParityForest {
public:
    explicit ParityForest(int n)
        : parent_(static_cast<std::size_t>(n)), parity_(static_cast<std::size_t>(n), 0),
          cyclic_(static_cast<std::size_t>(n), 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    // Returns (root, parity of x relative to root).
    std::pair<int, int> find(int x) {
        int p = 0;
        int r = x;
        while (parent_[r] != r) {
            p ^= parity_[r];
            r = parent_[r];
        }
        // Compress, fixing parities along the way.
        int acc = p;
        while (parent_[x] != r) {
            int next = parent_[x];
            int old = parity_[x];
            parent_[x] = r;
            parity_[x] = static_cast<char>(acc);
            acc ^= old;
            x = next;
        }
        return {r, p};
    }

    // Adds edge uv. `allow_even` permits the first cycle of a component to be even.
    bool add(int u, int v, bool allow_even) {
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        if (ru == rv) {
            if (cyclic_[ru]) return false;
            const bool odd_cycle = (pu == pv);
            if (!odd_cycle && !allow_even) return false;
            cyclic_[ru] = 1;
            return true;
        }
        if (cyclic_[ru] && cyclic_[rv]) return false;
        parent_[rv] = ru;
        parity_[rv] = static_cast<char>(pu ^ pv ^ 1);
        cyclic_[ru] = static_cast<char>(cyclic_[ru] | cyclic_[rv]);
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<char> parity_;
    std::vector<char> cyclic_;
};

bool pseudoforest_check(const UGraph& g, std::span<const EdgeId> subset, bool allow_even) {
    ParityForest pf(g.vertex_count());
    for (EdgeId e : subset) {
        const Edge& ed = g.edge(e);
        if (!pf.add(ed.u, ed.v, allow_even)) return false;
    }
    return true;
}

bool forest_check(int n, std::span<const Edge> edges, std::span<const int> subset) {
    DisjointSets ds(n);
    for (int e : subset)
        if (!ds.unite(edges[e].u, edges[e].v)) return false;
    return true;
}

template <typename Check>
MatroidOracle make_oracle(int ground, Check check) {
    return MatroidOracle{ground, std::move(check)};
}

}  // namespace

bool cycle_matroid_indep(const UGraph& g, std::span<const EdgeId> subset) {
    return forest_check(g.vertex_count(), g.edges(), subset);
}

bool even_bicircular_indep(const UGraph& g, std::span<const EdgeId> subset) {
    return pseudoforest_check(g, subset, false);
}

bool bicircular_indep(const UGraph& g, std::span<const EdgeId> subset) { return pseudoforest_check(g, subset, true); }

bool antistrong_matroid_indep(const Digraph& d, std::span<const ArcId> subset) {
    BipRep b(d);
    return forest_check(b.vertex_count(), b.edges(), subset);
}

MatroidOracle cycle_matroid(const UGraph& g) {
    auto shared = std::make_shared<const UGraph>(g);
    return make_oracle(g.edge_count(), [shared](std::span<const int> s) { return cycle_matroid_indep(*shared, s); });
}

MatroidOracle even_bicircular_matroid(const UGraph& g) {
    auto shared = std::make_shared<const UGraph>(g);
    return make_oracle(g.edge_count(), [shared](std::span<const int> s) { return even_bicircular_indep(*shared, s); });
}

MatroidOracle bicircular_matroid(const UGraph& g) {
    auto shared = std::make_shared<const UGraph>(g);
    return make_oracle(g.edge_count(), [shared](std::span<const int> s) { return bicircular_indep(*shared, s); });
}

MatroidOracle antistrong_matroid(const Digraph& d) {
    auto b = std::make_shared<const BipRep>(d);
    return make_oracle(d.arc_count(),
                       [b](std::span<const int> s) { return forest_check(b->vertex_count(), b->edges(), s); });
}

MatroidOracle underlying_cycle_matroid(const Digraph& d) { return cycle_matroid(underlying_graph(d)); }

int greedy_rank(const MatroidOracle& m, std::span<const int> subset) {
    std::vector<int> indep;
    for (int e : subset) {
        indep.push_back(e);
        if (!m.independent(indep)) indep.pop_back();
    }
    return static_cast<int>(indep.size());
}

std::vector<std::vector<int>> UnionResult::classes(int matroid_count) const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(matroid_count));
    for (int e : independent) out[static_cast<std::size_t>(color[e])].push_back(e);
    return out;
}

namespace {

class UnionEngine {
public:
    UnionEngine(std::span<const MatroidOracle> oracles, int ground)
        : oracles_(oracles), k_(static_cast<int>(oracles.size())), color_(static_cast<std::size_t>(ground), -1),
          members_(oracles.size()) {}

    bool fits(int i, int x) {
        scratch_ = members_[i];
        scratch_.push_back(x);
        return oracles_[i].independent(scratch_);
    }

    bool swaps(int i, int x, int y) {
        scratch_.clear();
        for (int e : members_[i])
            if (e != y) scratch_.push_back(e);
        scratch_.push_back(x);
        return oracles_[i].independent(scratch_);
    }

    // Tries to insert s by a shortest augmenting path. BFS visits colours in index
    // order and exchange partners in ascending element order.
    bool insert(int s) {
        std::vector<int> parent(color_.size(), -2);
        std::queue<int> queue;
        parent[s] = -1;
        queue.push(s);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop();
            for (int i = 0; i < k_; ++i) {
                if (color_[x] == i) continue;
                if (fits(i, x)) {
                    apply(x, i, parent);
                    return true;
                }
            }
            for (int i = 0; i < k_; ++i) {
                if (color_[x] == i) continue;
                for (int y : members_[i]) {
                    if (parent[y] != -2) continue;
                    if (swaps(i, x, y)) {
                        parent[y] = x;
                        queue.push(y);
                    }
                }
            }
        }
        return false;
    }

    // Every element reachable from `sources` in the exchange graph.
    std::vector<int> reachable(std::span<const int> sources) {
        std::vector<char> seen(color_.size(), 0);
        std::queue<int> queue;
        for (int s : sources) {
            seen[s] = 1;
            queue.push(s);
        }
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop();
            for (int i = 0; i < k_; ++i) {
                if (color_[x] == i) continue;
                for (int y : members_[i])
                    if (!seen[y] && swaps(i, x, y)) {
                        seen[y] = 1;
                        queue.push(y);
                    }
            }
        }
        std::vector<int> out;
        for (std::size_t e = 0; e < seen.size(); ++e)
            if (seen[e]) out.push_back(static_cast<int>(e));
        return out;
    }

    const std::vector<int>& color() const { return color_; }
    const std::vector<std::vector<int>>& members() const { return members_; }

private:
    void apply(int last, int target, const std::vector<int>& parent) {
        int cur = last;
        int new_color = target;
        while (true) {
            int old = color_[cur];
            set_color(cur, new_color);
            if (parent[cur] == -1) break;
            new_color = old;
            cur = parent[cur];
        }
    }

    void set_color(int e, int c) {
        if (color_[e] >= 0) {
            auto& from = members_[color_[e]];
            from.erase(std::find(from.begin(), from.end(), e));
        }
        color_[e] = c;
        auto& to = members_[c];
        to.insert(std::lower_bound(to.begin(), to.end(), e), e);
    }

    std::span<const MatroidOracle> oracles_;
    int k_;
    std::vector<int> color_;
    std::vector<std::vector<int>> members_;
    std::vector<int> scratch_;
};

}  // namespace

UnionResult matroid_union_max(std::span<const MatroidOracle> oracles, std::span<const int> candidates) {
    if (oracles.empty()) throw InvalidInput("matroid union needs at least one matroid");
    const int ground = oracles.front().ground_size;
    for (const auto& m : oracles)
        if (m.ground_size != ground) throw InvalidInput("matroids must share the ground set");
    std::vector<char> listed(static_cast<std::size_t>(ground), 0);
    for (int e : candidates) {
        if (e < 0 || e >= ground) throw InvalidInput("candidate outside the ground set");
        if (listed[e]) throw InvalidInput("candidate listed twice");
        listed[e] = 1;
    }

    UnionEngine engine(oracles, ground);
    std::vector<int> failed;
    for (int e : candidates)
        if (!engine.insert(e)) failed.push_back(e);

    UnionResult result;
    result.color = engine.color();
    for (int e = 0; e < ground; ++e)
        if (result.color[e] >= 0) result.independent.push_back(e);
    if (!failed.empty()) {
        result.deficiency = engine.reachable(failed);
        // Min-max certificate: |C \ F| + sum_i r_i(F) must equal |I|.
        int outside = 0;
        std::vector<char> in_f(static_cast<std::size_t>(ground), 0);
        for (int e : result.deficiency) in_f[e] = 1;
        for (int e : candidates)
            if (!in_f[e]) ++outside;
        int total = outside;
        for (const auto& m : oracles) total += greedy_rank(m, result.deficiency);
        if (total != static_cast<int>(result.independent.size())) {
            throw std::logic_error("matroid union: deficiency set does not attain the rank formula");
        }
    }
    return result;
}

UnionResult matroid_union_max(std::span<const MatroidOracle> oracles) {
    if (oracles.empty()) throw InvalidInput("matroid union needs at least one matroid");
    std::vector<int> all(static_cast<std::size_t>(oracles.front().ground_size));
    std::iota(all.begin(), all.end(), 0);
    return matroid_union_max(oracles, all);
}

namespace {

std::vector<int> by_cost(std::span<const std::int64_t> costs) {
    std::vector<int> order(costs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return costs[a] < costs[b]; });
    return order;
}

}  // namespace

BaseResult min_cost_base(std::span<const MatroidOracle> union_of, std::span<const std::int64_t> costs,
                         std::optional<int> required_rank) {
    if (union_of.empty()) throw InvalidInput("no matroids given");
    if (static_cast<int>(costs.size()) != union_of.front().ground_size) throw InvalidInput("cost vector size mismatch");
    for (auto c : costs)
        if (c < 0) throw InvalidInput("costs must be nonnegative");
    auto order = by_cost(costs);
    UnionResult u = matroid_union_max(union_of, order);
    BaseResult r;
    r.base = u.independent;
    r.color = u.color;
    r.deficiency = u.deficiency;
    for (int e : r.base) r.cost += costs[e];
    if (required_rank && static_cast<int>(r.base.size()) < *required_rank) {
        throw NoBase("matroid rank " + std::to_string(r.base.size()) + " is below the required " +
                     std::to_string(*required_rank));
    }
    return r;
}

BaseResult min_cost_base(const MatroidOracle& m, std::span<const std::int64_t> costs, std::optional<int> required_rank) {
    return min_cost_base(std::span<const MatroidOracle>(&m, 1), costs, required_rank);
}

int rank_bruteforce(const SetFunction& f, std::span<const int> s) {
    const int k = static_cast<int>(s.size());
    if (k > 12) throw SizeLimit("rank_bruteforce supports at most 12 elements");
    const int full = (1 << k) - 1;
    // Block values for every nonempty subset.
    std::vector<int> value(static_cast<std::size_t>(full) + 1, 0);
    std::vector<int> members;
    for (int mask = 1; mask <= full; ++mask) {
        members.clear();
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) members.push_back(s[i]);
        value[mask] = f(members);
    }
    // best[mask]: minimum over subpartitions of the elements in mask. The lowest
    // element is either left uncovered or lies in the block T containing it.
    std::vector<int> best(static_cast<std::size_t>(full) + 1, 0);
    for (int mask = 1; mask <= full; ++mask) {
        const int low = mask & -mask;
        const int rest = mask ^ low;
        int b = 1 + best[rest];
        for (int sub = rest;; sub = (sub - 1) & rest) {
            b = std::min(b, value[sub | low] + best[rest ^ sub]);
            if (sub == 0) break;
        }
        best[mask] = b;
    }
    return best[full];
}

}  // namespace antistrong
