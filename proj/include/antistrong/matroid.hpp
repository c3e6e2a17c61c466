#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "antistrong/graph.hpp"

namespace antistrong {

// Independence oracle over the ground set {0, ..., ground_size - 1}.
// Subsets are passed as element lists without repetition. Oracles are pure and
// safe to call concurrently.
struct MatroidOracle {
    int ground_size = 0;
    std::function<bool(std::span<const int>)> independent;
};

// Forests of g.
bool cycle_matroid_indep(const UGraph& g, std::span<const EdgeId> subset);
// Odd pseudoforests: every component has at most one cycle, and that cycle is odd.
bool even_bicircular_indep(const UGraph& g, std::span<const EdgeId> subset);
// Pseudoforests of any cycle parity.
bool bicircular_indep(const UGraph& g, std::span<const EdgeId> subset);
// Arc sets whose edges form a forest in B(D), i.e. arc sets without a CAT.
bool antistrong_matroid_indep(const Digraph& d, std::span<const ArcId> subset);

MatroidOracle cycle_matroid(const UGraph& g);
MatroidOracle even_bicircular_matroid(const UGraph& g);
MatroidOracle bicircular_matroid(const UGraph& g);
MatroidOracle antistrong_matroid(const Digraph& d);
// Cycle matroid of UG(D) with one element per arc.
MatroidOracle underlying_cycle_matroid(const Digraph& d);

int greedy_rank(const MatroidOracle& m, std::span<const int> subset);

struct UnionResult {
    std::vector<int> independent;  // sorted
    std::vector<int> color;        // per ground element; -1 outside the independent set
    // Elements reachable in the final exchange graph from the candidates that could
    // not be inserted. Satisfies |candidates \ F| + sum_i r_i(F) = |independent|.
    // Empty when every candidate was inserted.
    std::vector<int> deficiency;

    std::vector<std::vector<int>> classes(int matroid_count) const;
};

// Maximum set partitionable into independent sets of the given matroids
// (matroid union), built by shortest augmenting paths in the exchange graph.
// Candidates are inserted in the given order, which makes the result a
// greedy (minimum weight) base when the order is by ascending weight.
UnionResult matroid_union_max(std::span<const MatroidOracle> oracles, std::span<const int> candidates);
UnionResult matroid_union_max(std::span<const MatroidOracle> oracles);

struct BaseResult {
    std::vector<int> base;
    std::int64_t cost = 0;
    std::vector<int> color;       // owning matroid per ground element (-1 outside the base)
    std::vector<int> deficiency;  // deficiency set of the union, when not everything fit
};

// Greedy by ascending (cost, element id). Throws NoBase when `required_rank` is
// given and the base found is smaller.
BaseResult min_cost_base(const MatroidOracle& m, std::span<const std::int64_t> costs,
                         std::optional<int> required_rank = std::nullopt);
BaseResult min_cost_base(std::span<const MatroidOracle> union_of, std::span<const std::int64_t> costs,
                         std::optional<int> required_rank = std::nullopt);

using SetFunction = std::function<int(std::span<const int>)>;

// min over subpartitions P of S of |S \ union P| + sum_{T in P} f(T), by exhaustive
// enumeration. Test oracle only: throws SizeLimit when |S| > 12.
int rank_bruteforce(const SetFunction& f, std::span<const int> s);

}  // namespace antistrong
