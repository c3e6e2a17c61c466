#include "doctest.h"

#include "antistrong/appendix.hpp"
#include "antistrong/errors.hpp"
#include "antistrong/matroid.hpp"
#include "antistrong/orientation.hpp"
#include "oracles.hpp"

using namespace antistrong;

namespace {

void check_against_matroid(const UGraph& g) {
    AppendixResult a = appendix_decomposition(g);
    DecompositionResult m = decompose_forest_odd_pseudoforest(g);
    CHECK(a.split.has_value() == m.split.has_value());
    if (a.split) {
        CHECK(cycle_matroid_indep(g, a.split->forest));
        CHECK(even_bicircular_indep(g, a.split->pseudoforest));
        CHECK(static_cast<int>(a.split->forest.size()) == g.vertex_count() - 1);
        CHECK(a.split->forest.size() + a.split->pseudoforest.size() == static_cast<std::size_t>(g.edge_count()));
    } else {
        CHECK(is_violating_subgraph(g, a.violating));
    }
}

}  // namespace

TEST_CASE("appendix agrees with the matroid union") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 200; ++it) {
        const int n = oracle::uniform(rng, 1, 9);
        const int lo = n - 1, hi = std::min(n * (n - 1) / 2, 2 * n + 1);
        check_against_matroid(oracle::random_connected_graph(rng, n, oracle::uniform(rng, lo, hi)));
    }
}

TEST_CASE("appendix on doubled multigraphs") {
    std::mt19937_64 rng(63);
    for (int it = 0; it < 100; ++it) {
        const int n = oracle::uniform(rng, 2, 7);
        UGraph base = oracle::random_connected_graph(rng, n, oracle::uniform(rng, n - 1, n + 3));
        std::vector<Edge> e = base.edges();
        for (const Edge& x : base.edges())
            if (rng() % 3 == 0) e.push_back(x);
        check_against_matroid(UGraph(n, e, Multiplicity::doubled));
    }
}

TEST_CASE("every exchange kind occurs on hidden tree plus pseudoforest graphs") {
    std::mt19937_64 rng(65);
    AppendixStats total;
    for (int it = 0; it < 300; ++it) {
        UGraph g = oracle::shuffled_tree_forest(rng, oracle::uniform(rng, 3, 12));
        AppendixResult a = appendix_decomposition(g);
        CHECK(a.split.has_value());
        check_against_matroid(g);
        total.core_swaps += a.stats.core_swaps;
        total.case_a += a.stats.case_a;
        total.case_b += a.stats.case_b;
    }
    CHECK(total.core_swaps > 0);
    CHECK(total.case_a > 0);
    CHECK(total.case_b > 0);
}

TEST_CASE("appendix needs a connected graph") {
    CHECK_THROWS_AS(appendix_decomposition(UGraph(3, {{0, 1}})), Disconnected);
}

TEST_CASE("appendix examples") {
    check_against_matroid(complete_graph(4));
    std::vector<Edge> e;
    for (int a = 0; a < 4; ++a)
        for (int b = 4; b < 8; ++b)
            if (!(a == 0 && b == 4)) e.push_back({a, b});
    UGraph kk(8, e);
    AppendixResult r = appendix_decomposition(kk);
    CHECK_FALSE(r.split);
    CHECK(is_violating_subgraph(kk, r.violating));
}
