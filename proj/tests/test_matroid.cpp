#include "doctest.h"

#include "antistrong/errors.hpp"
#include "antistrong/matroid.hpp"
#include "oracles.hpp"

using namespace antistrong;

namespace {

std::vector<int> bits(std::uint64_t mask, int m) {
    std::vector<int> s;
    for (int i = 0; i < m; ++i)
        if (mask >> i & 1) s.push_back(i);
    return s;
}

std::vector<int> all(int m) {
    std::vector<int> s(static_cast<std::size_t>(m));
    std::iota(s.begin(), s.end(), 0);
    return s;
}

}  // namespace

TEST_CASE("small independence checks") {
    UGraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
    UGraph sq(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    std::vector<EdgeId> e3{0, 1, 2}, e2{0, 1}, e4{0, 1, 2, 3};
    CHECK_FALSE(cycle_matroid_indep(tri, e3));
    CHECK(cycle_matroid_indep(tri, e2));
    CHECK(even_bicircular_indep(tri, e3));
    CHECK_FALSE(even_bicircular_indep(sq, e4));
    CHECK(bicircular_indep(sq, e4));
    // two cycles in one component
    UGraph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    std::vector<EdgeId> six{0, 1, 2, 3, 4, 5};
    CHECK_FALSE(even_bicircular_indep(bowtie, six));
    CHECK_FALSE(bicircular_indep(bowtie, six));
    // a doubled edge is an even cycle
    UGraph dbl(2, {{0, 1}, {0, 1}}, Multiplicity::doubled);
    std::vector<EdgeId> both{0, 1};
    CHECK_FALSE(even_bicircular_indep(dbl, both));
    CHECK(bicircular_indep(dbl, both));
}

TEST_CASE("antistrong matroid independence is absence of a CAT") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 5; ++it) {
        Digraph d = oracle::random_digraph(rng, 5, 10);
        for (std::uint64_t mask = 0; mask < (1ull << 10); ++mask) {
            auto s = bits(mask, 10);
            CHECK(antistrong_matroid_indep(d, s) == !oracle::has_cat(d, mask));
        }
    }
}

TEST_CASE("union rank matches the subpartition formula") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 60; ++it) {
        const int n = oracle::uniform(rng, 2, 5);
        UGraph g = oracle::random_graph(rng, n, oracle::uniform(rng, 1, 8));
        std::vector<MatroidOracle> ms{cycle_matroid(g), even_bicircular_matroid(g)};
        UnionResult u = matroid_union_max(ms);
        SetFunction f = [&](std::span<const int> t) {
            return oracle::two_nu_minus_one_minus_beta(g, std::vector<int>(t.begin(), t.end()));
        };
        auto ground = all(g.edge_count());
        CHECK(static_cast<int>(u.independent.size()) == rank_bruteforce(f, ground));
        // each colour class is independent in its matroid
        auto cls = u.classes(2);
        CHECK(cycle_matroid_indep(g, cls[0]));
        CHECK(even_bicircular_indep(g, cls[1]));
    }
}

TEST_CASE("deficiency set certifies maximality") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 100; ++it) {
        Digraph d = oracle::random_digraph(rng, 5, oracle::uniform(rng, 8, 20));
        std::vector<MatroidOracle> ms{antistrong_matroid(d), antistrong_matroid(d)};
        UnionResult u = matroid_union_max(ms);
        const std::set<int> f(u.deficiency.begin(), u.deficiency.end());
        const std::vector<int> fv(f.begin(), f.end());
        const int outside = d.arc_count() - static_cast<int>(f.size());
        CHECK(outside + 2 * greedy_rank(ms[0], fv) == static_cast<int>(u.independent.size()));
    }
}

TEST_CASE("rank_bruteforce basics") {
    SetFunction one = [](std::span<const int>) { return 1; };
    std::vector<int> s{0, 1, 2};
    CHECK(rank_bruteforce(one, s) == 1);
    std::vector<int> empty;
    CHECK(rank_bruteforce(one, empty) == 0);
    SetFunction big = [](std::span<const int> t) { return static_cast<int>(t.size()) + 1; };
    CHECK(rank_bruteforce(big, s) == 3);
    std::vector<int> thirteen = all(13);
    CHECK_THROWS_AS(rank_bruteforce(one, thirteen), SizeLimit);
}

TEST_CASE("min cost base is a minimum spanning tree") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 50; ++it) {
        UGraph g = oracle::random_connected_graph(rng, 5, oracle::uniform(rng, 4, 10));
        std::vector<std::int64_t> cost;
        for (int e = 0; e < g.edge_count(); ++e) cost.push_back(oracle::uniform(rng, 0, 9));
        BaseResult b = min_cost_base(cycle_matroid(g), cost, 4);
        std::int64_t best = 1 << 30;
        for (std::uint64_t mask = 0; mask < (1ull << g.edge_count()); ++mask) {
            auto s = bits(mask, g.edge_count());
            if (s.size() != 4 || !cycle_matroid_indep(g, s)) continue;
            std::int64_t c = 0;
            for (int e : s) c += cost[e];
            best = std::min(best, c);
        }
        CHECK(b.cost == best);
    }
    UGraph two(4, {{0, 1}, {2, 3}});
    std::vector<std::int64_t> zero{0, 0};
    CHECK_THROWS_AS(min_cost_base(cycle_matroid(two), zero, 3), NoBase);
}

TEST_CASE("union sizes on K4") {
    UGraph k4 = complete_graph(4);
    std::vector<MatroidOracle> two_trees{cycle_matroid(k4), cycle_matroid(k4)};
    CHECK(matroid_union_max(two_trees).independent.size() == 6);
    std::vector<MatroidOracle> mixed{cycle_matroid(k4), even_bicircular_matroid(k4)};
    CHECK(matroid_union_max(mixed).independent.size() == 6);
    std::vector<MatroidOracle> single{cycle_matroid(k4)};
    CHECK(matroid_union_max(single).independent.size() == 3);
}

TEST_CASE("rank_bruteforce examples") {
    UGraph k4 = complete_graph(4);
    SetFunction f = [&](std::span<const int> t) {
        return oracle::two_nu_minus_one_minus_beta(k4, std::vector<int>(t.begin(), t.end()));
    };
    CHECK(rank_bruteforce(f, all(6)) == 6);
    UGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    SetFunction h = [&](std::span<const int> t) {
        return oracle::two_nu_minus_one_minus_beta(c4, std::vector<int>(t.begin(), t.end()));
    };
    CHECK(rank_bruteforce(h, all(4)) == 4);
    UGraph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    SetFunction nu_minus_one = [&](std::span<const int> t) {
        std::set<int> v;
        for (int e : t) v.insert({path.edge(e).u, path.edge(e).v});
        return static_cast<int>(v.size()) - 1;
    };
    CHECK(rank_bruteforce(nu_minus_one, all(4)) == 4);
}

TEST_CASE("spanning tree of B(D) is a maximal independent set") {
    Digraph k3 = complete_digraph(3);
    std::vector<MatroidOracle> one{antistrong_matroid(k3)};
    UnionResult u = matroid_union_max(one);
    CHECK(u.independent.size() == 5);
}
