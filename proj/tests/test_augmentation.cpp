#include "doctest.h"

#include "antistrong/analysis.hpp"
#include "antistrong/augmentation.hpp"
#include "antistrong/errors.hpp"
#include "antistrong/packing.hpp"
#include "oracles.hpp"

using namespace antistrong;

TEST_CASE("directed triangle needs two arcs") {
    Digraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
    AugmentationResult r = augment_antistrong(tri);
    CHECK(r.new_arcs.size() == 2);
    CHECK(is_antistrong(r.augmented));
    CHECK(std::equal(tri.arcs().begin(), tri.arcs().end(), r.augmented.arcs().begin()));
}

TEST_CASE("augmentation is minimum") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 80; ++it) {
        const int n = oracle::uniform(rng, 3, 5);
        Digraph d = oracle::random_digraph(rng, n, oracle::uniform(rng, 0, 2 * n));
        AugmentationResult r = augment_antistrong(d);
        CHECK(static_cast<int>(r.new_arcs.size()) == oracle::min_augmentation(d));
        CHECK(static_cast<int>(r.new_arcs.size()) == oracle::bip_components(d) - 1);
        CHECK(oracle::antistrong_by_bip(r.augmented));
    }
}

TEST_CASE("antistrong input needs nothing") {
    AugmentationResult r = augment_antistrong(complete_digraph(4));
    CHECK(r.new_arcs.empty());
}

TEST_CASE("augmentation preconditions") {
    CHECK_THROWS_AS(augment_antistrong(Digraph(2)), TooFewVertices);
    CHECK_THROWS_AS(augment_k_disjoint(Digraph(4), 0), InvalidInput);
    CHECK_THROWS_AS(augment_k_disjoint(Digraph(2), 1), TooFewVertices);
}

TEST_CASE("k disjoint augmentation") {
    // 2k(2n - 1) arcs cannot fit in the n(n - 1) available pairs for n = 4, k = 2.
    CHECK_FALSE(augment_k_disjoint(Digraph(4), 2));
    auto r = augment_k_disjoint(Digraph(5), 2);
    REQUIRE(r);
    CHECK(r->new_arcs.size() == 18);
    PackResult p{2, 0, r->packing, {}};
    CHECK(verify_pack(r->augmented, p));

    std::mt19937_64 rng(43);
    for (int it = 0; it < 40; ++it) {
        Digraph d = oracle::random_digraph(rng, 5, oracle::uniform(rng, 0, 14));
        auto one = augment_k_disjoint(d, 1);
        REQUIRE(one);
        CHECK(one->new_arcs.size() == augment_antistrong(d).new_arcs.size());
        auto two = augment_k_disjoint(d, 2);
        REQUIRE(two);
        PackResult q{2, 0, two->packing, {}};
        CHECK(verify_pack(two->augmented, q));
        // the packing needs 18 arcs; only the arcs of D can be reused
        CHECK(static_cast<int>(two->new_arcs.size()) >= 18 - d.arc_count());
    }
}
