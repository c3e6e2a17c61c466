#include "doctest.h"

#include <sstream>

#include "antistrong/errors.hpp"
#include "antistrong/hardness.hpp"
#include "antistrong/io.hpp"
#include "oracles.hpp"

using namespace antistrong;

namespace {

Instance parse(const std::string& s) {
    std::istringstream in(s);
    return parse_instance(in);
}

int error_line(const std::string& s) {
    try {
        parse(s);
    } catch (const ParseError& e) {
        return static_cast<int>(e.line());
    }
    return -1;
}

}  // namespace

TEST_CASE("instance round trip") {
    Instance a = parse("# directed triangle\ndigraph 3 3\n0 1\n1 2 # inline note\n\n2 0\n");
    CHECK(a.kind == InstanceKind::digraph);
    CHECK(a.comments == std::vector<std::string>{"directed triangle"});
    CHECK(parse(serialize(a)) == a);
    CHECK(a.digraph().arc_count() == 3);
    CHECK_THROWS_AS(a.graph(), InvalidInput);

    std::mt19937_64 rng(91);
    for (int it = 0; it < 50; ++it) {
        Instance d = from_digraph(oracle::random_digraph(rng, 6, 12));
        CHECK(parse(serialize(d)) == d);
        Instance g = from_graph(oracle::random_graph(rng, 6, 9));
        CHECK(parse(serialize(g)) == g);
    }
}

TEST_CASE("multigraph instances allow two copies") {
    Instance m = parse("multigraph 2 2\n0 1\n1 0\n");
    CHECK(m.graph().multiplicity() == Multiplicity::doubled);
    CHECK(error_line("multigraph 2 3\n0 1\n1 0\n0 1\n") == 4);
    CHECK(error_line("graph 2 2\n0 1\n1 0\n") == 3);
}

TEST_CASE("parse errors report lines") {
    CHECK(error_line("digraph 3 1\n0 3\n") == 2);
    CHECK(error_line("digraph 3 2\n0 1\n0 1\n") == 3);
    CHECK(error_line("digraph 3 1\n1 1\n") == 2);
    CHECK(error_line("tree 3 1\n0 1\n") == 1);
    CHECK(error_line("# nothing\n") == 1);
    CHECK(error_line("digraph 3 2\n0 1\n") == 2);
    CHECK(error_line("digraph 3 1\n0 1 2\n") == 2);
}

TEST_CASE("hash ignores comments") {
    Instance a = parse("digraph 3 1\n0 1\n");
    Instance b = parse("# note\ndigraph 3 1\n0 1\n");
    CHECK(instance_hash(a) == instance_hash(b));
    CHECK(instance_hash(a).size() == 16);
    CHECK(instance_hash(a) != instance_hash(parse("digraph 3 1\n1 0\n")));
}

TEST_CASE("artifacts verify and tampering is caught") {
    Instance k5 = from_graph(complete_graph(5));
    auto r = antistrong_orientation(k5.graph());
    Json art = make_artifact("orientation", k5, "k5.txt", orientation_payload(std::get<Orientation>(r), "antistrong"));
    CHECK(verify_artifact(art, k5).ok);
    CHECK(verify_artifact(Json::parse(art.dump()), k5).ok);

    // reversing every arc swaps the sides of B(D)
    Json flipped = art;
    for (auto& a : flipped["payload"]["arcs"]) std::swap(a[0], a[1]);
    CHECK(verify_artifact(flipped, k5).ok);

    Json wrong = art;
    wrong["payload"]["arcs"][0] = {0, 0};
    CHECK_FALSE(verify_artifact(wrong, k5).ok);

    Json hash = art;
    hash["input_hash"] = "0000000000000000";
    CHECK_FALSE(verify_artifact(hash, k5).ok);

    Json schema = art;
    schema["schema"] = "antistrong-cert/0";
    CHECK_THROWS_AS(verify_artifact(schema, k5), SchemaMismatch);
    Json missing = art;
    missing["payload"].erase("arcs");
    CHECK_THROWS_AS(verify_artifact(missing, k5), SchemaMismatch);
    Json kind = art;
    kind["kind"] = "poem";
    CHECK_THROWS_AS(verify_artifact(kind, k5), SchemaMismatch);
}

TEST_CASE("certificate artifacts") {
    KkkK4 x = gen_kkk_k4(3);
    Instance inst = from_graph(x.g);
    Json art = make_artifact("partition-certificate", inst, "", certificate_payload(x.q));
    CHECK(verify_artifact(art, inst).ok);
    art["payload"]["e"] = 5;
    CHECK_FALSE(verify_artifact(art, inst).ok);
    Json whole = make_artifact("partition-certificate", inst, "",
                               certificate_payload(make_certificate(x.g, {{0, 1, 2, 3, 4, 5, 6, 7, 8}})));
    CHECK_FALSE(verify_artifact(whole, inst).ok);
}

TEST_CASE("pack artifacts reject overlaps") {
    Digraph d = complete_digraph(5);
    Instance inst = from_digraph(d);
    auto r = pack_antistrong(d, 2);
    REQUIRE(r);
    Json art = make_artifact("pack", inst, "", pack_payload(*r));
    CHECK(verify_artifact(art, inst).ok);
    art["payload"]["classes"][1][0] = art["payload"]["classes"][0][0];
    CHECK_FALSE(verify_artifact(art, inst).ok);
}

TEST_CASE("augmentation artifacts") {
    Digraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
    Instance inst = from_digraph(tri);
    Json art = make_artifact("augmentation", inst, "", augmentation_payload(1, augment_antistrong(tri)));
    CHECK(verify_artifact(art, inst).ok);
    art["payload"]["new_arcs"].push_back({1, 0});
    CHECK_FALSE(verify_artifact(art, inst).ok);
}

TEST_CASE("trail shapes by name") {
    for (TrailShape s : {TrailShape::any, TrailShape::forward, TrailShape::even_forward, TrailShape::even_backward,
                         TrailShape::closed, TrailShape::simple_path})
        CHECK(parse_shape(shape_name(s)) == s);
    CHECK_THROWS_AS(parse_shape("sideways"), SchemaMismatch);
}
