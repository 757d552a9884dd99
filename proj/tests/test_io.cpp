#include <doctest.h>

#include "qlayout/generators.hpp"
#include "qlayout/io.hpp"
#include "support.hpp"

using namespace qlayout;
using nlohmann::json;
namespace qt = qlayout::testing;

TEST_CASE("graph json round-trip with rotation, coords and outer face") {
    EmbeddedGraph eg = gen_octahedron();
    GraphInput gi{eg.graph, eg.rotation, std::nullopt, Edge(0, 1)};
    json j = graph_to_json(gi);
    GraphInput back = graph_from_json(j);
    CHECK(back.graph.num_vertices() == gi.graph.num_vertices());
    CHECK(back.graph.edges() == gi.graph.edges());
    REQUIRE(back.rotation.has_value());
    CHECK(back.rotation->order == gi.rotation->order);
    REQUIRE(back.outer_face.has_value());
    CHECK(*back.outer_face == Edge(0, 1));

    GraphInput coords_gi{gen_path(3), std::nullopt,
                         std::vector<std::array<double, 2>>{{0, 0}, {1, 0}, {1, 1}},
                         std::nullopt};
    json j2 = graph_to_json(coords_gi);
    GraphInput back2 = graph_from_json(j2);
    REQUIRE(back2.coords.has_value());
    CHECK((*back2.coords)[2][1] == 1.0);
    check_rotation(back2.graph, back2.effective_rotation());
}

TEST_CASE("graph json rejects malformed input") {
    CHECK_THROWS(graph_from_json(json::parse(R"({"edges":[[0,1]]})")));
    CHECK_THROWS(graph_from_json(json::parse(R"({"n":2,"edges":[[0]]})")));
    CHECK_THROWS(graph_from_json(json::parse(R"({"n":2,"edges":[[0,2]]})")));
    // rotation that breaks the Euler relation is rejected at parse time
    CHECK_THROWS(graph_from_json(json::parse(
        R"({"n":3,"edges":[[0,1],[1,2]],"rotation":{"0":[1],"1":[0]}})")));
}

TEST_CASE("instance json round-trip") {
    DeltaMatchedInstance inst = gen_delta_matched(4, 2, 9);
    json j = instance_to_json(inst);
    DeltaMatchedInstance back = instance_from_json(j);
    CHECK(back.delta == inst.delta);
    CHECK(back.root == inst.root);
    CHECK(back.children == inst.children);
    CHECK(back.matching == inst.matching);
}

TEST_CASE("instance json rejects a crossing matching") {
    json j = json::parse(
        R"({"delta":3,"tree":{"children":{"0":[1,2],"1":[3,4],"2":[5,6]}},
            "matching":[[3,5],[4,6]]})");
    CHECK_THROWS_AS(instance_from_json(j), std::invalid_argument);
}

TEST_CASE("layout json round-trip including big bounds") {
    QueueLayout l;
    l.order = {2, 0, 1};
    l.edges = {Edge(0, 1), Edge(1, 2)};
    l.queue_of = {0, 1};
    l.recount_queues();
    l.bounds["theorem1"] = bigint_pow(2, 100);
    l.bounds["lemma1"] = BigInt(42);
    l.layers = {0, 0, 1};
    json j = layout_to_json(l);
    CHECK(j.at("bounds").at("theorem1").is_string());
    CHECK(j.at("bounds").at("lemma1").is_number());
    QueueLayout back = layout_from_json(j);
    CHECK(back.order == l.order);
    CHECK(back.edges == l.edges);
    CHECK(back.queue_of == l.queue_of);
    CHECK(back.num_queues == l.num_queues);
    CHECK(back.bounds.at("theorem1") == l.bounds.at("theorem1"));
    CHECK(back.bounds.at("lemma1") == 42);
    CHECK(back.layers == l.layers);
}

TEST_CASE("provenance serialization reports splits") {
    EmbeddedGraph eg = gen_path_chord(6);
    BfsLayering L = bfs_layering(eg.graph, 1, *eg.rotation);
    PreparedGraph pg =
        subdivide_step1(eg.graph, *eg.rotation, L, SubdivisionRecord::for_graph(eg.graph));
    json j = record_to_json(pg.record);
    CHECK(j.at("original_n") == 6);
    CHECK(j.at("max_subdivisions") == 2);
    CHECK(j.at("added_vertices").size() == 2);
    bool found = false;
    for (const auto& p : j.at("edge_paths"))
        if (p.at("path").size() == 4) found = true;
    CHECK(found);
}

TEST_CASE("bigint json forms") {
    CHECK(bigint_to_json(BigInt(7)) == json(7));
    CHECK(bigint_from_json(json(7)) == 7);
    BigInt big = bigint_pow(3, 200);
    CHECK(bigint_from_json(bigint_to_json(big)) == big);
    CHECK_THROWS(bigint_from_json(json::parse("[1]")));
}

TEST_CASE("dot export lists the edges") {
    GraphInput gi{gen_path(3), std::nullopt, std::nullopt, std::nullopt};
    std::string dot = to_dot(gi);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
}
