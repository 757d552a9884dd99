#include <doctest.h>

#include "qlayout/generators.hpp"
#include "qlayout/verify.hpp"
#include "support.hpp"

using namespace qlayout;
namespace qt = qlayout::testing;

namespace {

QueueLayout make_layout(std::vector<Vertex> order, std::vector<Edge> edges,
                        std::vector<int> queues) {
    QueueLayout l;
    l.order = std::move(order);
    l.edges = std::move(edges);
    l.queue_of = std::move(queues);
    l.recount_queues();
    return l;
}

}  // namespace

TEST_CASE("max rainbow of nested, necklace and crossing patterns") {
    std::vector<Vertex> order{0, 1, 2, 3, 4, 5};
    CHECK(max_rainbow(order, {Edge(0, 5), Edge(1, 4), Edge(2, 3)}) == 3);
    CHECK(max_rainbow(order, {Edge(0, 1), Edge(2, 3), Edge(4, 5)}) == 1);
    CHECK(max_rainbow(order, {Edge(0, 2), Edge(1, 3)}) == 1);
    CHECK(max_rainbow(order, {}) == 0);
    // shared endpoints are not independent: no 2-rainbow here
    CHECK(max_rainbow(order, {Edge(0, 5), Edge(1, 5)}) == 1);
}

TEST_CASE("max rainbow agrees with the exhaustive subset oracle") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 4 + static_cast<int>(qt::rng_below(rng, 4));
        Graph g = qt::random_graph(n, 0.5, rng);
        if (g.num_edges() == 0 || g.num_edges() > 11) continue;
        std::vector<Vertex> order = qt::random_order(n, rng);
        CHECK(max_rainbow(order, g.edges()) == qt::brute_max_rainbow(order, g.edges()));
    }
}

TEST_CASE("validate K4 layouts") {
    Graph k4 = gen_complete(4).graph;
    std::vector<Edge> edges = k4.edges();  // (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
    std::vector<Vertex> order{0, 1, 2, 3};

    SUBCASE("two queues split by shared endpoints are valid") {
        std::vector<int> q;
        for (const Edge& e : edges) q.push_back(e.u == 0 ? 0 : 1);
        ValidationReport rep = validate_layout(k4, make_layout(order, edges, q));
        CHECK(rep.valid);
        CHECK(rep.max_rainbow_per_queue.at(0) == 1);
        CHECK(rep.max_rainbow_per_queue.at(1) == 1);
    }
    SUBCASE("one queue is invalid with the forced witness") {
        ValidationReport rep =
            validate_layout(k4, make_layout(order, edges, std::vector<int>(6, 0)));
        CHECK(!rep.valid);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->first == Edge(0, 3));
        CHECK(rep.witness->second == Edge(1, 2));
    }
}

TEST_CASE("edges sharing an endpoint may sit nested in one queue") {
    Graph g(4, {Edge(0, 3), Edge(1, 3)});
    ValidationReport rep =
        validate_layout(g, make_layout({0, 1, 2, 3}, g.edges(), {0, 0}));
    CHECK(rep.valid);
}

TEST_CASE("validate rejects malformed layouts") {
    Graph g(3, {Edge(0, 1), Edge(1, 2)});
    CHECK_THROWS_AS(validate_layout(g, make_layout({0, 1}, g.edges(), {0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_layout(g, make_layout({0, 1, 2}, {Edge(0, 1)}, {0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_layout(g, make_layout({0, 0, 2}, g.edges(), {0, 0})),
                    std::invalid_argument);
}

TEST_CASE("exact queue number anchors") {
    CHECK(exact_queue_number(gen_complete(4).graph) == 2);
    CHECK(exact_queue_number(gen_complete(5).graph) == 2);
    CHECK(exact_queue_number(gen_complete(6).graph) == 3);
    CHECK(exact_queue_number(gen_complete(7).graph) == 3);
    for (int n = 2; n <= 7; ++n) CHECK(exact_queue_number(gen_path(n)) == 1);
    CHECK(exact_queue_number(gen_star(5)) == 1);
    for (std::uint64_t s = 1; s <= 6; ++s)
        CHECK(exact_queue_number(gen_random_tree(8, s)) == 1);
    for (int n = 3; n <= 8; ++n) CHECK(exact_queue_number(gen_cycle(n)) == 1);
    CHECK_THROWS_AS(exact_queue_number(gen_path(12)), std::invalid_argument);
}

TEST_CASE("oracle does not assume any particular vertex can be placed first") {
    // every order of this graph starting at vertex 0 forms a 2-rainbow,
    // yet one queue suffices
    Graph g(6, {Edge(0, 4), Edge(0, 5), Edge(1, 2), Edge(1, 4), Edge(1, 5), Edge(3, 4),
                Edge(3, 5)});
    CHECK(exact_queue_number(g) == 1);
}

TEST_CASE("known value suite passes") {
    for (const KnownValueResult& r : known_value_suite()) {
        INFO(r.fixture << " expected " << r.expectation << " got " << r.got);
        CHECK(r.pass);
    }
}
