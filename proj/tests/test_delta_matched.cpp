#include <doctest.h>

#include "qlayout/delta_matched.hpp"
#include "qlayout/generators.hpp"
#include "qlayout/verify.hpp"
#include "support.hpp"

using namespace qlayout;
namespace qt = qlayout::testing;

TEST_CASE("nesting values, unit weights") {
    // leaves 0..5, matching {(0,5),(1,2),(3,4)}
    std::vector<LaminarArc> arcs = {{0, 5, 1}, {1, 2, 1}, {3, 4, 1}};
    auto nv = nesting_values(arcs);
    CHECK(nv[0] == 0);
    CHECK(nv[1] == 1);
    CHECK(nv[2] == 1);
}

TEST_CASE("nesting values, weighted rule") {
    std::vector<LaminarArc> arcs = {{0, 3, 4}, {1, 2, 1}};
    auto nv = nesting_values(arcs);
    CHECK(nv[0] == 0);
    CHECK(nv[1] == 4);
}

TEST_CASE("nesting values, nested chain counts from the outside in") {
    std::vector<LaminarArc> arcs = {{2, 3, 1}, {0, 5, 1}, {1, 4, 1}};
    auto nv = nesting_values(arcs);
    CHECK(nv[1] == 0);
    CHECK(nv[2] == 1);
    CHECK(nv[0] == 2);
}

TEST_CASE("nesting values reject interleaving and shared anchors") {
    CHECK_THROWS_AS(nesting_values({{0, 2, 1}, {1, 3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(nesting_values({{0, 2, 1}, {2, 3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(nesting_values({{1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("matching values propagate minima bottom-up") {
    // root 0 with children 1,2; leaves below
    std::vector<std::vector<Vertex>> children = {{1, 2}, {3, 4}, {5, 6}, {}, {}, {}, {}};
    std::vector<int> layer = {2, 1, 1, 0, 0, 0, 0};
    std::vector<std::vector<BigInt>> src(7);
    src[3] = {BigInt(0)};
    src[4] = {BigInt(1)};
    src[5] = {BigInt(1)};
    src[6] = {BigInt(2)};
    auto mv = matching_values(children, 0, layer, src);
    CHECK(mv[1] == 0);
    CHECK(mv[2] == 1);
    CHECK(mv[0] == 0);

    SUBCASE("leaf without a source is an error") {
        src[6].clear();
        CHECK_THROWS_AS(matching_values(children, 0, layer, src), std::invalid_argument);
    }
    SUBCASE("all-tree mode labels everything zero") {
        auto zero = matching_values(children, 0, layer, {}, true);
        for (const BigInt& v : zero) CHECK(v == 0);
    }
}

TEST_CASE("weighted endpoint source flows into the matching value") {
    // endpoint of a weighted level arc with nesting value 4 and no other source
    std::vector<std::vector<Vertex>> children = {{1}, {}};
    std::vector<int> layer = {1, 0};
    std::vector<std::vector<BigInt>> src(2);
    src[1] = {BigInt(4)};
    auto mv = matching_values(children, 0, layer, src);
    CHECK(mv[1] == 4);
    CHECK(mv[0] == 4);
}

TEST_CASE("layer group arithmetic") {
    std::vector<BigInt> mv = {BigInt(5), BigInt(5), BigInt(7)};
    CHECK(layer_groups(mv, {1, 2, 0}, 3) == std::vector<BigInt>{BigInt(2), BigInt(1), BigInt(7)});
}

TEST_CASE("linear order sorts by layer, then group, then position") {
    // layer 0 holds 0,1,2 in that left-to-right order; layer 1 holds 3
    std::vector<std::vector<Vertex>> layer_seq = {{0, 1, 2}, {3}};
    std::vector<BigInt> g = {BigInt(2), BigInt(1), BigInt(2), BigInt(0)};
    CHECK(linear_order(layer_seq, g) == std::vector<Vertex>{1, 0, 2, 3});
}

TEST_CASE("queue assignment formula and bounds") {
    // child 1 in group 3 under parent 0 in group 1, delta 3 -> queue 2
    std::vector<Vertex> parent = {-1, 0};
    std::vector<BigInt> g = {BigInt(1), BigInt(3)};
    auto q = assign_queues({Edge(0, 1)}, {0}, parent, g, 3);
    CHECK(q[0] == 2);
    // matching edges go to queue 0
    q = assign_queues({Edge(0, 1)}, {1}, parent, g, 3);
    CHECK(q[0] == 0);
    // offset outside [0, 2*delta-4] signals broken labels
    g[1] = BigInt(9);
    CHECK_THROWS_AS(assign_queues({Edge(0, 1)}, {0}, parent, g, 3), std::logic_error);
    g[1] = BigInt(0);
    CHECK_THROWS_AS(assign_queues({Edge(0, 1)}, {0}, parent, g, 3), std::logic_error);
}

TEST_CASE("trivial two-leaf instance lays out in two queues") {
    DeltaMatchedInstance inst;
    inst.delta = 3;
    inst.root = 0;
    inst.children = {{1, 2}, {}, {}};
    inst.matching = {{1, 2}};
    QueueLayout l = layout_delta_matched(inst);
    CHECK(l.num_queues == 2);
    CHECK(validate_layout(instance_to_graph(inst), l).valid);
}

TEST_CASE("the four-queue fixture needs exactly four queues and matches the golden order") {
    DeltaMatchedInstance inst = qt::four_queue_fixture();
    // internal tree vertices have degree exactly delta here
    Graph g = instance_to_graph(inst);
    for (Vertex v = 1; v < 15; ++v) CHECK(g.degree(v) == 3);
    QueueLayout l = layout_delta_matched(inst);
    CHECK(l.num_queues == 4);
    CHECK(l.order == qt::four_queue_fixture_golden_order());
    CHECK(validate_layout(instance_to_graph(inst), l).valid);
    // queue indices stay within 0..2*delta-3
    for (int q : l.queue_of) CHECK(q <= 2 * inst.delta - 3);
}

TEST_CASE("instance validation rejects broken inputs") {
    DeltaMatchedInstance inst;
    inst.delta = 3;
    inst.root = 0;
    inst.children = {{1, 2}, {}, {}};
    inst.matching = {{1, 2}};
    validate_instance(inst);  // baseline passes

    SUBCASE("crossing matching") {
        DeltaMatchedInstance bad = inst;
        bad.children = {{1, 2}, {3, 4}, {5, 6}, {}, {}, {}, {}};
        bad.matching = {{3, 5}, {4, 6}};
        CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);
    }
    SUBCASE("unequal leaf depth") {
        DeltaMatchedInstance bad = inst;
        bad.children = {{1, 2}, {3, 4}, {}, {}, {}};
        bad.matching = {{3, 4}, {2, 2}};
        CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);
    }
    SUBCASE("arity above delta-1") {
        DeltaMatchedInstance bad = inst;
        bad.children = {{1, 2, 3}, {}, {}, {}};
        bad.matching = {{1, 2}};
        CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);
    }
    SUBCASE("imperfect matching") {
        DeltaMatchedInstance bad = inst;
        bad.matching = {};
        CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);
    }
    SUBCASE("delta below three") {
        DeltaMatchedInstance bad = inst;
        bad.delta = 2;
        CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);
    }
}

TEST_CASE("random instances lay out validly within the queue bound") {
    for (int delta = 3; delta <= 6; ++delta) {
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            int height = 2 + static_cast<int>(seed % 3);
            DeltaMatchedInstance inst = gen_delta_matched(delta, height, seed);
            QueueLayout l = layout_delta_matched(inst);
            INFO("delta " << delta << " seed " << seed);
            CHECK(l.num_queues <= 2 * delta - 2);
            CHECK(validate_layout(instance_to_graph(inst), l).valid);
        }
    }
}

TEST_CASE("label properties hold on random instances") {
    std::mt19937_64 seeds(7);
    for (int trial = 0; trial < 40; ++trial) {
        int delta = 3 + trial % 4;
        int height = 2 + trial % 3;
        DeltaMatchedInstance inst = gen_delta_matched(delta, height, 1000 + trial);
        qt::InstanceLabels lab = qt::instance_labels(inst);
        const TreeShape& s = lab.shape;

        // consecutive leaves along the line differ by at most one
        for (size_t i = 0; i + 1 < s.leaf_order.size(); ++i) {
            BigInt d = lab.mv[s.leaf_order[i]] - lab.mv[s.leaf_order[i + 1]];
            CHECK(d >= -1);
            CHECK(d <= 1);
        }

        // interval property: a subtree's leaf values cover [min, max]
        for (Vertex v = 0; v < inst.num_vertices(); ++v) {
            if (inst.children[v].empty() || s.layer[v] > 3) continue;
            std::vector<long> vals;
            std::vector<Vertex> stack{v};
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                if (inst.children[x].empty())
                    vals.push_back(static_cast<long>(to_u64(lab.mv[x])));
                for (Vertex c : inst.children[x]) stack.push_back(c);
            }
            std::sort(vals.begin(), vals.end());
            for (size_t i = 0; i + 1 < vals.size(); ++i)
                CHECK(vals[i + 1] - vals[i] <= 1);
        }

        // child group window from the label inequalities
        for (Vertex v = 0; v < inst.num_vertices(); ++v)
            for (Vertex c : inst.children[v]) {
                BigInt lo = lab.groups[v] * (delta - 1);
                BigInt hi = (lab.groups[v] + 2) * (delta - 1) - 2;
                CHECK(lab.groups[c] >= lo);
                CHECK(lab.groups[c] <= hi);
            }

        // matching edges have adjacent endpoints in the final order
        QueueLayout l = layout_delta_matched(inst);
        auto pos = l.positions();
        for (auto [a, b] : inst.matching) CHECK(std::abs(pos[a] - pos[b]) == 1);
    }
    (void)seeds;
}
