#pragma once

// shared fixtures and independent brute-force oracles for the test suites

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "qlayout/collapse.hpp"
#include "qlayout/delta_matched.hpp"
#include "qlayout/graph.hpp"
#include "qlayout/preprocess.hpp"

namespace qlayout::testing {

inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Exhaustive subset oracle: the largest edge subset that is pairwise
// independent and pairwise nesting. Only for small edge counts.
inline int brute_max_rainbow(const std::vector<Vertex>& order, const std::vector<Edge>& edges) {
    int n = 0;
    for (Vertex v : order) n = std::max(n, v + 1);
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    int m = static_cast<int>(edges.size());
    auto nests = [&](int i, int j) {  // edge i strictly nests edge j
        int a1 = std::min(pos[edges[i].u], pos[edges[i].v]);
        int b1 = std::max(pos[edges[i].u], pos[edges[i].v]);
        int a2 = std::min(pos[edges[j].u], pos[edges[j].v]);
        int b2 = std::max(pos[edges[j].u], pos[edges[j].v]);
        return a1 < a2 && b2 < b1;
    };
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> sel;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) sel.push_back(i);
        bool ok = true;
        for (size_t i = 0; i < sel.size() && ok; ++i)
            for (size_t j = i + 1; j < sel.size() && ok; ++j)
                if (!nests(sel[i], sel[j]) && !nests(sel[j], sel[i])) ok = false;
        if (ok) best = std::max(best, static_cast<int>(sel.size()));
    }
    return best;
}

// Exact minimum number of queues for a fixed order: chromatic number of the
// conflict graph whose edges are the nesting pairs, by branch and bound.
inline int brute_min_queues_fixed_order(const std::vector<Vertex>& order,
                                        const std::vector<Edge>& edges) {
    int n = 0;
    for (Vertex v : order) n = std::max(n, v + 1);
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    int m = static_cast<int>(edges.size());
    if (m == 0) return 0;
    std::vector<std::vector<char>> conflict(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            int a1 = std::min(pos[edges[i].u], pos[edges[i].v]);
            int b1 = std::max(pos[edges[i].u], pos[edges[i].v]);
            int a2 = std::min(pos[edges[j].u], pos[edges[j].v]);
            int b2 = std::max(pos[edges[j].u], pos[edges[j].v]);
            if (a1 < a2 && b2 < b1) conflict[i][j] = conflict[j][i] = 1;
        }
    std::vector<int> color(m, -1);
    auto feasible = [&](int k) {
        std::function<bool(int)> rec = [&](int e) {
            if (e == m) return true;
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (int f = 0; f < e; ++f)
                    if (conflict[e][f] && color[f] == c) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    color[e] = c;
                    if (rec(e + 1)) return true;
                    color[e] = -1;
                }
            }
            return false;
        };
        std::fill(color.begin(), color.end(), -1);
        return rec(0);
    };
    for (int k = 1;; ++k)
        if (feasible(k)) return k;
}

inline Graph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (double(rng() >> 11) / double(1ull << 53) < edge_prob) edges.push_back(Edge(u, v));
    return Graph(n, std::move(edges));
}

inline std::vector<Vertex> random_order(int n, std::mt19937_64& rng) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng_below(rng, i + 1)]);
    return order;
}

// Complete binary tree of height 4 (delta = 3) whose matching drives one
// tree edge into the top queue, so the layout needs all four queues.
inline DeltaMatchedInstance four_queue_fixture() {
    DeltaMatchedInstance inst;
    inst.delta = 3;
    inst.root = 0;
    inst.children.assign(31, {});
    for (Vertex v = 0; v < 15; ++v) inst.children[v] = {2 * v + 1, 2 * v + 2};
    // leaves are 15..30 left to right
    auto L = [](int i) { return 14 + i; };  // 1-based leaf position
    inst.matching = {{L(1), L(2)},  {L(3), L(4)},  {L(5), L(14)}, {L(6), L(13)},
                     {L(7), L(12)}, {L(8), L(11)}, {L(9), L(10)}, {L(15), L(16)}};
    return inst;
}

// linear order expected for the fixture above, derived by hand from the
// layer/group/position keys
inline std::vector<Vertex> four_queue_fixture_golden_order() {
    return {15, 16, 17, 18, 19, 28, 29, 30, 20, 27, 21, 26, 22, 25, 23, 24,
            7,  8,  9,  13, 14, 10, 12, 11, 3,  4,  5,  6,  1,  2,  0};
}

struct InstanceLabels {
    TreeShape shape;
    std::vector<BigInt> nv;  // per matching edge
    std::vector<BigInt> mv;
    std::vector<BigInt> groups;
};

inline InstanceLabels instance_labels(const DeltaMatchedInstance& inst) {
    InstanceLabels out;
    out.shape = tree_shape(inst.children, inst.root);
    std::vector<LaminarArc> arcs;
    for (auto [a, b] : inst.matching)
        arcs.push_back({std::min(out.shape.leaf_pos[a], out.shape.leaf_pos[b]),
                        std::max(out.shape.leaf_pos[a], out.shape.leaf_pos[b]), 1});
    out.nv = nesting_values(arcs);
    std::vector<std::vector<BigInt>> sources(inst.num_vertices());
    for (size_t i = 0; i < inst.matching.size(); ++i) {
        sources[inst.matching[i].first].push_back(out.nv[i]);
        sources[inst.matching[i].second].push_back(out.nv[i]);
    }
    out.mv = matching_values(inst.children, inst.root, out.shape.layer, sources);
    out.groups = layer_groups(out.mv, out.shape.layer, inst.delta);
    return out;
}

// tree with an arbitrary (adjacency-order) rotation, prepared directly
inline PreparedGraph prepared_from_tree(const Graph& tree, Vertex root) {
    RotationSystem rot;
    rot.order.assign(tree.num_vertices(), {});
    for (Vertex v = 0; v < tree.num_vertices(); ++v) rot.order[v] = tree.neighbors(v);
    BfsLayering L = bfs_layering(tree, root, rot);
    return subdivide_step1(tree, rot, L, SubdivisionRecord::for_graph(tree));
}

}  // namespace qlayout::testing
