#pragma once

#include <optional>

#include "qlayout/bigint.hpp"
#include "qlayout/concentric.hpp"
#include "qlayout/layout.hpp"
#include "qlayout/preprocess.hpp"

namespace qlayout {

/// 32*(2*delta-1)^6 - 1, the degree-parameterized queue-number guarantee.
/// Callers short-circuit delta <= 2 (queue number one) before this.
BigInt theoretical_bound(int delta);

/// Queue-number bound surviving the collapse of a k-fold subdivision laid
/// out with q1 queues: (2*q1+2)^(2k)/2 - 1, or q1 itself when k = 0.
BigInt lemma1_bound(int q1, int k);

struct BoundReport {
    int delta = 0;
    int q1 = 0;
    int max_subdivisions = 0;
    BigInt lemma1;
    BigInt theorem1;
    int q_final = 0;
    bool within_bound = true;
};

/// Queue layout of the prepared subdivision: level edges in queue 0, tree
/// edges across at most 2*delta-3 further queues, via the weighted labels
/// (the virtual matched-tree expansion is never materialized).
QueueLayout layout_prepared(const PreparedGraph& pg);

struct CollapseResult {
    QueueLayout layout;
    BoundReport report;
};

/// Queue per edge = its depth in the deepest chain of strictly nesting edges
/// under the order. Uses exactly max_rainbow(order, edges) queues, the
/// minimum possible for a fixed order.
std::vector<int> greedy_queue_assignment(const std::vector<Vertex>& order,
                                         const std::vector<Edge>& edges,
                                         int* num_queues = nullptr);

/// Restricts the subdivision layout's order to the original vertices and
/// reassigns queues greedily by nesting depth, which is minimal for the
/// inherited order. Gadget and subdivision vertices are dropped.
CollapseResult collapse_to_original(const Graph& original, const QueueLayout& g1_layout,
                                    const SubdivisionRecord& record, int delta);

struct PipelineResult {
    bool short_circuited = false;  // max degree <= 2: direct one-queue layout
    std::optional<PreparedGraph> prepared;
    QueueLayout g1_layout;
    QueueLayout layout;
    BoundReport report;
};

/// Full pipeline on a connected embedded planar graph.
PipelineResult run_pipeline(const Graph& g, const RotationSystem& rot,
                            std::optional<Edge> outer_face = std::nullopt);

/// One-queue layout for connected graphs of maximum degree at most two
/// (paths, cycles, trivial graphs).
QueueLayout trivial_layout_max_degree_two(const Graph& g);

}  // namespace qlayout
