#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qlayout/bigint.hpp"
#include "qlayout/graph.hpp"
#include "qlayout/layout.hpp"

namespace qlayout {

/// A rooted ordered tree, every vertex with at most delta-1 children and all
/// leaves at equal depth, plus a non-crossing perfect matching on the leaves.
struct DeltaMatchedInstance {
    int delta = 3;
    Vertex root = 0;
    std::vector<std::vector<Vertex>> children;  // ordered left-to-right, per vertex
    std::vector<std::pair<Vertex, Vertex>> matching;

    int num_vertices() const { return static_cast<int>(children.size()); }
};

/// Throws std::invalid_argument unless all instance invariants hold
/// (arity bound, equal leaf depth, perfect non-crossing leaf matching).
void validate_instance(const DeltaMatchedInstance& inst);

/// Shape facts derived from an ordered rooted tree: depths, layers counted
/// from the deepest level up, preorder leaf sequence, per-layer sequences.
struct TreeShape {
    std::vector<Vertex> parent;  // -1 at root
    std::vector<int> depth;
    std::vector<int> layer;  // height - depth
    int height = 0;
    std::vector<Vertex> leaf_order;              // preorder over leaves
    std::vector<int> leaf_pos;                   // -1 for internal vertices
    std::vector<std::vector<Vertex>> layer_seq;  // index 0..height
    std::vector<int> pos_in_layer;
};

TreeShape tree_shape(const std::vector<std::vector<Vertex>>& children, Vertex root);

/// An arc over the anchor line: endpoints at positions lo < hi, with the
/// multiplicity weight of the virtual matching it stands for.
struct LaminarArc {
    int lo = 0;
    int hi = 0;
    BigInt weight = 1;
};

/// Nesting value per arc: the sum of the weights of all arcs strictly
/// containing it (zero for outermost arcs). With unit weights this is the
/// nesting depth. Throws when two arcs interleave or share an anchor.
std::vector<BigInt> nesting_values(const std::vector<LaminarArc>& arcs);

/// Bottom-up matching values: mv(v) = min over the matching/level arc values
/// at v and the matching values of its children. A vertex with neither is an
/// error unless allow_all_tree is set (then every vertex gets zero).
std::vector<BigInt> matching_values(const std::vector<std::vector<Vertex>>& children,
                                    Vertex root, const std::vector<int>& layer,
                                    const std::vector<std::vector<BigInt>>& vertex_sources,
                                    bool allow_all_tree = false);

/// Layer group g(v) = floor(mv(v) / (delta-1)^layer(v)).
std::vector<BigInt> layer_groups(const std::vector<BigInt>& mv, const std::vector<int>& layer,
                                 int delta);

/// The total order: layer ascending, then layer group ascending, then the
/// left-to-right position within the layer.
std::vector<Vertex> linear_order(const std::vector<std::vector<Vertex>>& layer_seq,
                                 const std::vector<BigInt>& groups);

/// Queue per edge: matching/level edges take queue 0; the tree edge from
/// child x to parent y takes queue g(x) - (delta-1)*g(y) + 1. A derived
/// index outside [1, 2*delta-3] signals broken labels and throws.
std::vector<int> assign_queues(const std::vector<Edge>& edges, const std::vector<char>& is_level,
                               const std::vector<Vertex>& parent,
                               const std::vector<BigInt>& groups, int delta);

/// Full layout of a matched-tree instance: at most 2*delta-2 queues.
QueueLayout layout_delta_matched(const DeltaMatchedInstance& inst);

/// Tree + matching edges as a plain graph (tree edges first).
Graph instance_to_graph(const DeltaMatchedInstance& inst);

}  // namespace qlayout
