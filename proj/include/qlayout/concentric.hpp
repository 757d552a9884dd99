#pragma once

#include <vector>

#include "qlayout/bigint.hpp"
#include "qlayout/delta_matched.hpp"
#include "qlayout/preprocess.hpp"

namespace qlayout {

/// Left-to-right order of the vertices on every layer of the cut
/// representation, plus the contour (preorder) order of the tree leaves.
/// Layer index height holds just the root.
struct ConcentricOrder {
    std::vector<std::vector<Vertex>> layer_seq;
    std::vector<int> pos_in_layer;
    std::vector<Vertex> leaf_order;
    std::vector<int> leaf_pos;  // -1 for internal vertices
    int cut_corner = 0;         // index into the root rotation where children start
};

/// Traverses the BFS tree in embedding order (children in rotation order
/// after the parent edge; the root starts at the cut corner). The outer-face
/// hint, when it names an edge on a face incident to the root, fixes the cut
/// corner; otherwise the corner before the root's first rotation entry is
/// used. Throws when the result violates planarity consistency.
ConcentricOrder build_concentric_order(const PreparedGraph& pg);

/// One rerouted level edge: both endpoints are tree leaves whose contour
/// positions bound its interval on the extended outer line; the weight is
/// (delta-1)^layer, the size of the virtual matching it stands for.
struct OuterRoute {
    int edge_index = -1;
    int lo = 0, hi = 0;
    int layer = 0;
    BigInt weight;
};

struct OuterRouteOrder {
    std::vector<OuterRoute> routes;
    int anchor_count = 0;

    std::vector<LaminarArc> arcs() const {
        std::vector<LaminarArc> a;
        a.reserve(routes.size());
        for (const OuterRoute& r : routes) a.push_back({r.lo, r.hi, r.weight});
        return a;
    }
};

/// Routes every level edge outside the outermost layer. Nesting of two
/// routes follows containment of their leaf-position intervals; the family
/// is laminar for any planar input (checked, interleaving throws).
OuterRouteOrder build_outer_routes(const PreparedGraph& pg, const ConcentricOrder& co, int delta);

}  // namespace qlayout
