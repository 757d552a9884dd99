#include "qlayout/concentric.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlayout {

namespace {

// Corner of the root on the face containing the hint edge, if any.
int cut_corner_from_hint(const PreparedGraph& pg) {
    if (!pg.outer_face_hint) return 0;
    Edge e = *pg.outer_face_hint;
    const Graph& g = pg.graph;
    if (e.u < 0 || e.u >= g.num_vertices() || e.v < 0 || e.v >= g.num_vertices()) return 0;
    if (!g.has_edge(e.u, e.v)) return 0;  // the hinted edge may have been subdivided away
    Vertex r = pg.layering.root;
    for (auto [a, b] : trace_face(g, pg.rotation, e.u, e.v))
        if (a == r) return pg.rotation.index_of(r, b);
    return 0;
}

}  // namespace

ConcentricOrder build_concentric_order(const PreparedGraph& pg) {
    const Graph& g = pg.graph;
    const BfsLayering& L = pg.layering;
    int n = g.num_vertices();
    Vertex root = L.root;

    int cut = 0;
    if (!pg.rotation.order[root].empty())
        cut = cut_corner_from_hint(pg) % static_cast<int>(pg.rotation.order[root].size());

    // tree children in rotation order: after the parent edge for ordinary
    // vertices, from the cut corner for the root
    std::vector<std::vector<Vertex>> children(n);
    for (Vertex v = 0; v < n; ++v) {
        const auto& r = pg.rotation.order[v];
        int d = static_cast<int>(r.size());
        if (d == 0) continue;
        int start;
        if (v == root) {
            start = cut;
        } else {
            start = pg.rotation.index_of(v, L.parent[v]);
            if (start < 0) throw std::logic_error("concentric: parent missing from rotation");
            start = (start + 1) % d;
        }
        for (int i = 0; i < d; ++i) {
            Vertex w = r[(start + i) % d];
            if (w != L.parent[v] && L.parent[w] == v) children[v].push_back(w);
        }
    }

    TreeShape s = tree_shape(children, root);
    if (s.height != L.height)
        throw std::logic_error("concentric: tree height disagrees with the layering");
    for (Vertex v = 0; v < n; ++v)
        if (s.layer[v] != L.layer[v])
            throw std::logic_error("concentric: embedding/layering mismatch at vertex " +
                                   std::to_string(v));

    ConcentricOrder co;
    co.layer_seq = std::move(s.layer_seq);
    co.pos_in_layer = std::move(s.pos_in_layer);
    co.leaf_order = std::move(s.leaf_order);
    co.leaf_pos = std::move(s.leaf_pos);
    co.cut_corner = cut;

    // planarity consistency: along any layer, parents appear in the same
    // relative order as their children
    for (const auto& seq : co.layer_seq) {
        int prev = -1;
        for (Vertex v : seq) {
            if (v == root) continue;
            int p = co.pos_in_layer[L.parent[v]];
            if (p < prev)
                throw std::logic_error("concentric: crossing tree edges between layers");
            prev = p;
        }
    }
    return co;
}

OuterRouteOrder build_outer_routes(const PreparedGraph& pg, const ConcentricOrder& co,
                                   int delta) {
    const Graph& g = pg.graph;
    OuterRouteOrder out;
    out.anchor_count = static_cast<int>(co.leaf_order.size());

    int maxl = pg.layering.height;
    std::vector<BigInt> pw(maxl + 1);
    for (int l = 0; l <= maxl; ++l) pw[l] = bigint_pow(delta - 1, l);

    for (int i = 0; i < g.num_edges(); ++i) {
        if (!pg.is_level[i]) continue;
        const Edge& e = g.edge(i);
        int a = co.leaf_pos[e.u], b = co.leaf_pos[e.v];
        if (a < 0 || b < 0)
            throw std::logic_error("outer routes: level edge endpoint is not a tree leaf");
        if (pg.layering.layer[e.u] != pg.layering.layer[e.v])
            throw std::logic_error("outer routes: level edge spans two layers");
        OuterRoute r;
        r.edge_index = i;
        r.lo = std::min(a, b);
        r.hi = std::max(a, b);
        r.layer = pg.layering.layer[e.u];
        r.weight = pw[r.layer];
        out.routes.push_back(r);
    }
    nesting_values(out.arcs());  // laminarity check; interleaving anchors throw
    return out;
}

}  // namespace qlayout
