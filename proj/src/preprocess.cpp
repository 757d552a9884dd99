#include "qlayout/preprocess.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace qlayout {

namespace {

inline std::uint64_t skey(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

void replace_neighbor(RotationSystem& rot, Vertex at, Vertex old_nb, Vertex new_nb) {
    int i = rot.index_of(at, old_nb);
    if (i < 0) throw std::logic_error("rotation replace: neighbor missing");
    rot.order[at][i] = new_nb;
}

}  // namespace

std::string origin_name(VertexOrigin o) {
    switch (o) {
        case VertexOrigin::original: return "original";
        case VertexOrigin::degree1_gadget: return "degree1-gadget";
        case VertexOrigin::root_enabler: return "root-enabler";
        case VertexOrigin::binding_split: return "binding-split";
        case VertexOrigin::level_split: return "level-split";
    }
    return "?";
}

VertexOrigin origin_from_name(const std::string& s) {
    if (s == "original") return VertexOrigin::original;
    if (s == "degree1-gadget") return VertexOrigin::degree1_gadget;
    if (s == "root-enabler") return VertexOrigin::root_enabler;
    if (s == "binding-split") return VertexOrigin::binding_split;
    if (s == "level-split") return VertexOrigin::level_split;
    throw std::invalid_argument("unknown vertex origin: " + s);
}

SubdivisionRecord SubdivisionRecord::for_graph(const Graph& g) {
    SubdivisionRecord r;
    r.original_n = g.num_vertices();
    r.origin.assign(g.num_vertices(), VertexOrigin::original);
    for (const Edge& e : g.edges()) r.add_base_edge(e, false);
    return r;
}

void SubdivisionRecord::add_base_edge(Edge e, bool gadget) {
    int idx = static_cast<int>(paths.size());
    paths.push_back({e, {e.u, e.v}, gadget});
    index_segment(e.u, e.v, idx, 0);
}

void SubdivisionRecord::index_segment(Vertex a, Vertex b, int path_idx, int pos) {
    seg_[skey(a, b)] = {path_idx, pos};
}

void SubdivisionRecord::split_segment(Vertex a, Vertex b, const std::vector<Vertex>& inserted) {
    auto it = seg_.find(skey(a, b));
    if (it == seg_.end()) throw std::logic_error("split_segment: unknown segment");
    auto [pi, pos] = it->second;
    seg_.erase(it);
    auto& path = paths[pi].path;
    // orient the inserted run to match the stored path direction
    std::vector<Vertex> run = inserted;
    if (path[pos] == b && path[pos + 1] == a)
        std::reverse(run.begin(), run.end());
    else if (!(path[pos] == a && path[pos + 1] == b))
        throw std::logic_error("split_segment: stale segment index");
    path.insert(path.begin() + pos + 1, run.begin(), run.end());
    // re-index every segment from pos onward (paths stay tiny)
    for (int i = pos; i + 1 < static_cast<int>(path.size()); ++i) {
        auto jt = seg_.find(skey(path[i], path[i + 1]));
        if (jt != seg_.end())
            jt->second = {pi, i};
        else
            index_segment(path[i], path[i + 1], pi, i);
    }
}

int SubdivisionRecord::max_subdivisions() const {
    int k = 0;
    for (const EdgePath& p : paths) k = std::max(k, static_cast<int>(p.path.size()) - 2);
    return k;
}

std::vector<Edge> SubdivisionRecord::gadget_edges() const {
    std::vector<Edge> out;
    for (const EdgePath& p : paths)
        if (p.gadget) out.push_back(p.base);
    return out;
}

DegreeRepair ensure_min_degree_two(const Graph& g, const RotationSystem& rot) {
    SubdivisionRecord record = SubdivisionRecord::for_graph(g);
    std::vector<Edge> edges = g.edges();
    RotationSystem r = rot;
    int n = g.num_vertices();
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != 1) continue;
        Vertex w = g.neighbors(v)[0];
        Vertex v1 = n++, v2 = n++;
        record.add_vertex(VertexOrigin::degree1_gadget);
        record.add_vertex(VertexOrigin::degree1_gadget);
        edges.push_back(Edge(v, v1));
        edges.push_back(Edge(v, v2));
        edges.push_back(Edge(v1, v2));
        record.add_base_edge(Edge(v, v1), true);
        record.add_base_edge(Edge(v, v2), true);
        record.add_base_edge(Edge(v1, v2), true);
        // triangle embedded in the face corner next to the lone edge
        r.order[v] = {w, v1, v2};
        r.order.push_back({v, v2});
        r.order.push_back({v, v1});
    }
    return {Graph(n, std::move(edges)), std::move(r), std::move(record)};
}

RootChoice choose_root(const Graph& g, const RotationSystem& rot, SubdivisionRecord record) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 2) return {g, rot, v, std::move(record)};
    if (g.num_edges() == 0) throw std::invalid_argument("choose_root: graph has no edges");
    Edge e = *std::min_element(g.edges().begin(), g.edges().end());
    Vertex u = e.lo(), v = e.hi();
    Vertex w = g.num_vertices();
    record.add_vertex(VertexOrigin::root_enabler);
    std::vector<Edge> edges;
    for (const Edge& f : g.edges())
        if (!(f == e)) edges.push_back(f);
    edges.push_back(Edge(u, w));
    edges.push_back(Edge(w, v));
    RotationSystem r = rot;
    replace_neighbor(r, u, v, w);
    replace_neighbor(r, v, u, w);
    r.order.push_back({u, v});
    record.split_segment(u, v, {w});
    return {Graph(g.num_vertices() + 1, std::move(edges)), std::move(r), w, std::move(record)};
}

PreparedGraph subdivide_step1(const Graph& g, const RotationSystem& rot, const BfsLayering& L,
                              SubdivisionRecord record) {
    RotationSystem r = rot;
    std::vector<Vertex> parent = L.parent;
    std::vector<int> dist = L.dist;
    int n = g.num_vertices();

    auto new_vertex = [&](Vertex par, VertexOrigin o) {
        parent.push_back(par);
        dist.push_back(dist[par] + 1);
        record.add_vertex(o);
        return n++;
    };

    std::vector<std::pair<Vertex, Vertex>> level_pairs;
    std::vector<std::pair<Vertex, Vertex>> binding_nontree;
    for (int i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        if (L.is_tree_edge[i]) continue;
        int gap = std::abs(L.dist[e.u] - L.dist[e.v]);
        if (gap >= 2)
            throw std::invalid_argument("subdivide: edge spans a layer gap of " +
                                        std::to_string(gap) + "; layering is corrupted");
        if (gap == 1)
            binding_nontree.push_back({e.u, e.v});
        else
            level_pairs.push_back({e.u, e.v});
    }

    // non-tree binding edges: one split; the vertex hangs off the endpoint
    // nearer the root and the residual edge becomes level
    for (auto [u, v] : binding_nontree) {
        Vertex p = dist[u] < dist[v] ? u : v;
        Vertex q = p == u ? v : u;
        Vertex w = new_vertex(p, VertexOrigin::binding_split);
        r.order.push_back({p, q});
        replace_neighbor(r, p, q, w);
        replace_neighbor(r, q, p, w);
        record.split_segment(p, q, {w});
        level_pairs.push_back({w, q});
    }

    // level edges with a high-degree endpoint: two splits; the middle edge is
    // a level edge one layer deeper with degree-2 endpoints
    for (auto [a, b] : level_pairs) {
        if (r.order[a].size() <= 2 && r.order[b].size() <= 2) continue;
        Vertex a2 = new_vertex(a, VertexOrigin::level_split);
        r.order.push_back({a});
        Vertex b2 = new_vertex(b, VertexOrigin::level_split);
        r.order.push_back({b});
        r.order[a2].push_back(b2);
        r.order[b2].insert(r.order[b2].begin(), a2);
        replace_neighbor(r, a, b, a2);
        replace_neighbor(r, b, a, b2);
        record.split_segment(a, b, {a2, b2});
    }

    // rebuild the graph and the layering over the final vertex set
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : r.order[v])
            if (v < w) edges.push_back(Edge(v, w));
    Graph g1(n, std::move(edges));

    BfsLayering L1;
    L1.root = L.root;
    L1.parent = std::move(parent);
    L1.dist = std::move(dist);
    L1.height = *std::max_element(L1.dist.begin(), L1.dist.end());
    L1.layer.resize(n);
    for (Vertex v = 0; v < n; ++v) L1.layer[v] = L1.height - L1.dist[v];
    L1.is_tree_edge.assign(g1.num_edges(), 0);
    std::vector<char> is_level(g1.num_edges(), 0);
    for (int i = 0; i < g1.num_edges(); ++i) {
        const Edge& e = g1.edge(i);
        if (L1.parent[e.u] == e.v || L1.parent[e.v] == e.u) {
            L1.is_tree_edge[i] = 1;
        } else {
            if (L1.dist[e.u] != L1.dist[e.v])
                throw std::logic_error("subdivide: non-tree edge is not level after step 1");
            is_level[i] = 1;
        }
    }

    PreparedGraph pg;
    pg.graph = std::move(g1);
    pg.rotation = std::move(r);
    pg.layering = std::move(L1);
    pg.is_level = std::move(is_level);
    pg.record = std::move(record);
    return pg;
}

PreparedGraph prepare(const Graph& g, const RotationSystem& rot, std::optional<Edge> outer_face) {
    if (!g.connected()) throw std::invalid_argument("prepare: graph must be connected");
    if (g.max_degree() < 3)
        throw std::invalid_argument("prepare: max degree below 3 short-circuits upstream");
    check_rotation(g, rot);
    DegreeRepair dr = ensure_min_degree_two(g, rot);
    RootChoice rc = choose_root(dr.graph, dr.rotation, std::move(dr.record));
    BfsLayering L = bfs_layering(rc.graph, rc.root, rc.rotation);
    PreparedGraph pg = subdivide_step1(rc.graph, rc.rotation, L, std::move(rc.record));
    pg.outer_face_hint = outer_face;
    return pg;
}

}  // namespace qlayout
