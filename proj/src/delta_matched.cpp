#include "qlayout/delta_matched.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qlayout {

TreeShape tree_shape(const std::vector<std::vector<Vertex>>& children, Vertex root) {
    int n = static_cast<int>(children.size());
    TreeShape s;
    s.parent.assign(n, -1);
    s.depth.assign(n, -1);
    s.depth[root] = 0;

    // depths first (iterative; trees can be path-deep)
    std::vector<Vertex> stack{root};
    int visited = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++visited;
        for (Vertex c : children[v]) {
            if (c < 0 || c >= n) throw std::invalid_argument("tree: child id out of range");
            if (s.depth[c] >= 0) throw std::invalid_argument("tree: vertex has two parents");
            s.parent[c] = v;
            s.depth[c] = s.depth[v] + 1;
            stack.push_back(c);
        }
    }
    if (visited != n) throw std::invalid_argument("tree: not all vertices reachable from root");
    s.height = *std::max_element(s.depth.begin(), s.depth.end());
    s.layer.resize(n);
    for (Vertex v = 0; v < n; ++v) s.layer[v] = s.height - s.depth[v];

    s.layer_seq.assign(s.height + 1, {});
    s.leaf_pos.assign(n, -1);
    s.pos_in_layer.assign(n, -1);

    // preorder: children left-to-right; per-layer sequences and the leaf
    // sequence both inherit this order
    std::vector<std::pair<Vertex, size_t>> st;
    st.push_back({root, 0});
    s.pos_in_layer[root] = 0;
    s.layer_seq[s.layer[root]].push_back(root);
    if (children[root].empty()) {
        s.leaf_pos[root] = 0;
        s.leaf_order.push_back(root);
    }
    while (!st.empty()) {
        auto& [v, i] = st.back();
        if (i == children[v].size()) {
            st.pop_back();
            continue;
        }
        Vertex c = children[v][i];
        ++i;
        s.pos_in_layer[c] = static_cast<int>(s.layer_seq[s.layer[c]].size());
        s.layer_seq[s.layer[c]].push_back(c);
        if (children[c].empty()) {
            s.leaf_pos[c] = static_cast<int>(s.leaf_order.size());
            s.leaf_order.push_back(c);
        }
        st.push_back({c, 0});
    }
    return s;
}

std::vector<BigInt> nesting_values(const std::vector<LaminarArc>& arcs) {
    int m = static_cast<int>(arcs.size());
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return arcs[a].lo != arcs[b].lo ? arcs[a].lo < arcs[b].lo : arcs[a].hi > arcs[b].hi;
    });
    // anchors must be pairwise distinct: each anchor carries one arc end
    {
        std::vector<int> ends;
        ends.reserve(2 * m);
        for (const LaminarArc& a : arcs) {
            if (a.lo >= a.hi) throw std::invalid_argument("nesting: degenerate arc");
            ends.push_back(a.lo);
            ends.push_back(a.hi);
        }
        std::sort(ends.begin(), ends.end());
        if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
            throw std::invalid_argument("nesting: arcs share an anchor");
    }
    std::vector<BigInt> nv(m);
    std::vector<std::pair<int, BigInt>> open;  // (hi, value accumulated below)
    for (int i : idx) {
        while (!open.empty() && open.back().first < arcs[i].lo) open.pop_back();
        if (!open.empty()) {
            if (open.back().first < arcs[i].hi)
                throw std::invalid_argument("nesting: arcs interleave (family not laminar)");
            nv[i] = open.back().second;
        }
        open.push_back({arcs[i].hi, nv[i] + arcs[i].weight});
    }
    return nv;
}

std::vector<BigInt> matching_values(const std::vector<std::vector<Vertex>>& children,
                                    Vertex root, const std::vector<int>& layer,
                                    const std::vector<std::vector<BigInt>>& vertex_sources,
                                    bool allow_all_tree) {
    int n = static_cast<int>(children.size());
    std::vector<BigInt> mv(n);
    if (allow_all_tree) return mv;  // no matching/level structure: all zero

    // process layers bottom-up; children sit exactly one layer below parents
    std::vector<Vertex> by_layer(n);
    std::iota(by_layer.begin(), by_layer.end(), 0);
    std::sort(by_layer.begin(), by_layer.end(),
              [&](Vertex a, Vertex b) { return layer[a] < layer[b]; });
    std::vector<char> has(n, 0);
    for (Vertex v : by_layer) {
        bool any = false;
        BigInt best;
        for (const BigInt& s : vertex_sources[v]) {
            if (!any || s < best) best = s;
            any = true;
        }
        for (Vertex c : children[v]) {
            if (!has[c]) throw std::logic_error("matching_values: child not yet labeled");
            if (!any || mv[c] < best) best = mv[c];
            any = true;
        }
        if (!any)
            throw std::invalid_argument(
                "matching_values: vertex " + std::to_string(v) +
                " has neither children nor a matching/level edge");
        mv[v] = best;
        has[v] = 1;
    }
    (void)root;
    return mv;
}

std::vector<BigInt> layer_groups(const std::vector<BigInt>& mv, const std::vector<int>& layer,
                                 int delta) {
    int n = static_cast<int>(mv.size());
    int maxl = 0;
    for (int l : layer) maxl = std::max(maxl, l);
    std::vector<BigInt> pw(maxl + 1);
    for (int l = 0; l <= maxl; ++l) pw[l] = bigint_pow(delta - 1, l);
    std::vector<BigInt> g(n);
    for (int v = 0; v < n; ++v) g[v] = floor_div(mv[v], pw[layer[v]]);
    return g;
}

std::vector<Vertex> linear_order(const std::vector<std::vector<Vertex>>& layer_seq,
                                 const std::vector<BigInt>& groups) {
    std::vector<Vertex> order;
    for (const auto& seq : layer_seq) {
        std::vector<Vertex> s = seq;
        std::stable_sort(s.begin(), s.end(),
                         [&](Vertex a, Vertex b) { return groups[a] < groups[b]; });
        order.insert(order.end(), s.begin(), s.end());
    }
    return order;
}

std::vector<int> assign_queues(const std::vector<Edge>& edges, const std::vector<char>& is_level,
                               const std::vector<Vertex>& parent,
                               const std::vector<BigInt>& groups, int delta) {
    std::vector<int> q(edges.size(), 0);
    for (size_t i = 0; i < edges.size(); ++i) {
        if (is_level[i]) continue;
        const Edge& e = edges[i];
        Vertex child, par;
        if (parent[e.u] == e.v) {
            child = e.u;
            par = e.v;
        } else if (parent[e.v] == e.u) {
            child = e.v;
            par = e.u;
        } else {
            throw std::invalid_argument("assign_queues: non-level edge is not a tree edge");
        }
        BigInt k = groups[child] - BigInt(delta - 1) * groups[par];
        if (k < 0 || k > 2 * delta - 4)
            throw std::logic_error("assign_queues: group offset " + to_string(k) +
                                   " outside [0," + std::to_string(2 * delta - 4) +
                                   "]; labels are inconsistent");
        q[i] = static_cast<int>(to_u64(k)) + 1;
    }
    return q;
}

void validate_instance(const DeltaMatchedInstance& inst) {
    if (inst.delta < 3) throw std::invalid_argument("instance: delta must be at least 3");
    int n = inst.num_vertices();
    if (n < 1) throw std::invalid_argument("instance: empty tree");
    if (inst.root < 0 || inst.root >= n) throw std::invalid_argument("instance: bad root");
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<int>(inst.children[v].size()) > inst.delta - 1)
            throw std::invalid_argument("instance: vertex " + std::to_string(v) +
                                        " exceeds delta-1 children");
    TreeShape s = tree_shape(inst.children, inst.root);
    if (s.height < 1) throw std::invalid_argument("instance: tree has no leaves below the root");
    for (Vertex v : s.leaf_order)
        if (s.depth[v] != s.height)
            throw std::invalid_argument("instance: leaves not all at equal depth");

    std::vector<char> matched(n, 0);
    std::vector<LaminarArc> arcs;
    for (auto [a, b] : inst.matching) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b)
            throw std::invalid_argument("instance: bad matching pair");
        if (s.leaf_pos[a] < 0 || s.leaf_pos[b] < 0)
            throw std::invalid_argument("instance: matching touches an internal vertex");
        if (matched[a] || matched[b])
            throw std::invalid_argument("instance: leaf matched twice");
        matched[a] = matched[b] = 1;
        arcs.push_back({std::min(s.leaf_pos[a], s.leaf_pos[b]),
                        std::max(s.leaf_pos[a], s.leaf_pos[b]), 1});
    }
    for (Vertex v : s.leaf_order)
        if (!matched[v])
            throw std::invalid_argument("instance: matching is not perfect on the leaves");
    nesting_values(arcs);  // throws when the matching crosses
}

QueueLayout layout_delta_matched(const DeltaMatchedInstance& inst) {
    validate_instance(inst);
    TreeShape s = tree_shape(inst.children, inst.root);
    int n = inst.num_vertices();

    std::vector<LaminarArc> arcs;
    arcs.reserve(inst.matching.size());
    for (auto [a, b] : inst.matching)
        arcs.push_back({std::min(s.leaf_pos[a], s.leaf_pos[b]),
                        std::max(s.leaf_pos[a], s.leaf_pos[b]), 1});
    std::vector<BigInt> nv = nesting_values(arcs);

    std::vector<std::vector<BigInt>> sources(n);
    for (size_t i = 0; i < inst.matching.size(); ++i) {
        sources[inst.matching[i].first].push_back(nv[i]);
        sources[inst.matching[i].second].push_back(nv[i]);
    }
    std::vector<BigInt> mv = matching_values(inst.children, inst.root, s.layer, sources);
    std::vector<BigInt> g = layer_groups(mv, s.layer, inst.delta);

    QueueLayout out;
    out.order = linear_order(s.layer_seq, g);
    std::vector<char> is_level;
    for (Vertex v = 0; v < n; ++v)
        if (v != inst.root) {
            out.edges.push_back(Edge(s.parent[v], v));
            is_level.push_back(0);
        }
    for (auto [a, b] : inst.matching) {
        out.edges.push_back(Edge(a, b));
        is_level.push_back(1);
    }
    out.queue_of = assign_queues(out.edges, is_level, s.parent, g, inst.delta);
    out.recount_queues();
    out.bounds["delta_matched"] = BigInt(2 * inst.delta - 2);
    out.layers = s.layer;
    return out;
}

Graph instance_to_graph(const DeltaMatchedInstance& inst) {
    TreeShape s = tree_shape(inst.children, inst.root);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < inst.num_vertices(); ++v)
        if (v != inst.root) edges.push_back(Edge(s.parent[v], v));
    for (auto [a, b] : inst.matching) edges.push_back(Edge(a, b));
    return Graph(inst.num_vertices(), edges);
}

}  // namespace qlayout
