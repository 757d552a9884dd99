#include "qlayout/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qlayout {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    std::set<std::pair<Vertex, Vertex>> seen;
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
        if (!seen.insert({e.lo(), e.hi()}).second)
            throw std::invalid_argument("graph: duplicate edge");
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
}

int Graph::degree(Vertex v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("degree: unknown vertex id");
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, static_cast<int>(adj_[v].size()));
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex t = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), t) != a.end();
}

bool Graph::connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push(w);
            }
    }
    return cnt == n_;
}

int RotationSystem::index_of(Vertex v, Vertex u) const {
    const auto& r = order[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == u) return i;
    return -1;
}

namespace {

// key for a directed edge
inline std::uint64_t dkey(Vertex u, Vertex v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

// Successor map for face tracing: after arriving at v along (u,v), the trace
// leaves along the edge preceding u in v's rotation.
std::unordered_map<std::uint64_t, std::pair<Vertex, Vertex>> face_successors(
    const Graph& g, const RotationSystem& rot) {
    std::unordered_map<std::uint64_t, std::pair<Vertex, Vertex>> next;
    next.reserve(static_cast<size_t>(g.num_edges()) * 2);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto& r = rot.order[v];
        int d = static_cast<int>(r.size());
        for (int i = 0; i < d; ++i) {
            Vertex u = r[i];
            Vertex w = r[(i + d - 1) % d];
            next[dkey(u, v)] = {v, w};
        }
    }
    return next;
}

}  // namespace

int count_faces(const Graph& g, const RotationSystem& rot) {
    auto next = face_successors(g, rot);
    std::unordered_set<std::uint64_t> used;
    used.reserve(next.size());
    int faces = 0;
    for (const auto& [k, unused] : next) {
        (void)unused;
        if (used.count(k)) continue;
        ++faces;
        std::uint64_t cur = k;
        while (used.insert(cur).second) {
            auto [v, w] = next.at(cur);
            cur = dkey(v, w);
        }
    }
    return faces;
}

void check_rotation(const Graph& g, const RotationSystem& rot) {
    if (rot.size() != g.num_vertices())
        throw std::invalid_argument("rotation: wrong vertex count");
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (static_cast<int>(rot.order[v].size()) != g.degree(v))
            throw std::invalid_argument("rotation: degree mismatch at vertex " +
                                        std::to_string(v));
        std::unordered_set<Vertex> seen;
        for (Vertex u : rot.order[v]) {
            if (!g.has_edge(v, u))
                throw std::invalid_argument("rotation: non-incident neighbor at vertex " +
                                            std::to_string(v));
            if (!seen.insert(u).second)
                throw std::invalid_argument("rotation: repeated neighbor at vertex " +
                                            std::to_string(v));
        }
    }
    int f = count_faces(g, rot);
    int expect = 2 - g.num_vertices() + g.num_edges();
    if (f != expect)
        throw std::invalid_argument("rotation: face count " + std::to_string(f) +
                                    " violates Euler relation (expected " +
                                    std::to_string(expect) + ")");
}

std::vector<std::pair<Vertex, Vertex>> trace_face(const Graph& g, const RotationSystem& rot,
                                                  Vertex u, Vertex v) {
    auto next = face_successors(g, rot);
    std::vector<std::pair<Vertex, Vertex>> out;
    std::uint64_t start = dkey(u, v);
    if (!next.count(start)) throw std::invalid_argument("trace_face: unknown directed edge");
    std::uint64_t cur = start;
    Vertex a = u, b = v;
    do {
        out.push_back({a, b});
        auto [x, y] = next.at(cur);
        a = x;
        b = y;
        cur = dkey(a, b);
    } while (cur != start);
    return out;
}

RotationSystem rotation_from_coordinates(const Graph& g,
                                         const std::vector<std::array<double, 2>>& coords) {
    if (static_cast<int>(coords.size()) != g.num_vertices())
        throw std::invalid_argument("coords: wrong vertex count");
    RotationSystem rot;
    rot.order.assign(g.num_vertices(), {});
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::pair<double, Vertex>> ang;
        for (Vertex u : g.neighbors(v)) {
            double dx = coords[u][0] - coords[v][0];
            double dy = coords[u][1] - coords[v][1];
            if (dx == 0.0 && dy == 0.0)
                throw std::invalid_argument("coords: coincident endpoints");
            ang.push_back({std::atan2(dy, dx), u});
        }
        std::sort(ang.begin(), ang.end());
        for (size_t i = 1; i < ang.size(); ++i)
            if (ang[i].first == ang[i - 1].first)
                throw std::invalid_argument("coords: coincident neighbor angles at vertex " +
                                            std::to_string(v));
        for (auto& [a, u] : ang) {
            (void)a;
            rot.order[v].push_back(u);
        }
    }
    return rot;
}

BfsLayering bfs_layering(const Graph& g, Vertex root, const RotationSystem& rot) {
    int n = g.num_vertices();
    if (root < 0 || root >= n) throw std::invalid_argument("bfs: unknown root");
    BfsLayering L;
    L.root = root;
    L.parent.assign(n, -1);
    L.dist.assign(n, -1);
    L.dist[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    int reached = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        const auto& r = rot.order[v];
        int d = static_cast<int>(r.size());
        int start = 0;
        if (v != root) {
            start = rot.index_of(v, L.parent[v]);
            if (start < 0) throw std::logic_error("bfs: parent missing from rotation");
            start = (start + 1) % d;
        }
        for (int i = 0; i < d; ++i) {
            Vertex w = r[(start + i) % d];
            if (L.dist[w] < 0) {
                L.dist[w] = L.dist[v] + 1;
                L.parent[w] = v;
                ++reached;
                q.push(w);
            }
        }
    }
    if (reached != n) throw std::invalid_argument("bfs: graph is disconnected");
    L.height = *std::max_element(L.dist.begin(), L.dist.end());
    L.layer.resize(n);
    for (Vertex v = 0; v < n; ++v) L.layer[v] = L.height - L.dist[v];
    L.is_tree_edge.assign(g.num_edges(), 0);
    for (int i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        if (L.parent[e.u] == e.v || L.parent[e.v] == e.u) L.is_tree_edge[i] = 1;
    }
    return L;
}

}  // namespace qlayout
