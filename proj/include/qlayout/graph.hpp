#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qlayout {

using Vertex = int;

struct Edge {
    Vertex u = -1;
    Vertex v = -1;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a), v(b) {}

    Vertex lo() const { return u < v ? u : v; }
    Vertex hi() const { return u < v ? v : u; }
    Vertex other(Vertex w) const { return w == u ? v : u; }

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.lo() == b.lo() && a.hi() == b.hi();
    }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.lo() != b.lo() ? a.lo() < b.lo() : a.hi() < b.hi();
    }
};

/// Simple undirected graph on dense vertex ids 0..n-1.
/// Self-loops and duplicate edges are rejected at construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const;
    int max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;
    bool connected() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Per-vertex counter-clockwise cyclic order of incident neighbors:
/// the combinatorial form of a planar embedding.
struct RotationSystem {
    std::vector<std::vector<Vertex>> order;

    const std::vector<Vertex>& at(Vertex v) const { return order[v]; }
    int size() const { return static_cast<int>(order.size()); }

    // index of neighbor u in v's rotation; -1 when absent
    int index_of(Vertex v, Vertex u) const;
};

/// Counts faces by tracing the rotation system. For a connected planar
/// embedding the Euler relation gives faces == 2 - n + m.
int count_faces(const Graph& g, const RotationSystem& rot);

/// Fails unless every incident edge appears exactly once per rotation and
/// face tracing satisfies the Euler relation (connected input assumed).
void check_rotation(const Graph& g, const RotationSystem& rot);

/// Face of the embedding containing the directed edge (u,v), returned as
/// the sequence of directed edges traced.
std::vector<std::pair<Vertex, Vertex>> trace_face(const Graph& g, const RotationSystem& rot,
                                                  Vertex u, Vertex v);

/// Neighbors sorted counter-clockwise by angle around each vertex.
/// Coincident neighbor directions are a degeneracy error.
RotationSystem rotation_from_coordinates(const Graph& g,
                                         const std::vector<std::array<double, 2>>& coords);

/// BFS tree + layering. Layers count from the deepest vertices:
/// layer(v) = height - dist(v), so the root sits on the top layer.
struct BfsLayering {
    Vertex root = 0;
    int height = 0;
    std::vector<Vertex> parent;  // -1 for root
    std::vector<int> dist;
    std::vector<int> layer;
    std::vector<char> is_tree_edge;  // per graph edge index

    int layer_of(Vertex v) const { return layer[v]; }
};

/// Deterministic BFS: each vertex explores its neighbors in rotation order
/// starting just after the edge to its parent (the root starts at its
/// rotation's first entry). Throws on disconnected input.
BfsLayering bfs_layering(const Graph& g, Vertex root, const RotationSystem& rot);

}  // namespace qlayout
