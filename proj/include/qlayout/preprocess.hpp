#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qlayout/graph.hpp"

namespace qlayout {

enum class VertexOrigin { original, degree1_gadget, root_enabler, binding_split, level_split };

std::string origin_name(VertexOrigin o);
VertexOrigin origin_from_name(const std::string& s);

/// Provenance from the input graph to its prepared subdivision: for every
/// edge of the degree-repaired graph, the ordered vertex path replacing it
/// (2 to 5 vertices), plus the origin of every added vertex.
struct SubdivisionRecord {
    struct EdgePath {
        Edge base;
        std::vector<Vertex> path;
        bool gadget = false;  // base edge added by degree-1 repair, not in G
    };

    int original_n = 0;
    std::vector<VertexOrigin> origin;  // per vertex id of the current graph
    std::vector<EdgePath> paths;

    static SubdivisionRecord for_graph(const Graph& g);

    void add_vertex(VertexOrigin o) { origin.push_back(o); }
    void add_base_edge(Edge e, bool gadget);

    /// Replace the current segment (a,b) by a path through the inserted
    /// vertices (which must already be registered via add_vertex).
    void split_segment(Vertex a, Vertex b, const std::vector<Vertex>& inserted);

    int max_subdivisions() const;
    std::vector<Edge> gadget_edges() const;

private:
    std::unordered_map<std::uint64_t, std::pair<int, int>> seg_;  // segment -> (path, pos)
    void index_segment(Vertex a, Vertex b, int path_idx, int pos);
};

/// Pendant-triangle repair: every degree-1 vertex gains two companions
/// forming a triangle, lifting it to degree 3 without changing the rest.
struct DegreeRepair {
    Graph graph;
    RotationSystem rotation;
    SubdivisionRecord record;
};
DegreeRepair ensure_min_degree_two(const Graph& g, const RotationSystem& rot);

/// Picks the smallest-id degree-2 vertex as root; when none exists the
/// lexicographically smallest edge is subdivided once and the new vertex
/// becomes the root.
struct RootChoice {
    Graph graph;
    RotationSystem rotation;
    Vertex root = -1;
    SubdivisionRecord record;
};
RootChoice choose_root(const Graph& g, const RotationSystem& rot, SubdivisionRecord record);

/// The prepared subdivision: every non-tree edge is a level edge and every
/// level edge has degree-2 endpoints.
struct PreparedGraph {
    Graph graph;
    RotationSystem rotation;
    BfsLayering layering;
    std::vector<char> is_level;  // per edge index; non-level edges belong to T
    SubdivisionRecord record;
    std::optional<Edge> outer_face_hint;

    int num_level_edges() const {
        int c = 0;
        for (char b : is_level) c += b;
        return c;
    }
};

/// Subdivides every non-tree binding edge once and every level edge with a
/// high-degree endpoint twice, keeping the layering consistent. Throws when
/// an edge spans a layer gap of two or more (corrupted layering).
PreparedGraph subdivide_step1(const Graph& g, const RotationSystem& rot, const BfsLayering& L,
                              SubdivisionRecord record);

/// ensure_min_degree_two + choose_root + bfs_layering + subdivide_step1.
/// Requires max degree >= 3 (smaller degrees short-circuit upstream).
PreparedGraph prepare(const Graph& g, const RotationSystem& rot,
                      std::optional<Edge> outer_face = std::nullopt);

}  // namespace qlayout
