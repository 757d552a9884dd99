#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qlayout/delta_matched.hpp"
#include "qlayout/graph.hpp"

namespace qlayout {

/// A graph together with its combinatorial embedding. Generators for planar
/// families always fill the rotation; complete graphs beyond K4 cannot.
struct EmbeddedGraph {
    Graph graph;
    std::optional<RotationSystem> rotation;
};

EmbeddedGraph gen_grid(int rows, int cols);
EmbeddedGraph gen_prism(int n);                     // circular ladder on 2n vertices
EmbeddedGraph gen_tree(int arity, int height);      // complete rooted tree
EmbeddedGraph gen_stacked(int n, std::uint64_t seed);  // random planar 3-tree
EmbeddedGraph gen_fan(int n);                       // outerplanar fan, n total vertices
EmbeddedGraph gen_complete(int n);
EmbeddedGraph gen_octahedron();
EmbeddedGraph gen_path_chord(int n);  // path v0..v(n-1) plus the chord (v0,v2)

// small abstract fixtures for the brute-force oracle
Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_star(int leaves);
Graph gen_random_tree(int n, std::uint64_t seed);

/// Complete (delta-1)-ary tree of the given height (one leaf dropped when the
/// leaf count is odd) with a seeded random non-crossing perfect matching
/// sampled from a balanced-parenthesis walk.
DeltaMatchedInstance gen_delta_matched(int delta, int height, std::uint64_t seed);

struct GeneratorSpec {
    std::string family;  // grid|prism|tree|stacked|fan|complete|delta-matched
    int rows = 0, cols = 0;
    int n = 0;
    int arity = 0, height = 0;
    int delta = 0;
    std::uint64_t seed = 0;
};

struct Generated {
    std::optional<EmbeddedGraph> graph;
    std::optional<DeltaMatchedInstance> instance;
};

/// Dispatch on spec.family; throws std::invalid_argument on bad parameters.
Generated generate(const GeneratorSpec& spec);

}  // namespace qlayout
