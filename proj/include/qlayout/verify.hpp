#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlayout/graph.hpp"
#include "qlayout/layout.hpp"

namespace qlayout {

struct ValidationReport {
    bool valid = true;
    // a pair of same-queue independent nesting edges, outer first
    std::optional<std::pair<Edge, Edge>> witness;
    int witness_queue = -1;
    std::map<int, int> max_rainbow_per_queue;

    std::string describe() const;
};

/// Checks the rainbow criterion per queue: a layout is valid iff no queue
/// contains two independent nested edges. O(m log m).
ValidationReport validate_layout(const Graph& g, const QueueLayout& layout);

/// Size of the largest set of pairwise independent, pairwise nesting edges
/// under the given order (the largest rainbow).
int max_rainbow(const std::vector<Vertex>& order, const std::vector<Edge>& edges);

/// Brute-force exact queue number: minimum over all vertex orders of the
/// maximum rainbow. Only sensible for tiny graphs.
int exact_queue_number(const Graph& g, int limit_n = 9);

struct KnownValueResult {
    std::string fixture;
    std::string expectation;
    int got = -1;
    bool pass = false;
};

/// Runs the oracle over the built-in fixture set (paths, stars, random trees,
/// cycles, complete graphs, outerplanar fans) and compares against the known
/// queue numbers.
std::vector<KnownValueResult> known_value_suite();

}  // namespace qlayout
