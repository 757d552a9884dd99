#pragma once

#include <map>
#include <string>
#include <vector>

#include "qlayout/bigint.hpp"
#include "qlayout/graph.hpp"

namespace qlayout {

/// A linear vertex order plus an edge -> queue assignment. Valid iff no two
/// independent edges of the same queue nest under the order.
struct QueueLayout {
    std::vector<Vertex> order;
    std::vector<Edge> edges;
    std::vector<int> queue_of;  // parallel to edges
    int num_queues = 0;         // count of distinct queue indices in use

    // reporting metadata (bound name -> value), e.g. the 2*delta-2 guarantee
    // for matched-tree layouts or the subdivision-collapse bounds
    std::map<std::string, BigInt> bounds;

    // optional layer annotation for rendering: layer per vertex id
    std::vector<int> layers;

    // position of each vertex id in order; -1 for ids not present
    std::vector<int> positions() const {
        int n = 0;
        for (Vertex v : order) n = v >= n ? v + 1 : n;
        std::vector<int> pos(n, -1);
        for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
        return pos;
    }

    void recount_queues() {
        std::vector<char> used;
        for (int q : queue_of) {
            if (q >= static_cast<int>(used.size())) used.resize(q + 1, 0);
            used[q] = 1;
        }
        num_queues = 0;
        for (char u : used) num_queues += u;
    }
};

}  // namespace qlayout
