#include "qlayout/collapse.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qlayout {

BigInt theoretical_bound(int delta) {
    if (delta < 3) throw std::invalid_argument("theoretical_bound: delta must be at least 3");
    BigInt b = 2 * delta - 1;
    return 32 * b * b * b * b * b * b - 1;
}

BigInt lemma1_bound(int q1, int k) {
    if (k < 0) throw std::invalid_argument("lemma1_bound: negative subdivision count");
    if (k == 0) return BigInt(q1);
    BigInt base = 2 * q1 + 2;
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), 2 * static_cast<unsigned long>(k));
    return p / 2 - 1;
}

QueueLayout layout_prepared(const PreparedGraph& pg) {
    const Graph& g = pg.graph;
    int n = g.num_vertices();
    int delta = std::max(3, g.max_degree());

    ConcentricOrder co = build_concentric_order(pg);
    OuterRouteOrder routes = build_outer_routes(pg, co, delta);

    std::vector<std::vector<BigInt>> sources(n);
    bool all_tree = routes.routes.empty();
    if (!all_tree) {
        std::vector<BigInt> nv = nesting_values(routes.arcs());
        for (size_t i = 0; i < routes.routes.size(); ++i) {
            const Edge& e = g.edge(routes.routes[i].edge_index);
            sources[e.u].push_back(nv[i]);
            sources[e.v].push_back(nv[i]);
        }
    }

    std::vector<std::vector<Vertex>> children(n);
    for (Vertex v = 0; v < n; ++v)
        if (v != pg.layering.root) children[pg.layering.parent[v]].push_back(v);
    std::vector<BigInt> mv =
        matching_values(children, pg.layering.root, pg.layering.layer, sources, all_tree);
    std::vector<BigInt> groups = layer_groups(mv, pg.layering.layer, delta);

    QueueLayout out;
    out.order = linear_order(co.layer_seq, groups);
    out.edges = g.edges();
    out.queue_of = assign_queues(out.edges, pg.is_level, pg.layering.parent, groups, delta);
    out.recount_queues();
    out.bounds["delta_matched"] = BigInt(2 * delta - 2);
    out.layers = pg.layering.layer;
    return out;
}

namespace {

struct Interval {
    int lo, hi, id;
};

// Greedy queue per interval = number of intervals strictly containing it on
// the deepest chain. tails[d] = max right endpoint among depth-d intervals;
// strictly decreasing, so the insertion depth is found by binary search.
std::vector<int> greedy_depths(std::vector<Interval> iv, int* max_depth) {
    std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi > b.hi;
    });
    std::vector<int> depth(iv.size(), 0);
    std::vector<int> tails;
    size_t i = 0;
    while (i < iv.size()) {
        size_t j = i;
        while (j < iv.size() && iv[j].lo == iv[i].lo) {
            int lo = 0, hi = static_cast<int>(tails.size());
            while (lo < hi) {
                int mid = (lo + hi) / 2;
                if (tails[mid] > iv[j].hi)
                    lo = mid + 1;
                else
                    hi = mid;
            }
            depth[iv[j].id] = lo;
            ++j;
        }
        for (size_t k = i; k < j; ++k) {
            int d = depth[iv[k].id];
            if (d == static_cast<int>(tails.size()))
                tails.push_back(iv[k].hi);
            else
                tails[d] = std::max(tails[d], iv[k].hi);
        }
        i = j;
    }
    if (max_depth) *max_depth = static_cast<int>(tails.size());
    return depth;
}

}  // namespace

std::vector<int> greedy_queue_assignment(const std::vector<Vertex>& order,
                                         const std::vector<Edge>& edges, int* num_queues) {
    int n = 0;
    for (Vertex v : order) n = std::max(n, v + 1);
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    std::vector<Interval> iv;
    iv.reserve(edges.size());
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        int a = pos[edges[i].u], b = pos[edges[i].v];
        if (a < 0 || b < 0)
            throw std::invalid_argument("greedy assignment: order misses an edge endpoint");
        iv.push_back({std::min(a, b), std::max(a, b), i});
    }
    return greedy_depths(std::move(iv), num_queues);
}

CollapseResult collapse_to_original(const Graph& original, const QueueLayout& g1_layout,
                                    const SubdivisionRecord& record, int delta) {
    std::vector<int> pos1 = g1_layout.positions();
    int n = original.num_vertices();
    if (record.original_n != n)
        throw std::invalid_argument("collapse: record does not describe this graph");
    for (Vertex v = 0; v < n; ++v)
        if (v >= static_cast<int>(pos1.size()) || pos1[v] < 0)
            throw std::invalid_argument("collapse: subdivision order misses original vertex " +
                                        std::to_string(v));

    CollapseResult res;
    res.layout.order.resize(n);
    std::iota(res.layout.order.begin(), res.layout.order.end(), 0);
    std::sort(res.layout.order.begin(), res.layout.order.end(),
              [&](Vertex a, Vertex b) { return pos1[a] < pos1[b]; });

    int q_final = 0;
    res.layout.edges = original.edges();
    res.layout.queue_of = greedy_queue_assignment(res.layout.order, res.layout.edges, &q_final);
    res.layout.recount_queues();

    res.report.delta = delta;
    res.report.q1 = g1_layout.num_queues;
    res.report.max_subdivisions = record.max_subdivisions();
    res.report.lemma1 = lemma1_bound(res.report.q1, res.report.max_subdivisions);
    res.report.theorem1 = theoretical_bound(delta);
    res.report.q_final = q_final;
    res.report.within_bound = BigInt(q_final) <= res.report.theorem1;
    res.layout.bounds["lemma1"] = res.report.lemma1;
    res.layout.bounds["theorem1"] = res.report.theorem1;
    return res;
}

QueueLayout trivial_layout_max_degree_two(const Graph& g) {
    if (g.max_degree() > 2)
        throw std::invalid_argument("trivial layout: max degree exceeds two");
    if (!g.connected()) throw std::invalid_argument("trivial layout: graph must be connected");
    int n = g.num_vertices();
    QueueLayout out;
    if (g.num_edges() == g.num_vertices() && n >= 3) {
        // cycle: interleave the two directions from vertex 0 so no two edges nest
        std::vector<Vertex> ring{0};
        Vertex prev = 0;
        Vertex cur = std::min(g.neighbors(0)[0], g.neighbors(0)[1]);
        while (cur != 0) {
            ring.push_back(cur);
            for (Vertex w : g.neighbors(cur))
                if (w != prev) {
                    prev = cur;
                    cur = w;
                    break;
                }
        }
        int lo = 0, hi = n;
        bool front = true;
        while (lo < hi) out.order.push_back(front ? ring[lo++] : ring[--hi]), front = !front;
    } else {
        // path (or isolated vertex): natural order from the smaller endpoint
        Vertex start = 0;
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) <= 1) {
                start = v;
                break;
            }
        std::vector<char> seen(n, 0);
        Vertex cur = start;
        out.order.push_back(cur);
        seen[cur] = 1;
        bool moved = true;
        while (moved) {
            moved = false;
            for (Vertex w : g.neighbors(cur))
                if (!seen[w]) {
                    out.order.push_back(w);
                    seen[w] = 1;
                    cur = w;
                    moved = true;
                    break;
                }
        }
    }
    out.edges = g.edges();
    out.queue_of.assign(g.num_edges(), 0);
    out.recount_queues();
    out.bounds["theorem1"] = BigInt(1);
    return out;
}

PipelineResult run_pipeline(const Graph& g, const RotationSystem& rot,
                            std::optional<Edge> outer_face) {
    if (!g.connected()) throw std::invalid_argument("pipeline: graph must be connected");
    PipelineResult res;
    int delta = g.max_degree();
    if (delta <= 2) {
        res.short_circuited = true;
        res.layout = trivial_layout_max_degree_two(g);
        res.g1_layout = res.layout;
        res.report.delta = delta;
        res.report.q1 = res.layout.num_queues;
        res.report.max_subdivisions = 0;
        res.report.lemma1 = BigInt(res.report.q1);
        res.report.theorem1 = BigInt(1);
        res.report.q_final = res.layout.num_queues;
        res.report.within_bound = res.report.q_final <= 1;
        return res;
    }
    res.prepared = prepare(g, rot, outer_face);
    res.g1_layout = layout_prepared(*res.prepared);
    CollapseResult c = collapse_to_original(g, res.g1_layout, res.prepared->record, delta);
    res.layout = std::move(c.layout);
    res.report = c.report;
    return res;
}

}  // namespace qlayout
