#include "qlayout/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qlayout {

namespace {

// uniform draw in [0, bound) that does not depend on library internals
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

EmbeddedGraph gen_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid: need positive dimensions");
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<Edge> edges;
    std::vector<std::array<double, 2>> coords(static_cast<size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            coords[id(r, c)] = {double(c), double(r)};
            if (c + 1 < cols) edges.push_back(Edge(id(r, c), id(r, c + 1)));
            if (r + 1 < rows) edges.push_back(Edge(id(r, c), id(r + 1, c)));
        }
    Graph g(rows * cols, std::move(edges));
    RotationSystem rot = rotation_from_coordinates(g, coords);
    return {std::move(g), std::move(rot)};
}

EmbeddedGraph gen_prism(int n) {
    if (n < 3) throw std::invalid_argument("prism: need n >= 3");
    std::vector<Edge> edges;
    std::vector<std::array<double, 2>> coords(2 * n);
    for (int i = 0; i < n; ++i) {
        double a = 2.0 * std::numbers::pi * i / n;
        coords[i] = {2.0 * std::cos(a), 2.0 * std::sin(a)};
        coords[n + i] = {std::cos(a), std::sin(a)};
        edges.push_back(Edge(i, (i + 1) % n));
        edges.push_back(Edge(n + i, n + (i + 1) % n));
        edges.push_back(Edge(i, n + i));
    }
    Graph g(2 * n, std::move(edges));
    RotationSystem rot = rotation_from_coordinates(g, coords);
    return {std::move(g), std::move(rot)};
}

EmbeddedGraph gen_tree(int arity, int height) {
    if (arity < 1 || height < 0) throw std::invalid_argument("tree: bad parameters");
    std::vector<std::vector<Vertex>> children{{}};
    std::vector<int> depth{0};
    for (Vertex v = 0; v < static_cast<Vertex>(children.size()); ++v) {
        if (depth[v] == height) continue;
        for (int c = 0; c < arity; ++c) {
            Vertex w = static_cast<Vertex>(children.size());
            children[v].push_back(w);
            children.push_back({});
            depth.push_back(depth[v] + 1);
        }
    }
    int n = static_cast<int>(children.size());
    std::vector<Edge> edges;
    RotationSystem rot;
    rot.order.assign(n, {});
    for (Vertex v = 0; v < n; ++v)
        for (Vertex c : children[v]) {
            edges.push_back(Edge(v, c));
            rot.order[c].push_back(v);  // parent first
        }
    for (Vertex v = 0; v < n; ++v)
        for (Vertex c : children[v]) rot.order[v].push_back(c);
    Graph g(n, std::move(edges));
    return {std::move(g), std::move(rot)};
}

EmbeddedGraph gen_stacked(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("stacked: need n >= 3");
    std::mt19937_64 rng(seed);
    RotationSystem rot;
    rot.order = {{1, 2}, {2, 0}, {0, 1}};
    std::vector<Edge> edges{Edge(0, 1), Edge(1, 2), Edge(2, 0)};
    // faces as oriented triples (a->b->c); the outer face stays untouched
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}};
    for (Vertex w = 3; w < n; ++w) {
        size_t f = rng_below(rng, faces.size());
        auto [a, b, c] = faces[f];
        // insert w in the corner each face vertex shows to this face
        auto insert_at = [&](Vertex x, Vertex before) {
            auto& r = rot.order[x];
            r.insert(r.begin() + rot.index_of(x, before), w);
        };
        insert_at(a, c);
        insert_at(b, a);
        insert_at(c, b);
        rot.order.push_back({a, b, c});
        edges.push_back(Edge(w, a));
        edges.push_back(Edge(w, b));
        edges.push_back(Edge(w, c));
        faces[f] = {a, b, w};
        faces.push_back({b, c, w});
        faces.push_back({c, a, w});
    }
    Graph g(n, std::move(edges));
    return {std::move(g), std::move(rot)};
}

EmbeddedGraph gen_fan(int n) {
    if (n < 3) throw std::invalid_argument("fan: need n >= 3");
    int path = n - 1;  // path vertices 0..n-2, apex n-1
    std::vector<Edge> edges;
    std::vector<std::array<double, 2>> coords(n);
    for (int i = 0; i < path; ++i) {
        coords[i] = {double(i), 0.0};
        if (i + 1 < path) edges.push_back(Edge(i, i + 1));
        edges.push_back(Edge(i, n - 1));
    }
    coords[n - 1] = {0.5 * (path - 1), double(path)};
    Graph g(n, std::move(edges));
    RotationSystem rot = rotation_from_coordinates(g, coords);
    return {std::move(g), std::move(rot)};
}

EmbeddedGraph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back(Edge(u, v));
    Graph g(n, std::move(edges));
    if (n <= 2) {
        RotationSystem rot;
        rot.order.assign(n, {});
        if (n == 2) rot.order = {{1}, {0}};
        return {std::move(g), std::move(rot)};
    }
    if (n <= 4) {
        // outer triangle plus optional center vertex
        std::vector<std::array<double, 2>> coords = {{0, 2}, {-2, -1}, {2, -1}, {0, 0}};
        coords.resize(n);
        RotationSystem rot = rotation_from_coordinates(g, coords);
        return {std::move(g), std::move(rot)};
    }
    return {std::move(g), std::nullopt};
}

EmbeddedGraph gen_octahedron() {
    // outer triangle 0,1,2 and inner triangle 3,4,5; every vertex degree 4
    std::vector<Edge> edges = {Edge(0, 1), Edge(1, 2), Edge(2, 0), Edge(3, 4), Edge(4, 5),
                               Edge(5, 3), Edge(0, 3), Edge(1, 3), Edge(1, 4), Edge(2, 4),
                               Edge(2, 5), Edge(0, 5)};
    auto at = [](double deg, double r) {
        double a = deg * std::numbers::pi / 180.0;
        return std::array<double, 2>{r * std::cos(a), r * std::sin(a)};
    };
    std::vector<std::array<double, 2>> coords = {at(90, 2),    at(210, 2),   at(330, 2),
                                                 at(150, 0.8), at(270, 0.8), at(30, 0.8)};
    Graph g(6, std::move(edges));
    RotationSystem rot = rotation_from_coordinates(g, coords);
    return {std::move(g), std::move(rot)};
}

EmbeddedGraph gen_path_chord(int n) {
    if (n < 4) throw std::invalid_argument("path-chord: need n >= 4");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge(i, i + 1));
    edges.push_back(Edge(0, 2));
    Graph g(n, std::move(edges));
    RotationSystem rot;
    rot.order.assign(n, {});
    rot.order[0] = {1, 2};
    rot.order[1] = {0, 2};
    rot.order[2] = {3, 0, 1};  // chord drawn above the path
    for (int i = 3; i < n; ++i) {
        rot.order[i] = {i - 1};
        if (i + 1 < n) rot.order[i].push_back(i + 1);
    }
    return {std::move(g), std::move(rot)};
}

Graph gen_path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge(i, i + 1));
    return Graph(n, std::move(edges));
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(Edge(i, (i + 1) % n));
    return Graph(n, std::move(edges));
}

Graph gen_star(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back(Edge(0, i));
    return Graph(leaves + 1, std::move(edges));
}

Graph gen_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree: need n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back(Edge(static_cast<Vertex>(rng_below(rng, v)), v));
    return Graph(n, std::move(edges));
}

DeltaMatchedInstance gen_delta_matched(int delta, int height, std::uint64_t seed) {
    if (delta < 3) throw std::invalid_argument("delta-matched: delta must be >= 3");
    if (height < 1) throw std::invalid_argument("delta-matched: height must be >= 1");
    DeltaMatchedInstance inst;
    inst.delta = delta;
    inst.root = 0;
    inst.children.push_back({});
    std::vector<int> depth{0};
    std::vector<Vertex> frontier{0};
    for (int d = 0; d < height; ++d) {
        std::vector<Vertex> next;
        for (Vertex v : frontier)
            for (int c = 0; c < delta - 1; ++c) {
                Vertex w = static_cast<Vertex>(inst.children.size());
                inst.children[v].push_back(w);
                inst.children.push_back({});
                depth.push_back(d + 1);
                next.push_back(w);
            }
        frontier = std::move(next);
    }
    if (frontier.size() % 2 == 1) {
        // odd leaf count: drop the last leaf so a perfect matching exists
        Vertex last = frontier.back();
        frontier.pop_back();
        Vertex p = -1;
        for (Vertex v = 0; v < static_cast<Vertex>(inst.children.size()); ++v)
            if (!inst.children[v].empty() && inst.children[v].back() == last) p = v;
        inst.children[p].pop_back();
        inst.children.pop_back();
    }

    // seeded balanced-parenthesis walk over the leaves, paired by a stack
    std::mt19937_64 rng(seed);
    size_t k = frontier.size() / 2;
    size_t opens = 0, closes = 0;
    std::vector<Vertex> stack;
    for (size_t i = 0; i < frontier.size(); ++i) {
        bool open;
        if (opens - closes == 0)
            open = true;
        else if (opens == k)
            open = false;
        else
            open = rng_below(rng, frontier.size() - opens - closes) < k - opens;
        if (open) {
            stack.push_back(frontier[i]);
            ++opens;
        } else {
            inst.matching.push_back({stack.back(), frontier[i]});
            stack.pop_back();
            ++closes;
        }
    }
    return inst;
}

Generated generate(const GeneratorSpec& spec) {
    Generated out;
    if (spec.family == "grid") {
        out.graph = gen_grid(spec.rows ? spec.rows : spec.n, spec.cols ? spec.cols : spec.n);
    } else if (spec.family == "prism") {
        out.graph = gen_prism(spec.n);
    } else if (spec.family == "tree") {
        out.graph = gen_tree(spec.arity, spec.height);
    } else if (spec.family == "stacked") {
        out.graph = gen_stacked(spec.n, spec.seed);
    } else if (spec.family == "fan") {
        out.graph = gen_fan(spec.n);
    } else if (spec.family == "complete") {
        out.graph = gen_complete(spec.n);
    } else if (spec.family == "octahedron") {
        out.graph = gen_octahedron();
    } else if (spec.family == "path-chord") {
        out.graph = gen_path_chord(spec.n);
    } else if (spec.family == "delta-matched") {
        out.instance = gen_delta_matched(spec.delta, spec.height, spec.seed);
    } else {
        throw std::invalid_argument("unknown generator family: " + spec.family);
    }
    return out;
}

}  // namespace qlayout
