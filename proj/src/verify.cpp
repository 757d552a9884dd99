#include "qlayout/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qlayout/generators.hpp"

namespace qlayout {

namespace {

struct Interval {
    int lo, hi;
    int id;
};

std::vector<Interval> to_intervals(const std::vector<int>& pos, const std::vector<Edge>& edges) {
    std::vector<Interval> iv;
    iv.reserve(edges.size());
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        int a = pos[edges[i].u];
        int b = pos[edges[i].v];
        if (a < 0 || b < 0) throw std::invalid_argument("layout order misses an edge endpoint");
        iv.push_back({std::min(a, b), std::max(a, b), i});
    }
    return iv;
}

// prefix-max Fenwick tree
class MaxBit {
public:
    explicit MaxBit(int n) : t_(n + 1, 0) {}
    void update(int i, int v) {
        for (++i; i < static_cast<int>(t_.size()); i += i & -i) t_[i] = std::max(t_[i], v);
    }
    int query(int i) const {  // max over [0, i]
        int r = 0;
        for (++i; i > 0; i -= i & -i) r = std::max(r, t_[i]);
        return r;
    }

private:
    std::vector<int> t_;
};

}  // namespace

std::string ValidationReport::describe() const {
    std::ostringstream os;
    if (valid) {
        os << "valid";
    } else {
        os << "invalid: queue " << witness_queue << " nests (" << witness->first.u << ","
           << witness->first.v << ") over (" << witness->second.u << "," << witness->second.v
           << ")";
    }
    return os.str();
}

ValidationReport validate_layout(const Graph& g, const QueueLayout& layout) {
    if (static_cast<int>(layout.order.size()) != g.num_vertices())
        throw std::invalid_argument("validate: order is not a permutation of the vertex set");
    {
        std::vector<char> seen(g.num_vertices(), 0);
        for (Vertex v : layout.order) {
            if (v < 0 || v >= g.num_vertices() || seen[v])
                throw std::invalid_argument("validate: order is not a permutation");
            seen[v] = 1;
        }
    }
    if (layout.edges.size() != layout.queue_of.size())
        throw std::invalid_argument("validate: queue assignment size mismatch");
    if (static_cast<int>(layout.edges.size()) != g.num_edges())
        throw std::invalid_argument("validate: unassigned or extra edges");
    {
        auto key = [](const Edge& e) {
            return std::pair<Vertex, Vertex>{e.lo(), e.hi()};
        };
        std::vector<std::pair<Vertex, Vertex>> got, want;
        for (const Edge& e : layout.edges) got.push_back(key(e));
        for (const Edge& e : g.edges()) want.push_back(key(e));
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want)
            throw std::invalid_argument("validate: layout edges do not match the graph");
    }

    auto pos = layout.positions();
    ValidationReport rep;

    std::map<int, std::vector<Interval>> per_queue;
    for (int i = 0; i < static_cast<int>(layout.edges.size()); ++i) {
        int a = pos[layout.edges[i].u], b = pos[layout.edges[i].v];
        per_queue[layout.queue_of[i]].push_back({std::min(a, b), std::max(a, b), i});
    }

    for (auto& [q, iv] : per_queue) {
        std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) {
            return a.lo != b.lo ? a.lo < b.lo : a.hi > b.hi;
        });
        // sweep by lo; track the widest previously opened interval with a
        // strictly smaller lo. Same-lo edges share a vertex and never nest.
        Interval best{-1, -1, -1};
        size_t i = 0;
        while (i < iv.size() && !rep.witness) {
            size_t j = i;
            while (j < iv.size() && iv[j].lo == iv[i].lo) {
                if (best.id >= 0 && best.hi > iv[j].hi) {
                    rep.valid = false;
                    rep.witness_queue = q;
                    rep.witness = {layout.edges[best.id], layout.edges[iv[j].id]};
                    break;
                }
                ++j;
            }
            for (size_t k = i; k < j; ++k)
                if (iv[k].hi > best.hi || (iv[k].hi == best.hi && iv[k].id < best.id))
                    best = iv[k];
            i = j;
        }
        // rainbow size per queue, independent of the witness sweep
        std::vector<Edge> qedges;
        for (const Interval& e : iv) qedges.push_back(layout.edges[e.id]);
        rep.max_rainbow_per_queue[q] = max_rainbow(layout.order, qedges);
        if (rep.witness) break;
    }
    return rep;
}

int max_rainbow(const std::vector<Vertex>& order, const std::vector<Edge>& edges) {
    if (edges.empty()) return 0;
    int n = 0;
    for (Vertex v : order) n = std::max(n, v + 1);
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    auto iv = to_intervals(pos, edges);
    // longest chain of strictly nesting intervals: process by lo descending;
    // chain(e) = 1 + max chain(f) over f with lo_f > lo_e and hi_f < hi_e
    std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) {
        return a.lo != b.lo ? a.lo > b.lo : a.hi < b.hi;
    });
    MaxBit bit(static_cast<int>(order.size()) + 1);
    int best = 0;
    size_t i = 0;
    std::vector<std::pair<int, int>> batch;  // (hi, chain)
    while (i < iv.size()) {
        size_t j = i;
        batch.clear();
        while (j < iv.size() && iv[j].lo == iv[i].lo) {
            int c = 1 + (iv[j].hi > 0 ? bit.query(iv[j].hi - 1) : 0);
            batch.push_back({iv[j].hi, c});
            best = std::max(best, c);
            ++j;
        }
        for (auto& [hi, c] : batch) bit.update(hi, c);
        i = j;
    }
    return best;
}

namespace {

// max rainbow over the completed-edge intervals; used as the search bound
int chain_of(std::vector<std::pair<int, int>>& iv) {
    if (iv.empty()) return 0;
    std::sort(iv.begin(), iv.end(), [](const std::pair<int, int>& a, const std::pair<int, int>& b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
    });
    // tails[d] = max hi among intervals whose deepest nesting chain has
    // length d+1; strictly decreasing, so binary search applies
    std::vector<int> tails;
    size_t i = 0;
    std::vector<int> depths;
    while (i < iv.size()) {
        size_t j = i;
        depths.clear();
        while (j < iv.size() && iv[j].first == iv[i].first) {
            int hi = iv[j].second;
            int lo_d = 0, hi_d = static_cast<int>(tails.size());
            while (lo_d < hi_d) {
                int mid = (lo_d + hi_d) / 2;
                if (tails[mid] > hi)
                    lo_d = mid + 1;
                else
                    hi_d = mid;
            }
            depths.push_back(lo_d);
            ++j;
        }
        for (size_t k = i; k < j; ++k) {
            int d = depths[k - i];
            int hi = iv[k].second;
            if (d == static_cast<int>(tails.size()))
                tails.push_back(hi);
            else
                tails[d] = std::max(tails[d], hi);
        }
        i = j;
    }
    return static_cast<int>(tails.size());
}

struct OracleSearch {
    const Graph& g;
    int n;
    int best;
    std::vector<Vertex> order;
    std::vector<int> pos;
    std::vector<char> placed;

    explicit OracleSearch(const Graph& g_) : g(g_), n(g_.num_vertices()), best(n) {
        pos.assign(n, -1);
        placed.assign(n, 0);
    }

    int completed_rainbow() const {
        std::vector<std::pair<int, int>> iv;
        for (const Edge& e : g.edges())
            if (placed[e.u] && placed[e.v])
                iv.push_back({std::min(pos[e.u], pos[e.v]), std::max(pos[e.u], pos[e.v])});
        return chain_of(iv);
    }

    void rec(int depth) {
        if (depth == n) {
            best = std::min(best, completed_rainbow());
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            // reversal symmetry: vertex 0 stays in the left half
            if (v == 0 && depth > (n - 1) / 2) continue;
            placed[v] = 1;
            pos[v] = depth;
            order.push_back(v);
            if (completed_rainbow() < best) rec(depth + 1);
            order.pop_back();
            pos[v] = -1;
            placed[v] = 0;
        }
    }
};

}  // namespace

int exact_queue_number(const Graph& g, int limit_n) {
    if (g.num_vertices() > limit_n)
        throw std::invalid_argument("exact_queue_number: graph too large for brute force");
    if (g.num_vertices() == 0 || g.num_edges() == 0) return 0;
    OracleSearch s(g);
    s.rec(0);
    return s.best;
}

std::vector<KnownValueResult> known_value_suite() {
    std::vector<KnownValueResult> out;
    auto run = [&](const std::string& name, const Graph& g, int lo, int hi) {
        KnownValueResult r;
        r.fixture = name;
        r.expectation = lo == hi ? "= " + std::to_string(lo)
                                 : "in [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
        r.got = exact_queue_number(g);
        r.pass = r.got >= lo && r.got <= hi;
        out.push_back(r);
    };

    for (int n = 2; n <= 6; ++n) run("path" + std::to_string(n), gen_path(n), 1, 1);
    run("star5", gen_star(5), 1, 1);
    for (int seed = 1; seed <= 4; ++seed) {
        run("tree9-s" + std::to_string(seed), gen_random_tree(9, seed), 1, 1);
    }
    for (int n = 3; n <= 9; ++n) run("cycle" + std::to_string(n), gen_cycle(n), 1, 1);
    for (int n = 4; n <= 9; ++n)
        run("K" + std::to_string(n), gen_complete(n).graph, n / 2, n / 2);
    for (int n = 5; n <= 7; ++n)
        run("outerplanar-fan-" + std::to_string(n), gen_fan(n).graph, 1, 2);
    return out;
}

}  // namespace qlayout
