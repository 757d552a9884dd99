#include "qlayout/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "qlayout/collapse.hpp"
#include "qlayout/generators.hpp"

namespace qlayout {

double now_seconds() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

double fit_exponent(const std::vector<double>& sizes, const std::vector<double>& times) {
    size_t k = sizes.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < k; ++i) {
        double x = std::log(sizes[i]);
        double y = std::log(std::max(times[i], 1e-9));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::vector<BenchRow> bench_grid_series(const std::vector<int>& sides, int repeats) {
    std::vector<BenchRow> rows;
    for (int side : sides) {
        EmbeddedGraph eg = gen_grid(side, side);
        BenchRow row;
        row.name = "grid-" + std::to_string(side) + "x" + std::to_string(side);
        row.n = eg.graph.num_vertices();
        row.prepare_s = row.layout_s = row.collapse_s = row.total_s = 1e300;
        for (int rep = 0; rep < repeats; ++rep) {
            double t0 = now_seconds();
            PreparedGraph pg = prepare(eg.graph, *eg.rotation);
            double t1 = now_seconds();
            QueueLayout l1 = layout_prepared(pg);
            double t2 = now_seconds();
            CollapseResult c =
                collapse_to_original(eg.graph, l1, pg.record, eg.graph.max_degree());
            double t3 = now_seconds();
            row.prepare_s = std::min(row.prepare_s, t1 - t0);
            row.layout_s = std::min(row.layout_s, t2 - t1);
            row.collapse_s = std::min(row.collapse_s, t3 - t2);
            row.total_s = std::min(row.total_s, t3 - t0);
            row.q1 = l1.num_queues;
            row.q_final = c.report.q_final;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<BenchRow> bench_dm_series(const std::vector<int>& heights, int delta, int repeats) {
    std::vector<BenchRow> rows;
    for (int h : heights) {
        DeltaMatchedInstance inst = gen_delta_matched(delta, h, 1234 + h);
        BenchRow row;
        row.name = "dm-d" + std::to_string(delta) + "-h" + std::to_string(h);
        row.n = inst.num_vertices();
        row.total_s = 1e300;
        for (int rep = 0; rep < repeats; ++rep) {
            double t0 = now_seconds();
            QueueLayout l = layout_delta_matched(inst);
            double t1 = now_seconds();
            row.total_s = std::min(row.total_s, t1 - t0);
            row.layout_s = row.total_s;
            row.q_final = row.q1 = l.num_queues;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<BitGrowthRow> bench_path_chord_bits(const std::vector<int>& sizes) {
    std::vector<BitGrowthRow> rows;
    for (int n : sizes) {
        EmbeddedGraph eg = gen_path_chord(n);
        PreparedGraph pg = prepare(eg.graph, *eg.rotation);
        ConcentricOrder co = build_concentric_order(pg);
        OuterRouteOrder routes = build_outer_routes(pg, co, eg.graph.max_degree());
        size_t bits = 0;
        if (!routes.routes.empty()) {
            std::vector<BigInt> nv = nesting_values(routes.arcs());
            for (const OuterRoute& r : routes.routes)
                bits = std::max(bits, mpz_sizeinbase(r.weight.get_mpz_t(), 2));
            for (const BigInt& v : nv)
                if (v > 0) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
        }
        rows.push_back({n, bits});
    }
    return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "name\tn\tprepare_s\tlayout_s\tcollapse_s\ttotal_s\tq1\tq_final\n";
    for (const BenchRow& r : rows) {
        os << r.name << "\t" << r.n << "\t" << r.prepare_s << "\t" << r.layout_s << "\t"
           << r.collapse_s << "\t" << r.total_s << "\t" << r.q1 << "\t" << r.q_final << "\n";
    }
    return os.str();
}

}  // namespace qlayout
