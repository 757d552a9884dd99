#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlayout/bench.hpp"
#include "qlayout/collapse.hpp"
#include "qlayout/generators.hpp"
#include "qlayout/io.hpp"
#include "qlayout/render.hpp"
#include "qlayout/verify.hpp"

using nlohmann::json;
using namespace qlayout;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBound = 3;

json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    out << text;
}

// graph file or matched-tree instance file, distinguished by shape
struct AnyGraph {
    GraphInput gi;
    bool from_instance = false;
};

AnyGraph read_any_graph(const std::string& path) {
    json j = read_json_input(path);
    if (j.contains("tree")) {
        DeltaMatchedInstance inst = instance_from_json(j);
        return {GraphInput{instance_to_graph(inst), std::nullopt, std::nullopt, std::nullopt},
                true};
    }
    return {graph_from_json(j), false};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"queue layouts of bounded-degree planar graphs"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a graph or matched-tree instance");
    GeneratorSpec spec;
    std::string gen_out, gen_format = "json";
    gen->add_option("family", spec.family,
                    "grid|prism|tree|stacked|fan|complete|octahedron|path-chord|delta-matched")
        ->required();
    gen->add_option("--rows", spec.rows);
    gen->add_option("--cols", spec.cols);
    gen->add_option("--n", spec.n);
    gen->add_option("--arity", spec.arity);
    gen->add_option("--height", spec.height);
    gen->add_option("--delta", spec.delta);
    gen->add_option("--seed", spec.seed);
    gen->add_option("-o,--output", gen_out);
    gen->add_option("--format", gen_format, "json|dot");

    // ---- layout ----
    auto* layout_cmd = app.add_subcommand("layout", "full pipeline on an embedded planar graph");
    std::string layout_in, layout_out;
    bool layout_quiet = false;
    layout_cmd->add_option("-i,--input", layout_in);
    layout_cmd->add_option("-o,--output", layout_out);
    layout_cmd->add_flag("-q,--quiet", layout_quiet, "suppress the summary line on stderr");

    // ---- layout-dm ----
    auto* dm_cmd = app.add_subcommand("layout-dm", "direct layout of a matched-tree instance");
    std::string dm_in, dm_out;
    dm_cmd->add_option("-i,--input", dm_in);
    dm_cmd->add_option("-o,--output", dm_out);

    // ---- validate ----
    auto* val_cmd = app.add_subcommand("validate", "check a layout against the rainbow criterion");
    std::string val_graph, val_layout;
    val_cmd->add_option("--graph", val_graph)->required();
    val_cmd->add_option("--layout", val_layout)->required();

    // ---- exact ----
    auto* exact_cmd = app.add_subcommand("exact", "brute-force exact queue number (tiny graphs)");
    std::string exact_in;
    int exact_limit = 9;
    exact_cmd->add_option("-i,--input", exact_in);
    exact_cmd->add_option("--limit", exact_limit);

    // ---- rainbow ----
    auto* rb_cmd = app.add_subcommand("rainbow", "maximum rainbow of a layout's vertex order");
    std::string rb_graph, rb_layout;
    rb_cmd->add_option("--graph", rb_graph)->required();
    rb_cmd->add_option("--layout", rb_layout)->required();

    // ---- render ----
    auto* render_cmd = app.add_subcommand("render", "emit an SVG view");
    std::string render_mode = "layout", render_graph, render_layout_path, render_out;
    render_cmd->add_option("mode", render_mode, "layout|concentric");
    render_cmd->add_option("--graph", render_graph)->required();
    render_cmd->add_option("--layout", render_layout_path);
    render_cmd->add_option("-o,--output", render_out);

    // ---- bench ----
    auto* bench_cmd = app.add_subcommand("bench", "timing and growth measurements");
    std::string bench_suite = "grid";
    bench_cmd->add_option("--suite", bench_suite, "grid|dm|path-chord");
    int bench_delta = 3;
    bench_cmd->add_option("--delta", bench_delta);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            Generated g = generate(spec);
            if (g.instance) {
                write_output(gen_out, instance_to_json(*g.instance).dump(2) + "\n");
            } else {
                GraphInput gi{g.graph->graph, g.graph->rotation, std::nullopt, std::nullopt};
                if (gen_format == "dot")
                    write_output(gen_out, to_dot(gi));
                else
                    write_output(gen_out, graph_to_json(gi).dump(2) + "\n");
            }
            return kExitOk;
        }

        if (*layout_cmd) {
            GraphInput gi = graph_from_json(read_json_input(layout_in));
            RotationSystem rot =
                gi.graph.max_degree() <= 2 ? RotationSystem{} : gi.effective_rotation();
            PipelineResult res = run_pipeline(gi.graph, rot, gi.outer_face);
            ValidationReport rep = validate_layout(gi.graph, res.layout);
            const SubdivisionRecord* rec =
                res.prepared ? &res.prepared->record : nullptr;
            write_output(layout_out, layout_to_json(res.layout, rec).dump(2) + "\n");
            if (!layout_quiet)
                std::cerr << "queues used: " << res.report.q_final
                          << "  theorem bound: " << to_string(res.report.theorem1) << "  "
                          << rep.describe() << "\n";
            if (!rep.valid) return kExitInvalid;
            if (!res.report.within_bound) return kExitBound;
            return kExitOk;
        }

        if (*dm_cmd) {
            DeltaMatchedInstance inst = instance_from_json(read_json_input(dm_in));
            QueueLayout l = layout_delta_matched(inst);
            ValidationReport rep = validate_layout(instance_to_graph(inst), l);
            write_output(dm_out, layout_to_json(l).dump(2) + "\n");
            if (!rep.valid) {
                std::cerr << rep.describe() << "\n";
                return kExitInvalid;
            }
            return kExitOk;
        }

        if (*val_cmd) {
            AnyGraph ag = read_any_graph(val_graph);
            QueueLayout l = layout_from_json(read_json_input(val_layout));
            ValidationReport rep = validate_layout(ag.gi.graph, l);
            std::cout << rep.describe() << "\n";
            return rep.valid ? kExitOk : kExitInvalid;
        }

        if (*exact_cmd) {
            AnyGraph ag = read_any_graph(exact_in);
            std::cout << exact_queue_number(ag.gi.graph, exact_limit) << "\n";
            return kExitOk;
        }

        if (*rb_cmd) {
            AnyGraph ag = read_any_graph(rb_graph);
            QueueLayout l = layout_from_json(read_json_input(rb_layout));
            std::cout << max_rainbow(l.order, ag.gi.graph.edges()) << "\n";
            return kExitOk;
        }

        if (*render_cmd) {
            GraphInput gi = graph_from_json(read_json_input(render_graph));
            if (render_mode == "concentric") {
                PreparedGraph pg = prepare(gi.graph, gi.effective_rotation(), gi.outer_face);
                ConcentricOrder co = build_concentric_order(pg);
                OuterRouteOrder routes =
                    build_outer_routes(pg, co, std::max(3, pg.graph.max_degree()));
                write_output(render_out, render_concentric_svg(pg, co, routes));
            } else {
                if (render_layout_path.empty())
                    throw std::invalid_argument("render layout needs --layout");
                QueueLayout l = layout_from_json(read_json_input(render_layout_path));
                write_output(render_out, render_layout_svg(gi.graph, l));
            }
            return kExitOk;
        }

        if (*bench_cmd) {
            if (bench_suite == "grid") {
                auto rows = bench_grid_series({25, 50, 100, 200});
                std::cout << format_bench_table(rows);
                std::vector<double> ns, ts;
                for (auto& r : rows) {
                    ns.push_back(r.n);
                    ts.push_back(r.total_s);
                }
                std::cout << "fitted exponent: " << fit_exponent(ns, ts) << "\n";
            } else if (bench_suite == "dm") {
                std::vector<int> heights;
                for (int h = 11; h <= 16; ++h) heights.push_back(h);
                auto rows = bench_dm_series(heights, bench_delta);
                std::cout << format_bench_table(rows);
                std::vector<double> ns, ts;
                for (auto& r : rows) {
                    ns.push_back(r.n);
                    ts.push_back(r.total_s);
                }
                std::cout << "fitted exponent: " << fit_exponent(ns, ts) << "\n";
            } else if (bench_suite == "path-chord") {
                std::cout << "n\tmax_label_bits\n";
                for (auto& r : bench_path_chord_bits({50, 100, 200, 400, 800}))
                    std::cout << r.n << "\t" << r.max_label_bits << "\n";
            } else {
                throw std::invalid_argument("unknown bench suite: " + bench_suite);
            }
            return kExitOk;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
