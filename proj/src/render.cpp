#include "qlayout/render.hpp"

#include <algorithm>
#include <sstream>

namespace qlayout {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
                          "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a"};
constexpr int kPaletteSize = 12;

const char* queue_color(int q) { return kPalette[q % kPaletteSize]; }

}  // namespace

std::string render_layout_svg(const Graph& g, const QueueLayout& layout) {
    const double step = 28.0, r = 3.5;
    int n = g.num_vertices();
    double base_y = 40.0;
    double max_span = 1;
    auto pos = layout.positions();
    for (const Edge& e : layout.edges)
        max_span = std::max(max_span, double(std::abs(pos[e.u] - pos[e.v])));
    double arc_h = max_span * step / 2.0 + 20.0;
    double w = (n + 1) * step, h = arc_h + base_y + 40.0;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 " << -arc_h << " " << w << " " << h << "\">\n";
    auto x_of = [&](Vertex v) { return (pos[v] + 1) * step; };

    if (!layout.layers.empty()) {
        // dotted boxes around maximal runs of equal-layer vertices
        size_t i = 0;
        while (i < layout.order.size()) {
            size_t j = i;
            int layer = layout.layers[layout.order[i]];
            while (j < layout.order.size() && layout.layers[layout.order[j]] == layer) ++j;
            double x0 = (i + 1) * step - step / 2.5, x1 = (j - 1 + 1) * step + step / 2.5;
            os << "  <rect x=\"" << x0 << "\" y=\"" << base_y - 16 << "\" width=\"" << x1 - x0
               << "\" height=\"32\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"3,3\"/>\n";
            i = j;
        }
    }

    for (size_t i = 0; i < layout.edges.size(); ++i) {
        const Edge& e = layout.edges[i];
        double x1 = x_of(e.u), x2 = x_of(e.v);
        if (x1 > x2) std::swap(x1, x2);
        double rad = (x2 - x1) / 2.0;
        os << "  <path d=\"M " << x1 << " " << base_y << " A " << rad << " " << rad
           << " 0 0 1 " << x2 << " " << base_y << "\" fill=\"none\" stroke=\""
           << queue_color(layout.queue_of[i]) << "\" stroke-width=\"1.4\"/>\n";
    }
    for (Vertex v = 0; v < n; ++v) {
        os << "  <circle cx=\"" << x_of(v) << "\" cy=\"" << base_y << "\" r=\"" << r
           << "\" fill=\"#222\"/>\n";
        os << "  <text x=\"" << x_of(v) << "\" y=\"" << base_y + 16
           << "\" font-size=\"9\" text-anchor=\"middle\">" << v << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_concentric_svg(const PreparedGraph& pg, const ConcentricOrder& co,
                                  const OuterRouteOrder& routes) {
    const double xstep = 26.0, ystep = 44.0;
    int h = pg.layering.height;
    size_t widest = 1;
    for (const auto& seq : co.layer_seq) widest = std::max(widest, seq.size());
    size_t leaves = co.leaf_order.size();
    double width = (std::max(widest, leaves) + 2) * xstep;
    double depth_below = 30.0 + 12.0 * routes.routes.size();
    double height = (h + 1) * ystep + 60.0 + depth_below;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\">\n";
    auto y_of = [&](int layer) { return 30.0 + (h - layer) * ystep; };
    // anchor line: leaves in contour order
    std::vector<double> leaf_x(pg.graph.num_vertices(), 0.0);
    for (size_t i = 0; i < co.leaf_order.size(); ++i) leaf_x[co.leaf_order[i]] = (i + 1) * xstep;
    std::vector<double> vx(pg.graph.num_vertices(), 0.0);
    for (int l = 0; l <= h; ++l) {
        const auto& seq = co.layer_seq[l];
        for (size_t i = 0; i < seq.size(); ++i)
            vx[seq[i]] = co.leaf_pos[seq[i]] >= 0 ? leaf_x[seq[i]] : (i + 1) * xstep;
    }
    for (int i = 0; i < pg.graph.num_edges(); ++i) {
        if (pg.is_level[i]) continue;
        const Edge& e = pg.graph.edge(i);
        os << "  <line x1=\"" << vx[e.u] << "\" y1=\"" << y_of(pg.layering.layer[e.u])
           << "\" x2=\"" << vx[e.v] << "\" y2=\"" << y_of(pg.layering.layer[e.v])
           << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    }
    double base = y_of(0) + 14.0;
    for (size_t i = 0; i < routes.routes.size(); ++i) {
        const OuterRoute& rt = routes.routes[i];
        const Edge& e = pg.graph.edge(rt.edge_index);
        double x1 = vx[e.u], x2 = vx[e.v];
        double dip = base + 14.0 + 10.0 * double(i);
        os << "  <path d=\"M " << x1 << " " << y_of(rt.layer) << " L " << x1 << " " << dip
           << " L " << x2 << " " << dip << " L " << x2 << " " << y_of(rt.layer)
           << "\" fill=\"none\" stroke=\"" << queue_color(static_cast<int>(i))
           << "\" stroke-dasharray=\"4,2\"/>\n";
    }
    for (int l = 0; l <= h; ++l)
        for (Vertex v : co.layer_seq[l]) {
            os << "  <circle cx=\"" << vx[v] << "\" cy=\"" << y_of(l)
               << "\" r=\"3\" fill=\"#222\"/>\n";
            os << "  <text x=\"" << vx[v] << "\" y=\"" << y_of(l) - 6
               << "\" font-size=\"8\" text-anchor=\"middle\">" << v << "</text>\n";
        }
    os << "</svg>\n";
    return os.str();
}

}  // namespace qlayout
