#pragma once

#include <string>

#include "qlayout/concentric.hpp"
#include "qlayout/graph.hpp"
#include "qlayout/layout.hpp"
#include "qlayout/preprocess.hpp"

namespace qlayout {

/// Arc diagram: vertices on a horizontal line in layout order, edges as
/// semicircles colored by queue, dotted boxes around layers when the layout
/// carries layer annotations.
std::string render_layout_svg(const Graph& g, const QueueLayout& layout);

/// Debug view of the cut representation: one row per layer plus the rerouted
/// level edges below the bottom line.
std::string render_concentric_svg(const PreparedGraph& pg, const ConcentricOrder& co,
                                  const OuterRouteOrder& routes);

}  // namespace qlayout
