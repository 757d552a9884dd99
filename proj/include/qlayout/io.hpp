#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlayout/delta_matched.hpp"
#include "qlayout/graph.hpp"
#include "qlayout/layout.hpp"
#include "qlayout/preprocess.hpp"

namespace qlayout {

/// A parsed graph file: edges plus whichever embedding sources were present.
struct GraphInput {
    Graph graph;
    std::optional<RotationSystem> rotation;
    std::optional<std::vector<std::array<double, 2>>> coords;
    std::optional<Edge> outer_face;

    /// Embedding priority: explicit rotation, else rotation derived from
    /// coordinates. Throws when neither is available.
    RotationSystem effective_rotation() const;
};

GraphInput graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const GraphInput& gi);

DeltaMatchedInstance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const DeltaMatchedInstance& inst);

QueueLayout layout_from_json(const nlohmann::json& j);
nlohmann::json layout_to_json(const QueueLayout& layout,
                              const SubdivisionRecord* provenance = nullptr);

nlohmann::json record_to_json(const SubdivisionRecord& rec);

nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

std::string to_dot(const GraphInput& gi);

}  // namespace qlayout
