#include "qlayout/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qlayout {

using nlohmann::json;

namespace {

Vertex parse_vertex_key(const std::string& key) {
    size_t pos = 0;
    int v = std::stoi(key, &pos);
    if (pos != key.size() || v < 0) throw std::invalid_argument("bad vertex key: " + key);
    return v;
}

}  // namespace

RotationSystem GraphInput::effective_rotation() const {
    if (rotation) return *rotation;
    if (coords) return rotation_from_coordinates(graph, *coords);
    throw std::invalid_argument(
        "graph carries no embedding (rotation or coordinates required)");
}

GraphInput graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: need object with n and edges");
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: edge must be a pair");
        edges.push_back(Edge(e[0].get<int>(), e[1].get<int>()));
    }
    GraphInput gi{Graph(n, std::move(edges)), std::nullopt, std::nullopt, std::nullopt};
    if (j.contains("rotation")) {
        RotationSystem rot;
        rot.order.assign(n, {});
        for (const auto& [key, val] : j.at("rotation").items()) {
            Vertex v = parse_vertex_key(key);
            if (v >= n) throw std::invalid_argument("graph json: rotation key out of range");
            for (const auto& u : val) rot.order[v].push_back(u.get<int>());
        }
        check_rotation(gi.graph, rot);
        gi.rotation = std::move(rot);
    }
    if (j.contains("coords")) {
        std::vector<std::array<double, 2>> coords(n, {0.0, 0.0});
        std::vector<char> seen(n, 0);
        for (const auto& [key, val] : j.at("coords").items()) {
            Vertex v = parse_vertex_key(key);
            if (v >= n) throw std::invalid_argument("graph json: coords key out of range");
            coords[v] = {val[0].get<double>(), val[1].get<double>()};
            seen[v] = 1;
        }
        for (Vertex v = 0; v < n; ++v)
            if (!seen[v]) throw std::invalid_argument("graph json: missing coordinates");
        gi.coords = std::move(coords);
    }
    if (j.contains("outer_face")) {
        const auto& of = j.at("outer_face");
        gi.outer_face = Edge(of[0].get<int>(), of[1].get<int>());
    }
    return gi;
}

json graph_to_json(const GraphInput& gi) {
    json j;
    j["n"] = gi.graph.num_vertices();
    json edges = json::array();
    for (const Edge& e : gi.graph.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    if (gi.rotation) {
        json rot = json::object();
        for (Vertex v = 0; v < gi.graph.num_vertices(); ++v)
            if (!gi.rotation->order[v].empty()) rot[std::to_string(v)] = gi.rotation->order[v];
        j["rotation"] = std::move(rot);
    }
    if (gi.coords) {
        json c = json::object();
        for (Vertex v = 0; v < gi.graph.num_vertices(); ++v)
            c[std::to_string(v)] = {(*gi.coords)[v][0], (*gi.coords)[v][1]};
        j["coords"] = std::move(c);
    }
    if (gi.outer_face) j["outer_face"] = {gi.outer_face->u, gi.outer_face->v};
    return j;
}

DeltaMatchedInstance instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("delta") || !j.contains("tree") || !j.contains("matching"))
        throw std::invalid_argument("instance json: need delta, tree and matching");
    DeltaMatchedInstance inst;
    inst.delta = j.at("delta").get<int>();
    const json& ch = j.at("tree").at("children");
    Vertex max_id = -1;
    for (const auto& [key, val] : ch.items()) {
        max_id = std::max(max_id, parse_vertex_key(key));
        for (const auto& c : val) max_id = std::max(max_id, c.get<Vertex>());
    }
    for (const auto& p : j.at("matching")) {
        max_id = std::max(max_id, p[0].get<Vertex>());
        max_id = std::max(max_id, p[1].get<Vertex>());
    }
    int n = max_id + 1;
    if (n <= 0) throw std::invalid_argument("instance json: empty tree");
    inst.children.assign(n, {});
    std::vector<char> is_child(n, 0);
    for (const auto& [key, val] : ch.items()) {
        Vertex v = parse_vertex_key(key);
        for (const auto& c : val) {
            Vertex w = c.get<Vertex>();
            if (w < 0 || w >= n || is_child[w])
                throw std::invalid_argument("instance json: malformed children map");
            is_child[w] = 1;
            inst.children[v].push_back(w);
        }
    }
    inst.root = -1;
    for (Vertex v = 0; v < n; ++v)
        if (!is_child[v]) {
            if (inst.root >= 0)
                throw std::invalid_argument("instance json: more than one root");
            inst.root = v;
        }
    if (inst.root < 0) throw std::invalid_argument("instance json: no root (cycle in tree)");
    for (const auto& p : j.at("matching"))
        inst.matching.push_back({p[0].get<Vertex>(), p[1].get<Vertex>()});
    validate_instance(inst);
    return inst;
}

json instance_to_json(const DeltaMatchedInstance& inst) {
    json j;
    j["delta"] = inst.delta;
    json ch = json::object();
    for (Vertex v = 0; v < inst.num_vertices(); ++v)
        if (!inst.children[v].empty()) ch[std::to_string(v)] = inst.children[v];
    j["tree"] = {{"children", std::move(ch)}};
    json m = json::array();
    for (auto [a, b] : inst.matching) m.push_back({a, b});
    j["matching"] = std::move(m);
    return j;
}

json bigint_to_json(const BigInt& v) {
    if (fits_u64(v)) return json(to_u64(v));
    return json(to_string(v));
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_unsigned()) return BigInt(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("bad integer value in json");
}

QueueLayout layout_from_json(const json& j) {
    QueueLayout l;
    for (const auto& v : j.at("order")) l.order.push_back(v.get<Vertex>());
    for (const auto& q : j.at("queues")) {
        l.edges.push_back(Edge(q.at("edge")[0].get<int>(), q.at("edge")[1].get<int>()));
        l.queue_of.push_back(q.at("queue").get<int>());
    }
    if (j.contains("num_queues"))
        l.num_queues = j.at("num_queues").get<int>();
    else
        l.recount_queues();
    if (j.contains("bounds"))
        for (const auto& [key, val] : j.at("bounds").items()) l.bounds[key] = bigint_from_json(val);
    if (j.contains("layers")) {
        for (const auto& v : j.at("layers")) l.layers.push_back(v.get<int>());
    }
    return l;
}

json layout_to_json(const QueueLayout& layout, const SubdivisionRecord* provenance) {
    json j;
    j["order"] = layout.order;
    json queues = json::array();
    for (size_t i = 0; i < layout.edges.size(); ++i)
        queues.push_back(
            {{"edge", {layout.edges[i].u, layout.edges[i].v}}, {"queue", layout.queue_of[i]}});
    j["queues"] = std::move(queues);
    j["num_queues"] = layout.num_queues;
    if (!layout.bounds.empty()) {
        json b = json::object();
        for (const auto& [key, val] : layout.bounds) b[key] = bigint_to_json(val);
        j["bounds"] = std::move(b);
    }
    if (!layout.layers.empty()) j["layers"] = layout.layers;
    if (provenance) j["provenance"] = record_to_json(*provenance);
    return j;
}

json record_to_json(const SubdivisionRecord& rec) {
    json j;
    j["original_n"] = rec.original_n;
    json added = json::array();
    for (size_t v = 0; v < rec.origin.size(); ++v)
        if (rec.origin[v] != VertexOrigin::original)
            added.push_back({{"id", v}, {"origin", origin_name(rec.origin[v])}});
    j["added_vertices"] = std::move(added);
    json paths = json::array();
    for (const auto& p : rec.paths) {
        json e = {{"edge", {p.base.u, p.base.v}}, {"path", p.path}};
        if (p.gadget) e["gadget"] = true;
        paths.push_back(std::move(e));
    }
    j["edge_paths"] = std::move(paths);
    j["max_subdivisions"] = rec.max_subdivisions();
    return j;
}

std::string to_dot(const GraphInput& gi) {
    std::ostringstream os;
    os << "graph g {\n";
    if (gi.coords)
        for (Vertex v = 0; v < gi.graph.num_vertices(); ++v)
            os << "  " << v << " [pos=\"" << (*gi.coords)[v][0] << "," << (*gi.coords)[v][1]
               << "!\"];\n";
    for (const Edge& e : gi.graph.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace qlayout
