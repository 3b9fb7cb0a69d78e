#include "json_io.hpp"

namespace bp {

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    BP_REQUIRE(j.is_object() && j.contains("n") && j.contains("edges"), "graph json needs n, edges");
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        BP_REQUIRE(e.is_array() && e.size() == 2, "edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(n, edges);
}

Json partition_to_json(const Partition& p) {
    Json j;
    j["part_of"] = p.part_of_vector();
    return j;
}

Partition partition_from_json(const Json& j) {
    BP_REQUIRE(j.is_object() && j.contains("part_of"), "partition json needs part_of");
    return Partition::from_part_of(j.at("part_of").get<std::vector<int>>());
}

Json layering_to_json(const Layering& l) {
    Json j;
    j["root"] = l.root;
    j["layer_of"] = l.layer_of;
    return j;
}

Layering layering_from_json(const Json& j) {
    BP_REQUIRE(j.is_object() && j.contains("root") && j.contains("layer_of"),
               "layering json needs root, layer_of");
    Layering l;
    l.root = j.at("root").get<int>();
    l.layer_of = j.at("layer_of").get<std::vector<int>>();
    return l;
}

std::string dump_canonical(const Json& j) { return j.dump(); }

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("bad json: ") + e.what());
    }
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

}  // namespace bp
