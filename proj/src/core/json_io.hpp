#pragma once

#include <json.hpp>

#include "graph.hpp"

namespace bp {

using Json = nlohmann::json;

// File formats. All emissions are canonical: nlohmann objects keep keys
// sorted, arrays carry ascending ids, so dump() round-trips bit-exactly.

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json layering_to_json(const Layering& l);
Layering layering_from_json(const Json& j);

std::string dump_canonical(const Json& j);
Json parse_json(const std::string& text);

// FNV-1a over the canonical dump; used for input hashes in run reports.
std::uint64_t fnv1a64(const std::string& data);
std::string hex64(std::uint64_t v);

}  // namespace bp
