#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace bp {

using Edge = std::pair<int, int>;  // stored normalised, u < v

// Simple undirected graph over dense vertex ids 0..n-1. No loops, no parallel
// edges, neighbour lists sorted ascending. Immutable once built; every
// operation below is a pure query.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<Edge>& edges);
    static Graph empty(int n) { return from_edges(n, {}); }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }
    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }
    int max_degree() const;
    bool has_edge(int u, int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }

    // Edges normalised (u < v), sorted lexicographically.
    std::vector<Edge> edges() const;

    bool is_connected() const;

    // Subgraph induced on `keep`; ids are relabelled to 0..|keep|-1 following
    // the ascending order of `keep`. `back_map[new] = old`.
    Graph induced(const std::vector<int>& keep, std::vector<int>* back_map = nullptr) const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    void check_vertex(int v) const {
        if (!has_vertex(v)) throw input_error("vertex " + std::to_string(v) + " out of range");
    }

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// BFS layering from a root: layer_of[v] = dist(root, v).
struct Layering {
    int root = -1;
    std::vector<int> layer_of;

    int max_layer() const;
};

// Rooted tree over (a subset of) the host graph's vertices.
// parent[v] == kRoot for the root, kAbsent for vertices not in the tree.
struct RootedTree {
    static constexpr int kRoot = -1;
    static constexpr int kAbsent = -2;

    int root = -1;
    std::vector<int> parent;  // size = host n
    std::vector<int> depth;   // valid where parent != kAbsent

    bool contains(int v) const {
        return v >= 0 && v < static_cast<int>(parent.size()) && parent[v] != kAbsent;
    }
    std::vector<int> vertices() const;
    std::vector<Edge> edges() const;
    int size() const;

    void validate() const;  // exactly one root, acyclic parents, consistent depths
};

// Vertex partition. Part ids are non-negative but need not be dense: the ids
// double as the labelling used by h_partition_width_check. The roster lists
// non-empty parts only.
class Partition {
public:
    Partition() = default;

    static Partition from_part_of(std::vector<int> part_of);
    static Partition from_parts(int n, const std::vector<std::vector<int>>& parts);
    static Partition singletons(int n);

    int vertex_count() const { return static_cast<int>(part_of_.size()); }
    int part_of(int v) const { return part_of_.at(v); }
    const std::vector<int>& part_of_vector() const { return part_of_; }

    // Ids of non-empty parts, ascending.
    const std::vector<int>& part_ids() const { return ids_; }
    const std::vector<int>& part_vertices(int part_id) const;
    int part_count() const { return static_cast<int>(ids_.size()); }
    int width() const;

    bool operator==(const Partition& o) const { return part_of_ == o.part_of_; }

private:
    std::vector<int> part_of_;
    std::vector<int> ids_;
    std::vector<std::vector<int>> members_;  // indexed by part id (sparse slots empty)
};

// ---- operations ----

// Errors if some vertex is unreachable from r (the layering would be partial).
Layering bfs_layering(const Graph& g, int r);

// Parent of each non-root vertex is its lowest-id neighbour in the previous
// layer.
RootedTree bfs_spanning_tree(const Graph& g, const Layering& layering);

inline constexpr int kUnreached = -1;

// Multi-source BFS distances from `sources`; kUnreached where not reachable.
// `allowed(v)` restricts the traversal (sources must pass it too).
std::vector<int> bfs_distances(const Graph& g, std::span<const int> sources);

// Exact distance between two vertex sets; nullopt = infinite.
std::optional<int> distance(const Graph& g, std::span<const int> u1, std::span<const int> u2);
std::optional<int> distance(const Graph& g, int u, int v);

Graph quotient(const Graph& g, const Partition& p);
// Quotient plus the mapping part id -> quotient vertex id.
Graph quotient(const Graph& g, const Partition& p, std::vector<int>* part_to_vertex);

// Strong product. Vertex (a, b) gets id a * B.n + b.
Graph strong_product(const Graph& a, const Graph& b);
Graph complete_graph(int n);

bool is_connected_partition(const Graph& g, const Partition& p);

// True iff width(p) <= max_width and the quotient, labelled by part ids, is a
// subgraph of h under the identity labelling.
bool h_partition_width_check(const Graph& g, const Partition& p, const Graph& h, int max_width);

}  // namespace bp
