#pragma once

#include <vector>

#include "graph.hpp"
#include "json_io.hpp"

namespace bp {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;  // node -> sorted vertex set
    std::vector<Edge> tree_edges;        // over node ids
    int root = 0;

    int node_count() const { return static_cast<int>(bags.size()); }
    int width() const;  // max bag size - 1
    void validate(const Graph& g) const;

    Json to_json() const;
    static TreeDecomposition from_json(const Json& j);
};

// Rooted tree-partition: bags indexed by tree nodes, quotient edges only
// along tree edges. Width here is the partition width (max bag size), the
// convention the bounds are stated in. Bags may be empty.
struct RootedTreePartition {
    std::vector<int> node_parent;        // node -> parent node, -1 at root
    std::vector<std::vector<int>> bags;  // node -> sorted vertex set
    int root = 0;

    int node_count() const { return static_cast<int>(bags.size()); }
    int width() const;
    int tree_max_degree() const;
    int root_degree() const;
    std::vector<int> node_depth() const;

    void validate(const Graph& g) const;       // partition + edges along tree edges
    bool is_detached(const Graph& g) const;    // definition scan over parent-child pairs
    Partition to_partition() const;            // parts = non-empty bags
};

// Grows S until no outside vertex sees two components of the grown set.
// |result| <= 2|S|-1; merging vertex choice is lowest-id-first.
std::vector<int> detach_expand(const Graph& g, const std::vector<int>& s);

struct SeparatorSplit {
    std::vector<int> side1, side2;  // vertex sets of G1 and G2 (both contain the bag)
    std::vector<int> separator;     // the chosen bag
};

// Centroid-bag balanced separator: G1 u G2 = G, |V(G1 n G2)| <= width+1, and
// |S n V(Gi)| <= (2/3)|S|. The guarantee needs |S| >= 15(width+1); callers in
// heart's Case 3 satisfy it.
SeparatorSplit balanced_separator(const Graph& g, const std::vector<int>& s,
                                  const TreeDecomposition& td);

struct HeartStats {
    int max_depth = 0;
    int nodes = 0;
    int case1 = 0, case2 = 0, case3 = 0;
};

// Appendix construction: detached tree-partition with the five bounds
//   max tree degree <= 15d, bag size <= 90kd, S inside the root bag,
//   |root bag| <= 3|S|-5k, root degree <= |S|/2k - 1,
// asserted on return at every recursion level.
RootedTreePartition heart(const Graph& g, const std::vector<int>& s, int k, int d,
                          const TreeDecomposition& td, HeartStats* stats = nullptr);

// Detached tree-partition of width <= 90(width+1)Delta with tree degree
// <= 15*Delta, where width is the width of the supplied decomposition.
RootedTreePartition improved_tree_partition(const Graph& g, const TreeDecomposition& td,
                                            HeartStats* stats = nullptr);

// Red/blue level colouring on top of improved_tree_partition; the result is
// verified 2-blocking (exact depth-3 search) with width at most
// 1350(width+1)Delta^2 before being returned.
Partition two_blocking_partition(const Graph& g, const TreeDecomposition& td);

// Min-fill heuristic decomposition for arbitrary inputs; no optimality claim.
TreeDecomposition min_fill_tree_decomposition(const Graph& g);

// Restriction of a decomposition to an induced subgraph (vertices relabelled
// by `back_map` ascending order, as produced by Graph::induced).
TreeDecomposition restrict_tree_decomposition(const TreeDecomposition& td,
                                              const std::vector<int>& back_map);

}  // namespace bp
